"""Search coconic arrangements (1..6 in order on a circle, 7 free) matching
the golden rows of triples with 7 that can become aligned."""
from fractions import Fraction as F
import itertools, random, math

from rp2conf import golden
from rp2conf.exact import det3


def circle(t):
    t = F(t)
    d = t.denominator
    return ((d * d - t.numerator**2), 2 * t.numerator * d, (d * d + t.numerator**2))


def same_triangle(pts, l, n, m):
    ref = None
    for p, v in pts.items():
        if p in (l, n, m):
            continue
        s = (det3(v, pts[n], pts[m]), det3(v, pts[m], pts[l]), det3(v, pts[l], pts[n]))
        s = tuple((x > 0) - (x < 0) for x in s)
        if 0 in s:
            return None
        if s[0] < 0:
            s = tuple(-x for x in s)
        if ref is None:
            ref = s
        elif s != ref:
            return False
    return True


def triples7(pts):
    out = set()
    for a, b in itertools.combinations(range(1, 7), 2):
        r = same_triangle(pts, a, b, 7)
        if r is None:
            return None
        if r:
            out.add(tuple(sorted((a, b, 7))))
    return frozenset(out)


rows = {z: frozenset(tuple(sorted(t)) for t in ts) for z, ts in golden.coconic_triples().items()}
rng = random.Random(1)
found = {}
for trial in range(4000):
    ts = sorted(F(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(6))
    if len(set(ts)) < 6:
        continue
    # increasing parameter = increasing angle on (-pi, pi)
    hexa = {i + 1: circle(t) for i, t in enumerate(ts)}
    for _ in range(20):
        q = (rng.randint(-300, 300), rng.randint(-300, 300), rng.choice([100, 30, 10, 3, 1, 0, -1]))
        pts = dict(hexa)
        pts[7] = q
        tr = triples7(pts)
        if tr is None:
            continue
        for z, r in rows.items():
            if r == tr and z not in found:
                found[z] = (ts, q)
print(sorted(found))
for z in sorted(found):
    print(z, found[z])

"""Search rational positions of point 1 reproducing each golden pencil row.

Points 2, 5, 3, 6, 4 sit on the unit circle in this cyclic order.
"""
from fractions import Fraction as F
import itertools

from rp2conf import classify as C, golden
from rp2conf.exact import canonical_cycle


def circle(t):
    t = F(t)
    return ((1 - t * t) * t.denominator**2, 2 * t * t.denominator**2, (1 + t * t) * t.denominator**2)


def ipt(p):
    import math
    d = math.lcm(*(F(x).denominator for x in p))
    return tuple(int(F(x) * d) for x in p)


# parameters along the circle in increasing angle: 2,5,3,6,4
params = [F(1, 5), F(3, 4), F(2), F(-3), F(-1, 2)]
ring = dict(zip([2, 5, 3, 6, 4], [circle(t) for t in params]))


def row_key(members):
    return canonical_cycle([(m.line[1], canonical_cycle(m.word)) for m in members])


rows = {z: row_key(ms) for z, ms in golden.cubic_pencils().items()}
found = {}
for num in itertools.product(range(-24, 25), repeat=2):
    p = (F(num[0], 8), F(num[1], 8), 1)
    pts = dict(ring)
    pts[1] = ipt(p)
    try:
        d = C.six_data(pts)
    except Exception:
        continue
    key = d.pencil(1)
    for z, r in rows.items():
        if r == key:
            found.setdefault(z, []).append(pts[1])
for z in sorted(rows):
    print(z, len(found.get(z, [])), found.get(z, [])[:3])
print(ring)

from rp2conf.pencils import conic_pencil_after_cremona


def conic_row_key(members):
    out = []
    for m in members:
        if m.line is not None and m.word is None:
            out.append(("lines", frozenset(frozenset(x) for x in m.line)))
        else:
            out.append(("conic", canonical_cycle(m.word)))
    return canonical_cycle(out)


def computed_conic_key(seq):
    out = []
    for m in seq:
        if m.lines is not None:
            out.append(("lines", frozenset(m.lines)))
        else:
            out.append(("conic", m.word.canonical))
    return canonical_cycle(out)


crows = golden.conic_pencils()
six = {}
for r in golden.six_lists():
    six.setdefault(r.zone, []).append(r)
chosen = {}
for z in sorted(rows):
    base, members = crows[z]
    want = conic_row_key(members)
    for p1 in found.get(z, []):
        pts = dict(ring)
        pts[1] = p1
        d = C.six_data(pts)
        inside = d.interior[1]
        if inside != (z in "ABCD"):
            continue
        try:
            got = computed_conic_key(conic_pencil_after_cremona(pts, 1, base))
        except Exception as e:
            continue
        if got != want:
            continue
        ok = True
        if z in six:
            for r in six[z]:
                if d.interior[r.node] != r.interior or canonical_cycle(r.conic) != d.words[r.node]:
                    ok = False
                if d.pencil(r.node) != canonical_cycle([(m.line[1], canonical_cycle(m.word)) for m in r.members]):
                    ok = False
        if ok:
            chosen[z] = p1
            break
print("chosen", chosen)

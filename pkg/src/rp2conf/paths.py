"""Exact motions of a single point among the lines and conics of the others.

The moving point ``x`` travels along straight projective segments
``P(t) = (1 - t) * a + t * b`` between integer vectors.  Along a segment every
determinant ``det(P(t), p, q)`` is linear in ``t`` and every value ``Q(P(t))``
of a conic through five of the other points is quadratic, so cleanliness of a
segment is decided exactly.

Targets on a wall are found by restricting all obstacles to the wall curve
(a line, or a conic parametrized from one of its points), isolating their
traces, and picking one rational point in every gap.  Waypoints are placed
just off each such sample, and a breadth-first search over clean segments
decides which walls bound the region of ``x``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from . import sturm
from .exact import QUAD_MONOMIALS, conic_coeffs_through, conic_det8, conic_eval, cross, det3, integer_vector, positive_multiple

Vec = tuple[int, int, int]


class PathBlocked(RuntimeError):
    """No clean path to the requested wall was found."""


# ---------------------------------------------------------------------------
# polynomials along segments


def line_poly(a, b, p, q) -> list:
    """det(P(t), p, q) in increasing degree."""
    c0 = det3(a, p, q)
    return [c0, det3(b, p, q) - c0]


def conic_poly(coeffs, a, b) -> list:
    qa = conic_eval(coeffs, a)
    qb = conic_eval(coeffs, b)
    mixed = conic_eval(coeffs, tuple(x + y for x, y in zip(a, b))) - qa - qb
    return [qa, mixed - 2 * qa, qa + qb - mixed]


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _open_roots(p, lo, hi) -> bool:
    """Whether a polynomial of degree one or two vanishes in (lo, hi)."""
    if len(p) == 2:
        r = Fraction(-p[0]) / p[1]
        return lo < r < hi
    c, b, a = p
    flo, fhi = sturm.evaluate(p, lo), sturm.evaluate(p, hi)
    if flo == 0 or fhi == 0:
        e = lo if flo == 0 else hi
        r = Fraction(-b) / a - e
        return r != e and lo < r < hi
    if _sgn(flo) != _sgn(fhi):
        return True
    if b * b - 4 * a * c < 0:
        return False
    v = Fraction(-b) / (2 * a)
    if not lo < v < hi:
        return False
    return _sgn(sturm.evaluate(p, v)) != _sgn(flo)


def has_root(poly, lo, hi, closed_lo=True, closed_hi=True) -> bool:
    """Whether ``poly`` (degree at most two) vanishes in the interval."""
    p = sturm.trim(poly)
    if not p:
        return True
    if len(p) == 1:
        return False
    if len(p) > 3:
        raise ValueError("degree at most two expected")
    if closed_lo and sturm.evaluate(p, lo) == 0:
        return True
    if closed_hi and sturm.evaluate(p, hi) == 0:
        return True
    return _open_roots(p, lo, hi)


# ---------------------------------------------------------------------------
# obstacles


@dataclass(frozen=True)
class Obstacle:
    """A line through two of the fixed points or a conic through five."""

    labels: tuple
    coeffs: tuple  # line coordinates or conic coefficients

    @property
    def is_line(self) -> bool:
        return len(self.labels) == 2

    def value(self, v) -> int:
        if self.is_line:
            return sum(c * x for c, x in zip(self.coeffs, v))
        return conic_eval(self.coeffs, v)

    def along(self, a, b) -> list:
        if self.is_line:
            c0 = self.value(a)
            return [c0, self.value(b) - c0]
        return conic_poly(self.coeffs, a, b)


def obstacles(pts: Mapping[Hashable, Vec], x, conics: bool = True) -> list[Obstacle]:
    """Lines and smooth conics through the points other than ``x``; curves
    through more points than needed (six coconic points) are kept once."""
    others = [y for y in pts if y != x]
    out = []
    seen = set()
    cands = [((p, q), cross(pts[p], pts[q])) for p, q in itertools.combinations(others, 2)]
    if conics:
        cands += [(five, conic_coeffs_through(*(pts[y] for y in five))) for five in itertools.combinations(others, 5)]
    for labels, c in cands:
        if not any(c) or (len(labels) == 5 and conic_det8(c) == 0):
            continue
        key = integer_vector(c)
        if key not in seen:
            seen.add(key)
            out.append(Obstacle(labels, c))
    return out


def segment_clean(obs: Sequence[Obstacle], a, b, skip: Obstacle | None = None, open_end: bool = False) -> bool:
    """No obstacle (except ``skip``) vanishes on [0, 1] (or [0, 1) if
    ``open_end``) along the segment from ``a`` to ``b``."""
    zero, one = Fraction(0), Fraction(1)
    for o in obs:
        if o is skip:
            continue
        if has_root(o.along(a, b), zero, one, True, not open_end):
            return False
    return True


# ---------------------------------------------------------------------------
# parametrized wall curves


def _padd(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _pscale(p, c):
    return [c * v for v in p]


def _trace(o: Obstacle, coords: Sequence[list]) -> list:
    """Obstacle restricted to a curve given by polynomial coordinates."""
    if o.is_line:
        acc: list = []
        for c, p in zip(o.coeffs, coords):
            acc = _padd(acc, _pscale(p, c))
        return sturm.trim(acc)
    acc = []
    for c, exps in zip(o.coeffs, QUAD_MONOMIALS):
        if not c:
            continue
        term = [c]
        for k, e in enumerate(exps):
            for _ in range(e):
                term = sturm.mul(term, coords[k])
        acc = _padd(acc, term)
    return sturm.trim(acc)


def _eval_coords(coords, s: Fraction) -> Vec:
    """Integer point of a polynomial curve at the rational parameter s."""
    deg = max(len(c) for c in coords) - 1
    u, v = s.numerator, s.denominator
    return positive_multiple([sum(coef * u**i * v ** (deg - i) for i, coef in enumerate(c)) for c in coords])


def _eval_infinity(coords) -> Vec:
    deg = max(len(c) for c in coords) - 1
    return positive_multiple([c[deg] if len(c) > deg else 0 for c in coords])


@dataclass
class WallCurve:
    """A wall curve with polynomial coordinates in one parameter."""

    obstacle: Obstacle
    coords: list
    special: list = field(default_factory=list)  # known parameters of labelled points


def line_curve(o: Obstacle, pts) -> WallCurve:
    n, m = (pts[y] for y in o.labels)
    return WallCurve(o, [[n[i], m[i]] for i in range(3)], [Fraction(0)])


def _grad(c, x):
    c00, c11, c22, c01, c02, c12 = c
    x0, x1, x2 = x
    return (
        2 * c00 * x0 + c01 * x1 + c02 * x2,
        2 * c11 * x1 + c01 * x0 + c12 * x2,
        2 * c22 * x2 + c02 * x0 + c12 * x1,
    )


def conic_curve(o: Obstacle, pts) -> WallCurve:
    """Rational parametrization from the first base point ``a``: the line
    through ``a`` and ``d = e1 + s e2`` meets the conic again at
    ``Q(d) a - 2 B(a, d) d``."""
    c = o.coeffs
    a = pts[o.labels[0]]
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    e1, e2 = next((u, w) for u, w in itertools.combinations(basis, 2) if det3(a, u, w) != 0)
    d = [[e1[i], e2[i]] for i in range(3)]
    qd = _trace(o, d)
    g = _grad(c, a)  # 2 B(a, d) = grad Q(a) . d
    b2 = sturm.trim(_padd(_padd(_pscale(d[0], g[0]), _pscale(d[1], g[1])), _pscale(d[2], g[2])))
    coords = [sturm.trim(_padd(_pscale(qd, a[i]), _pscale(sturm.mul(b2, d[i]), -1))) for i in range(3)]
    special = []
    if len(b2) == 2:
        special.append(Fraction(-b2[0], b2[1]))  # tangent at a
    for y in o.labels[1:]:
        lin = [det3(a, e1, pts[y]), det3(a, e2, pts[y])]
        if lin[1]:
            special.append(Fraction(-lin[0], lin[1]))
    return WallCurve(o, coords, special)


# ---------------------------------------------------------------------------
# root bookkeeping


class _Root:
    """A real root kept exactly or as an isolating interval (lo, hi]."""

    def __init__(self, poly, lo, hi):
        self.poly, self.lo, self.hi = poly, Fraction(lo), Fraction(hi)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def narrow(self):
        if not self.exact:
            self.lo, self.hi = sturm.refine(self.poly, (self.lo, self.hi), (self.hi - self.lo) / 4)


def _deflate(poly, r: Fraction):
    """Divide out (s - r) while it is a factor."""
    p = [Fraction(c) for c in sturm.trim(poly)]
    while len(p) > 1 and sturm.evaluate(p, r) == 0:
        q = [Fraction(0)] * (len(p) - 1)
        acc = Fraction(0)
        for i in range(len(p) - 1, 0, -1):
            acc = acc * r + p[i]
            q[i - 1] = acc
        p = q
    return p


def _squarefree(p):
    g = sturm.gcd(p, sturm.derivative(p))
    return p if len(g) <= 1 else sturm.quotient(p, g)


def _roots(poly, known: Sequence[Fraction]) -> list[_Root]:
    p = sturm.trim(poly)
    out = []
    for r in known:
        if len(p) > 1 and sturm.evaluate(p, r) == 0:
            out.append(_Root([1], r, r))
            p = _deflate(p, r)
    if len(p) <= 1:
        return out
    if len(p) == 2:
        r = Fraction(-p[0]) / p[1]
        return out + [_Root([1], r, r)]
    if len(p) == 3:
        c, b, a = (Fraction(v) for v in p)
        disc = b * b - 4 * a * c
        if disc < 0:
            return out
        rn, rd = math.isqrt(disc.numerator), math.isqrt(disc.denominator)
        if rn * rn == disc.numerator and rd * rd == disc.denominator:
            sq = Fraction(rn, rd)
            return out + [_Root([1], r, r) for r in {(-b + sq) / (2 * a), (-b - sq) / (2 * a)}]
    p = _squarefree(p)
    return out + [_Root(p, lo, hi) for lo, hi in sturm.isolate_roots(p)]


def _coincide(u: _Root, r: _Root) -> bool:
    lo, hi = max(u.lo, r.lo), min(u.hi, r.hi)
    if lo > hi:
        return False
    if u.exact or r.exact:
        e, other = (u, r) if u.exact else (r, u)
        return other.exact and other.lo == e.lo or (not other.exact and sturm.evaluate(other.poly, e.lo) == 0)
    g = sturm.gcd(u.poly, r.poly)
    if len(g) <= 1:
        return False
    return sturm.evaluate(g, lo) == 0 or sturm.count_real_roots(g, lo, hi) > 0


def _separate(roots: list[_Root]) -> list[_Root]:
    """Sort, merge coinciding roots and narrow intervals until disjoint."""
    uniq: list[_Root] = []
    for r in roots:
        if r.exact and any(u.exact and u.lo == r.lo for u in uniq):
            continue
        uniq.append(r)
    rounds = 0
    while True:
        uniq.sort(key=lambda r: (r.lo, r.hi))
        clash = [i for i in range(len(uniq) - 1) if uniq[i].hi >= uniq[i + 1].lo]
        if not clash:
            return uniq
        rounds += 1
        if rounds % 8 == 0:
            drop = set()
            for i in clash:
                if i not in drop and _coincide(uniq[i], uniq[i + 1]):
                    # keep an exact representative when there is one
                    drop.add(i if uniq[i + 1].exact else i + 1)
            if drop:
                uniq = [u for k, u in enumerate(uniq) if k not in drop]
                continue
        for i in clash:
            uniq[i].narrow()
            uniq[i + 1].narrow()


def gap_samples(curve: WallCurve, obs: Sequence[Obstacle], per_gap: int = 1) -> list[Vec]:
    """One point of the wall curve in every gap between obstacle traces."""
    roots: list[_Root] = [_Root([1], s, s) for s in curve.special]
    for o in obs:
        if o is curve.obstacle:
            continue
        t = _trace(o, curve.coords)
        if len(t) > 1:
            roots.extend(_roots(t, curve.special))
    ordered = _separate(roots)
    if not ordered:
        return [_eval_coords(curve.coords, Fraction(0)), _eval_infinity(curve.coords)]
    lo, hi = ordered[0].lo, ordered[-1].hi
    width = max(hi - lo, Fraction(1))
    params = [lo - width * k / per_gap for k in range(1, per_gap + 1)]
    params += [hi + width * k / per_gap for k in range(1, per_gap + 1)]
    for a, b in zip(ordered, ordered[1:]):
        params += [a.hi + (b.lo - a.hi) * k / (per_gap + 1) for k in range(1, per_gap + 1)]
    out = []
    for s in params:
        v = _eval_coords(curve.coords, s)
        if any(v):
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# the motion graph of one point


@dataclass(frozen=True)
class WallTarget:
    obstacle: Obstacle
    point: Vec  # exactly on the wall
    waypoint: Vec  # just off the wall, on the side of the moving point


class MotionGraph:
    """Walls reachable by ``x`` without meeting any other degeneracy."""

    DELTAS = (Fraction(1, 8), Fraction(1, 128), Fraction(1, 4096), Fraction(1, 2**20), Fraction(1, 2**40))

    def __init__(self, pts: Mapping[Hashable, Vec], x, *, conics: bool = True, per_gap: int = 4):
        self.pts = dict(pts)
        self.x = x
        self.start = tuple(pts[x])
        self.obs = obstacles(pts, x, conics)
        self._lines = [o for o in self.obs if o.is_line]
        self._side = [_sgn(o.value(self.start)) for o in self._lines]
        self._conics = [o for o in self.obs if not o.is_line]
        self._conic_side = [_sgn(o.value(self.start)) for o in self._conics]
        self.targets: list[WallTarget] = []
        for o in self.obs:
            curve = line_curve(o, pts) if o.is_line else conic_curve(o, pts)
            for v in gap_samples(curve, self.obs, per_gap if not o.is_line else 1):
                for w in (v, tuple(-c for c in v)):
                    t = self._attach(o, w)
                    if t is not None:
                        self.targets.append(t)
        self._prev = self._search()

    def _same_region(self, v) -> bool:
        # sign vectors are compared as vectors, not up to a global sign: the
        # waypoint must be in the same half of the sphere as the start
        if [_sgn(o.value(v)) for o in self._lines] != self._side:
            return False
        return all(_sgn(o.value(v)) == s for o, s in zip(self._conics, self._conic_side))

    def _directions(self):
        yield self.start
        for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            yield e
            yield tuple(-c for c in e)

    def _attach(self, o: Obstacle, w) -> WallTarget | None:
        """A waypoint near ``w`` (on obstacle ``o``) in the region of the start."""
        if any(c.value(w) == 0 for c in self.obs if c is not o):
            return None
        for d in self.DELTAS:
            for v in self._directions():
                p = positive_multiple([(1 - d) * a + d * b for a, b in zip(w, v)])
                if o.value(p) == 0 or not self._same_region(p):
                    continue
                if segment_clean(self.obs, p, w, skip=o):
                    return WallTarget(o, tuple(w), p)
        return None

    def _search(self) -> dict[int, int | None]:
        """Breadth-first tree over the start (node 0) and the waypoints."""
        nodes = [self.start] + [t.waypoint for t in self.targets]
        prev: dict[int, int | None] = {0: None}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in range(len(nodes)):
                if j not in prev and segment_clean(self.obs, nodes[i], nodes[j]):
                    prev[j] = i
                    queue.append(j)
        return prev

    def reachable(self) -> list[WallTarget]:
        return [t for k, t in enumerate(self.targets) if k + 1 in self._prev]

    def walls(self) -> set[tuple]:
        """Label sets of the reachable walls: pairs for lines, quintuples for conics."""
        return {tuple(sorted(t.obstacle.labels)) for t in self.reachable()}

    def path_to(self, labels) -> list[Vec]:
        """Polyline from the start to a point exactly on the wall ``labels``."""
        want = tuple(sorted(labels))
        for k, t in enumerate(self.targets):
            if k + 1 in self._prev and tuple(sorted(t.obstacle.labels)) == want:
                out = [t.point]
                i: int | None = k + 1
                nodes = [self.start] + [u.waypoint for u in self.targets]
                while i is not None:
                    out.append(nodes[i])
                    i = self._prev[i]
                return out[::-1]
        raise PathBlocked(f"no clean path from {self.x} to the wall {want}")

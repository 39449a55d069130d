"""Exact rational geometry of the real projective plane.

Points, lines and conics carry integer coordinates internally: every rational
input is cleared of denominators and reduced to a primitive vector, so all
predicates below are evaluated with Python integers and never round.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Hashable, Iterable, Mapping, Sequence


class GeometryError(ValueError):
    """Base class for degenerate-input errors of the exact kernel."""


class IdenticalInputs(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class NotNormalized(GeometryError):
    pass


class PointNotOnConic(GeometryError):
    pass


class CoincidentWithCenter(GeometryError):
    pass


class SharedDirection(GeometryError):
    pass


class BasePointInput(GeometryError):
    pass


class CollinearBase(GeometryError):
    pass


class ChartThroughPoint(GeometryError):
    pass


def _primitive(values: Sequence[int | Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector whose first
    nonzero entry is positive."""
    fr = [Fraction(v) for v in values]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise GeometryError("zero vector is not a projective object")
    first = next(v for v in ints if v)
    if first < 0:
        g = -g
    return tuple(v // g for v in ints)


def primitive_ints(values: Sequence[int]) -> tuple[int, ...]:
    """Fast path of :func:`_primitive` for integer vectors."""
    g = 0
    for v in values:
        g = gcd(g, v)
    if g == 0:
        raise GeometryError("zero vector is not a projective object")
    first = next(v for v in values if v)
    if first < 0:
        g = -g
    if g == 1:
        return tuple(values)
    return tuple(v // g for v in values)


@dataclass(frozen=True, slots=True)
class Point:
    """A point of RP^2, stored as a primitive integer vector."""

    x0: int
    x1: int
    x2: int

    def __init__(self, x0, x1, x2):
        if all(type(c) is int for c in (x0, x1, x2)):
            v = primitive_ints((x0, x1, x2))
        else:
            v = _primitive((x0, x1, x2))
        object.__setattr__(self, "x0", v[0])
        object.__setattr__(self, "x1", v[1])
        object.__setattr__(self, "x2", v[2])

    @property
    def v(self) -> tuple[int, int, int]:
        return (self.x0, self.x1, self.x2)

    @classmethod
    def affine(cls, x, y) -> "Point":
        return cls(x, y, 1)

    def affine_coords(self) -> tuple[Fraction, Fraction]:
        if self.x2 == 0:
            raise ChartThroughPoint(f"{self} lies on the line at infinity")
        return Fraction(self.x0, self.x2), Fraction(self.x1, self.x2)

    def __repr__(self) -> str:
        return f"({self.x0}:{self.x1}:{self.x2})"


@dataclass(frozen=True, slots=True)
class Line:
    """A line a0*x0 + a1*x1 + a2*x2 = 0, stored as a primitive integer vector."""

    a0: int
    a1: int
    a2: int

    def __init__(self, a0, a1, a2):
        v = _primitive((a0, a1, a2))
        object.__setattr__(self, "a0", v[0])
        object.__setattr__(self, "a1", v[1])
        object.__setattr__(self, "a2", v[2])

    @property
    def v(self) -> tuple[int, int, int]:
        return (self.a0, self.a1, self.a2)

    def __call__(self, p) -> int:
        x = _vec(p)
        return self.a0 * x[0] + self.a1 * x[1] + self.a2 * x[2]

    def __repr__(self) -> str:
        return f"[{self.a0}:{self.a1}:{self.a2}]"


def _vec(p) -> tuple[int, int, int]:
    return p.v if hasattr(p, "v") else tuple(p)


# ---------------------------------------------------------------------------
# small integer linear algebra


def cross(a, b) -> tuple[int, int, int]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def dot(a, b) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def det3(a, b, c) -> int:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def sign(x) -> int:
    return (x > 0) - (x < 0)


def adjugate3(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Adjugate of a 3x3 matrix given by rows (m^-1 up to det)."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]


def matvec(m, x) -> tuple[int, ...]:
    return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in m)


def nullspace(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right null space of a rational matrix.

    Fraction-free (Bareiss) elimination on an integer copy; the returned
    basis vectors are rational but exact.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    m = [_integer_row(r) for r in rows]
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i == r:
                continue
            if i > r:
                m[i] = [(m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev for j in range(ncols)]
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    # back substitution in rationals on the echelon form
    ech = [[Fraction(x) for x in row] for row in m[:r]]
    for k in range(r - 1, -1, -1):
        c = pivots[k]
        pv = ech[k][c]
        ech[k] = [x / pv for x in ech[k]]
        for i in range(k):
            f = ech[i][c]
            if f:
                ech[i] = [a - f * b for a, b in zip(ech[i], ech[k])]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -ech[k][fcol]
        basis.append(v)
    return basis


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rows[0]) - len(nullspace(rows))


def _integer_row(row) -> list[int]:
    fr = [Fraction(x) for x in row]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    return [int(f * den) for f in fr]


def integer_vector(values: Sequence) -> tuple[int, ...]:
    """Primitive integer multiple of a rational vector (sign normalized)."""
    return _primitive(values)


def positive_multiple(values: Sequence) -> tuple[int, ...]:
    """Primitive integer vector that is a positive multiple of ``values``.

    Unlike :func:`integer_vector` the sign is kept, which matters whenever the
    vector is an endpoint of a segment rather than a projective point."""
    v = _primitive(values)
    first = next(Fraction(x) for x in values if x)
    return v if first > 0 else tuple(-c for c in v)


# ---------------------------------------------------------------------------
# points and lines


def collinear(p, q, r) -> bool:
    return det3(_vec(p), _vec(q), _vec(r)) == 0


def line_through(p, q) -> Line:
    c = cross(_vec(p), _vec(q))
    if c == (0, 0, 0):
        raise IdenticalInputs(f"{p} and {q} coincide")
    return Line(*c)


def meet(l1: Line, l2: Line) -> Point:
    c = cross(l1.v, l2.v)
    if c == (0, 0, 0):
        raise IdenticalInputs(f"{l1} and {l2} coincide")
    return Point(*c)


# ---------------------------------------------------------------------------
# conics

# monomial order of a ternary quadratic form
QUAD_MONOMIALS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


@dataclass(frozen=True, slots=True)
class Conic:
    """Ternary quadratic form c00 x0^2 + c11 x1^2 + c22 x2^2 + c01 x0x1 +
    c02 x0x2 + c12 x1x2 with primitive integer coefficients.

    ``normalized`` marks a smooth form scaled so that its matrix has negative
    determinant; for such a form Q < 0 exactly on the interior (disk side).
    """

    coeffs: tuple[int, int, int, int, int, int]
    normalized: bool = False

    def __call__(self, p) -> int:
        x0, x1, x2 = _vec(p)
        c00, c11, c22, c01, c02, c12 = self.coeffs
        return (
            c00 * x0 * x0 + c11 * x1 * x1 + c22 * x2 * x2
            + c01 * x0 * x1 + c02 * x0 * x2 + c12 * x1 * x2
        )

    def det8(self) -> int:
        """Eight times the determinant of the symmetric matrix."""
        return conic_det8(self.coeffs)

    def matrix(self) -> list[list[Fraction]]:
        c00, c11, c22, c01, c02, c12 = (Fraction(c) for c in self.coeffs)
        return [[c00, c01 / 2, c02 / 2], [c01 / 2, c11, c12 / 2], [c02 / 2, c12 / 2, c22]]

    def gradient(self, p) -> tuple[int, int, int]:
        return conic_gradient(self.coeffs, _vec(p))

    def normalize(self) -> "Conic":
        d = self.det8()
        if d == 0:
            raise DegenerateConic("singular conic cannot be signature-normalized")
        c = self.coeffs if d < 0 else tuple(-x for x in self.coeffs)
        return Conic(c, True)


def conic_det8(c) -> int:
    c00, c11, c22, c01, c02, c12 = c
    return (
        8 * c00 * c11 * c22 + 2 * c01 * c02 * c12
        - 2 * c00 * c12 * c12 - 2 * c11 * c02 * c02 - 2 * c22 * c01 * c01
    )


def conic_gradient(c, x) -> tuple[int, int, int]:
    c00, c11, c22, c01, c02, c12 = c
    x0, x1, x2 = x
    return (
        2 * c00 * x0 + c01 * x1 + c02 * x2,
        c01 * x0 + 2 * c11 * x1 + c12 * x2,
        c02 * x0 + c12 * x1 + 2 * c22 * x2,
    )


def conic_eval(c, x) -> int:
    c00, c11, c22, c01, c02, c12 = c
    x0, x1, x2 = x
    return (
        c00 * x0 * x0 + c11 * x1 * x1 + c22 * x2 * x2
        + c01 * x0 * x1 + c02 * x0 * x2 + c12 * x1 * x2
    )


def line_product(l, m) -> tuple[int, int, int, int, int, int]:
    """Coefficients of the product of two linear forms (a conic)."""
    a0, a1, a2 = l
    b0, b1, b2 = m
    return (
        a0 * b0, a1 * b1, a2 * b2,
        a0 * b1 + a1 * b0, a0 * b2 + a2 * b0, a1 * b2 + a2 * b1,
    )


def conic_coeffs_through(a, b, c, d, e) -> tuple[int, ...]:
    """Raw (unnormalized, possibly zero) coefficients of the conic through five
    integer vectors, from the pencil spanned by the line pairs ab.cd and ac.bd."""
    lab, lcd, lac, lbd = cross(a, b), cross(c, d), cross(a, c), cross(b, d)
    s = dot(lac, e) * dot(lbd, e)
    t = dot(lab, e) * dot(lcd, e)
    p1 = line_product(lab, lcd)
    p2 = line_product(lac, lbd)
    return tuple(s * u - t * w for u, w in zip(p1, p2))


def conic_through_five(points: Sequence) -> Conic:
    pts = [_vec(p) for p in points]
    if len(pts) != 5:
        raise ValueError("exactly five points are required")
    for i, j, k in itertools.combinations(range(5), 3):
        if det3(pts[i], pts[j], pts[k]) == 0:
            raise DegenerateConic(f"points {i}, {j}, {k} are collinear or repeated")
    raw = conic_coeffs_through(*pts)
    if not any(raw):
        raise DegenerateConic("interpolation system has a deficient rank")
    conic = Conic(primitive_ints(raw))
    if conic.det8() == 0:
        raise DegenerateConic("interpolating conic is a line pair")
    return conic.normalize()


INTERIOR, ON, EXTERIOR = "interior", "on", "exterior"


def conic_side(conic: Conic, p) -> str:
    if not conic.normalized:
        raise NotNormalized("conic_side requires a signature-normalized conic")
    s = sign(conic(p))
    return INTERIOR if s < 0 else (EXTERIOR if s > 0 else ON)


def interior_to_conic_of(p, five) -> bool:
    """True iff ``p`` is interior to the conic through the five given points
    (all integer vectors, assumed generic)."""
    raw = conic_coeffs_through(*five)
    return conic_eval(raw, p) * conic_det8(raw) > 0


# ---------------------------------------------------------------------------
# cyclic words


class CyclicWord:
    """A sequence of distinct labels up to rotation and reversal.

    The canonical form is the lexicographically smallest rotation among both
    orientations.
    """

    __slots__ = ("items", "canonical")

    def __init__(self, items: Iterable[Hashable]):
        self.items = tuple(items)
        if len(set(self.items)) != len(self.items):
            raise ValueError(f"repeated labels in cyclic word {self.items}")
        self.canonical = canonical_cycle(self.items)

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclicWord):
            return self.canonical == other.canonical
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.canonical)

    def relabel(self, mapping: Mapping) -> "CyclicWord":
        return CyclicWord(mapping[x] for x in self.items)

    def __repr__(self) -> str:
        return "CyclicWord(" + "".join(str(x) for x in self.canonical) + ")"

    def __str__(self) -> str:
        return "".join(str(x) for x in self.canonical)


def canonical_cycle(seq: Sequence) -> tuple:
    """Minimal rotation of ``seq`` over both orientations."""
    n = len(seq)
    if n == 0:
        return ()
    best = None
    for s in (tuple(seq), tuple(reversed(seq))):
        for i in range(n):
            r = s[i:] + s[:i]
            if best is None or r < best:
                best = r
    return best


def _rp1_key(values: Sequence[tuple[int, int]]) -> list[int]:
    """Indices of projective-line points (a:b) sorted cyclically.

    Each point is represented in the closed upper half plane; the angular
    order is decided by exact cross products.
    """
    norm = []
    for a, b in values:
        if b < 0 or (b == 0 and a < 0):
            a, b = -a, -b
        if a == 0 and b == 0:
            raise GeometryError("zero vector on the projective line")
        norm.append((a, b))

    def cmp(i, j):
        (a1, b1), (a2, b2) = norm[i], norm[j]
        c = a1 * b2 - b1 * a2
        if c == 0:
            raise SharedDirection(f"entries {i} and {j} define the same direction")
        return -1 if c > 0 else 1

    return sorted(range(len(norm)), key=cmp_to_key(cmp))


def rp1_cyclic_order(values: Sequence[tuple[int, int]]) -> list[int]:
    """Public wrapper: indices of ``values`` in cyclic order on RP^1."""
    return _rp1_key(values)


def _pencil_frame(center) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Two standard vectors completing ``center`` to a basis."""
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for u, v in itertools.combinations(basis, 2):
        if det3(center, u, v) != 0:
            return u, v
    raise GeometryError("degenerate pencil center")


def line_pencil_coordinate(center, p, frame=None) -> tuple[int, int]:
    """Coordinate on RP^1 of the line through ``center`` and ``p``."""
    u, v = frame or _pencil_frame(center)
    ln = cross(center, p)
    return dot(ln, u), dot(ln, v)


def cyclic_order_in_line_pencil(center, points: Mapping[Hashable, object] | Sequence) -> CyclicWord:
    labels, pts = _labelled(points)
    c = _vec(center)
    frame = _pencil_frame(c)
    coords = []
    for lab, p in zip(labels, pts):
        if cross(c, p) == (0, 0, 0):
            raise CoincidentWithCenter(f"point {lab} coincides with the center")
        coords.append(line_pencil_coordinate(c, p, frame))
    order = _rp1_key(coords)
    return CyclicWord(labels[i] for i in order)


def cyclic_order_on_conic(conic: Conic, points: Mapping[Hashable, object] | Sequence) -> CyclicWord:
    labels, pts = _labelled(points)
    if len(pts) < 3:
        raise ValueError("at least three points are needed for a cyclic order")
    for lab, p in zip(labels, pts):
        if conic(p) != 0:
            raise PointNotOnConic(f"point {lab} is not on the conic")
    return CyclicWord(labels[i] for i in _conic_order(conic.coeffs, pts))


def _conic_order(coeffs, pts) -> list[int]:
    """Cyclic order of points of a smooth conic, read in the pencil of lines
    through the first point (whose own direction is the tangent)."""
    c = pts[0]
    frame = _pencil_frame(c)
    tangent = conic_gradient(coeffs, c)
    coords = [(dot(tangent, frame[0]), dot(tangent, frame[1]))]
    coords += [line_pencil_coordinate(c, p, frame) for p in pts[1:]]
    return _rp1_key(coords)


def conic_word(five: Sequence, labels: Sequence) -> tuple:
    """Canonical cyclic word of five generic points on their conic."""
    raw = conic_coeffs_through(*five)
    order = _conic_order(raw, five)
    return canonical_cycle([labels[i] for i in order])


def _labelled(points) -> tuple[list, list]:
    if isinstance(points, Mapping):
        labels = list(points.keys())
        pts = [_vec(points[k]) for k in labels]
    else:
        pts = [_vec(p) for p in points]
        labels = list(range(1, len(pts) + 1))
    return labels, pts


# ---------------------------------------------------------------------------
# Cremona transformation


def cremona_transform(base: Sequence, p) -> Point:
    """Standard quadratic transformation based at three non-collinear points.

    Coordinates are changed so that the base points become the coordinate
    vertices, the map (y0:y1:y2) -> (y1y2:y0y2:y0y1) is applied, and the result
    is mapped back, which makes the transformation an involution.
    """
    b = [_vec(q) for q in base]
    if det3(*b) == 0:
        raise CollinearBase("base points are collinear")
    cols = [[b[j][i] for j in range(3)] for i in range(3)]
    inv = adjugate3(cols)
    y = matvec(inv, _vec(p))
    img = (y[1] * y[2], y[0] * y[2], y[0] * y[1])
    if img == (0, 0, 0):
        raise BasePointInput(f"{p} is a base point; its image is a line")
    return Point(*matvec(cols, img))


# ---------------------------------------------------------------------------
# affine charts


def _chart_candidates() -> Iterable[tuple[int, int, int]]:
    yield (0, 0, 1)
    yield (1, 0, 0)
    yield (0, 1, 0)
    for bound in itertools.count(1):
        for a in itertools.product(range(-bound, bound + 1), repeat=3):
            if max(abs(x) for x in a) == bound:
                yield a


def find_chart_line(points: Iterable) -> Line:
    pts = [_vec(p) for p in points]
    for cand in _chart_candidates():
        if all(dot(cand, p) != 0 for p in pts):
            return Line(*cand)
    raise AssertionError("unreachable")


def to_chart(chart: Line, p) -> tuple[Fraction, Fraction]:
    """Affine coordinates of ``p`` in the chart complementary to ``chart``."""
    lv = chart.v
    x = _vec(p)
    w = dot(lv, x)
    if w == 0:
        raise ChartThroughPoint(f"{p} lies on the chart line")
    # two coordinate functionals independent of the chart line
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    fs = [e for e in basis if cross(e, lv) != (0, 0, 0)]
    f1 = fs[0]
    f2 = next(e for e in fs[1:] if det3(lv, f1, e) != 0)
    return Fraction(dot(f1, x), w), Fraction(dot(f2, x), w)


def convex_position_in_chart(points: Sequence, chart: Line) -> bool:
    """Every point is a vertex of the convex hull in the affine chart."""
    aff = [to_chart(chart, p) for p in points]
    n = len(aff)
    if n < 4:
        return True
    for i in range(n):
        others = [aff[j] for j in range(n) if j != i]
        if _in_hull(aff[i], others):
            return False
    return True


def _in_hull(p, pts) -> bool:
    # p lies in the closed convex hull of pts iff it lies in some triangle
    for a, b, c in itertools.combinations(pts, 3):
        d1 = _orient2(a, b, p)
        d2 = _orient2(b, c, p)
        d3 = _orient2(c, a, p)
        has_neg = d1 < 0 or d2 < 0 or d3 < 0
        has_pos = d1 > 0 or d2 > 0 or d3 > 0
        if not (has_neg and has_pos):
            return True
    return False


def _orient2(a, b, c) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


# ---------------------------------------------------------------------------
# genericity


VERONESE = QUAD_MONOMIALS


def veronese(p) -> list[int]:
    x = _vec(p)
    return [x[0] ** e0 * x[1] ** e1 * x[2] ** e2 for e0, e1, e2 in VERONESE]


@dataclass(frozen=True)
class GenericityReport:
    collinear_triples: tuple[tuple, ...]
    coconic_sextuples: tuple[tuple, ...]

    @property
    def fully_generic(self) -> bool:
        return not self.collinear_triples and not self.coconic_sextuples


def genericity_report(points: Mapping[Hashable, object] | Sequence) -> GenericityReport:
    labels, pts = _labelled(points)
    triples = tuple(
        tuple(labels[i] for i in t)
        for t in itertools.combinations(range(len(pts)), 3)
        if det3(pts[t[0]], pts[t[1]], pts[t[2]]) == 0
    )
    sext = tuple(
        tuple(labels[i] for i in s)
        for s in itertools.combinations(range(len(pts)), 6)
        if rank([veronese(pts[i]) for i in s]) < 6
    )
    return GenericityReport(triples, sext)

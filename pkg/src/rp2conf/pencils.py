"""Pencils of nodal cubics through six points and nodal cubics through seven.

Forms are tuples of integer coefficients indexed by fixed monomial lists.
The reducible members of a pencil are products ``line(node, m) * conic``; their
cyclic order in the pencil is read off projective coordinates of the members
with respect to a basis of the pencil.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from . import sturm
from .exact import (
    GeometryError,
    Point,
    QUAD_MONOMIALS,
    SharedDirection,
    _labelled,
    _pencil_frame,
    _rp1_key,
    _vec,
    adjugate3,
    canonical_cycle,
    conic_coeffs_through,
    conic_det8,
    conic_word,
    cremona_transform,
    cross,
    cyclic_order_in_line_pencil,
    det3,
    dot,
    line_product,
    matvec,
    nullspace,
    primitive_ints,
    CyclicWord,
)


class UnexpectedRank(GeometryError):
    pass


class NotInPencil(GeometryError):
    pass


class Cusp(GeometryError):
    pass


class PointOffCubic(GeometryError):
    pass


class NotSingular(GeometryError):
    pass


class ReducibleCubic(GeometryError):
    pass


CUBIC_MONOMIALS = tuple(
    (a, b, 3 - a - b) for a in range(3, -1, -1) for b in range(3 - a, -1, -1)
)
_CUBIC_INDEX = {m: i for i, m in enumerate(CUBIC_MONOMIALS)}
_LINE_MONOMIALS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
# (line index, conic index, cubic index) triples of the product table
_LC_TABLE = tuple(
    (i, j, _CUBIC_INDEX[tuple(a + b for a, b in zip(lm, qm))])
    for i, lm in enumerate(_LINE_MONOMIALS)
    for j, qm in enumerate(QUAD_MONOMIALS)
)


def line_times_conic(line, conic) -> tuple[int, ...]:
    out = [0] * 10
    for i, j, k in _LC_TABLE:
        out[k] += line[i] * conic[j]
    return tuple(out)


def cubic_eval(c, x) -> int:
    x0, x1, x2 = x
    total = 0
    for coef, (a, b, e) in zip(c, CUBIC_MONOMIALS):
        if coef:
            total += coef * x0**a * x1**b * x2**e
    return total


def cubic_gradient(c, x) -> tuple[int, int, int]:
    g = [0, 0, 0]
    for coef, (a, b, e) in zip(c, CUBIC_MONOMIALS):
        if not coef:
            continue
        if a:
            g[0] += coef * a * x[0] ** (a - 1) * x[1] ** b * x[2] ** e
        if b:
            g[1] += coef * b * x[0] ** a * x[1] ** (b - 1) * x[2] ** e
        if e:
            g[2] += coef * e * x[0] ** a * x[1] ** b * x[2] ** (e - 1)
    return tuple(g)


def _gradient_rows(x) -> list[list[int]]:
    """Rows expressing the partial derivatives at x as linear functionals of
    the cubic coefficients."""
    rows = [[0] * 10 for _ in range(3)]
    for k, (a, b, e) in enumerate(CUBIC_MONOMIALS):
        if a:
            rows[0][k] = a * x[0] ** (a - 1) * x[1] ** b * x[2] ** e
        if b:
            rows[1][k] = b * x[0] ** a * x[1] ** (b - 1) * x[2] ** e
        if e:
            rows[2][k] = e * x[0] ** a * x[1] ** b * x[2] ** (e - 1)
    return rows


def _eval_row(x) -> list[int]:
    return [x[0] ** a * x[1] ** b * x[2] ** e for a, b, e in CUBIC_MONOMIALS]


@dataclass(frozen=True)
class CubicForm:
    """Ternary cubic with primitive integer coefficients (up to scale)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 10 or not any(self.coeffs):
            raise ValueError("a cubic form needs ten coefficients, not all zero")

    @classmethod
    def from_rational(cls, values: Sequence) -> "CubicForm":
        from .exact import integer_vector

        return cls(integer_vector(values))

    def __call__(self, p) -> int:
        return cubic_eval(self.coeffs, _vec(p))

    def gradient(self, p) -> tuple[int, int, int]:
        return cubic_gradient(self.coeffs, _vec(p))


def _primitive_form(c) -> tuple[int, ...]:
    return primitive_ints(tuple(c))


@dataclass(frozen=True)
class PencilOfCubics:
    c0: CubicForm
    c1: CubicForm
    node: Hashable
    base: tuple

    def member(self, lam, mu) -> CubicForm:
        return CubicForm.from_rational([lam * a + mu * b for a, b in zip(self.c0.coeffs, self.c1.coeffs)])


def _points(points) -> dict:
    labels, pts = _labelled(points)
    return dict(zip(labels, pts))


def nodal_pencil_basis(points, node) -> PencilOfCubics:
    """Basis of the cubics through the points that are singular at ``node``."""
    pts = _points(points)
    if len(pts) != 6:
        raise ValueError("six base points are required")
    n = pts[node]
    rows = _gradient_rows(n)
    rows += [_eval_row(p) for lab, p in pts.items() if lab != node]
    ns = nullspace(rows)
    if len(ns) != 2:
        raise UnexpectedRank(f"expected a pencil, null space has dimension {len(ns)}")
    c0 = CubicForm.from_rational(ns[0])
    c1 = CubicForm.from_rational(ns[1])
    return PencilOfCubics(c0, c1, node, tuple(pts))


def _pencil_coords(c0, c1, f) -> tuple[int, int] | None:
    """(lam:mu) with f proportional to lam*c0 + mu*c1, or None."""
    for i, j in itertools.combinations(range(len(c0)), 2):
        d = c0[i] * c1[j] - c0[j] * c1[i]
        if d:
            break
    else:
        raise UnexpectedRank("basis forms are proportional")
    lam = f[i] * c1[j] - f[j] * c1[i]
    mu = c0[i] * f[j] - c0[j] * f[i]
    if any(d * fk != lam * a + mu * b for fk, a, b in zip(f, c0, c1)):
        return None
    return lam, mu


def pencil_coordinate(pencil: PencilOfCubics, member) -> tuple[int, int]:
    f = member.coeffs if isinstance(member, CubicForm) else tuple(member)
    coords = _pencil_coords(pencil.c0.coeffs, pencil.c1.coeffs, f)
    if coords is None or coords == (0, 0):
        raise NotInPencil("form is not a member of the pencil")
    return primitive_ints(coords)


@dataclass(frozen=True)
class CombinatorialReducibleCubic:
    """Line through the node and ``m``, union the conic through the rest."""

    node: Hashable
    m: Hashable
    word: CyclicWord

    def __str__(self) -> str:
        return f"{self.node}{self.m}∪{self.word}"


class CombinatorialPencil:
    """Cyclic sequence of the five reducible members, up to rotation and
    reversal."""

    __slots__ = ("node", "members", "canonical")

    def __init__(self, node, members: Sequence[CombinatorialReducibleCubic]):
        self.node = node
        self.members = tuple(members)
        ms = [r.m for r in self.members]
        if len(set(ms)) != len(ms):
            raise ValueError("every non-node label must appear exactly once as m")
        self.canonical = canonical_cycle([(r.m, r.word.canonical) for r in self.members])

    def __eq__(self, other):
        if isinstance(other, CombinatorialPencil):
            return self.node == other.node and self.canonical == other.canonical
        return NotImplemented

    def __hash__(self):
        return hash((self.node, self.canonical))

    def __iter__(self):
        return iter(self.members)

    def relabel(self, mapping: Mapping) -> "CombinatorialPencil":
        return CombinatorialPencil(
            mapping[self.node],
            [CombinatorialReducibleCubic(mapping[r.node], mapping[r.m], r.word.relabel(mapping)) for r in self.members],
        )

    def __repr__(self):
        return "CombinatorialPencil(" + ", ".join(str(r) for r in self.members) + ")"


def _reducible_forms(pts: Mapping, node) -> list[tuple[Hashable, tuple[int, ...], tuple]]:
    n = pts[node]
    others = [lab for lab in pts if lab != node]
    out = []
    for m in others:
        rest = [lab for lab in others if lab != m]
        five = [n] + [pts[lab] for lab in rest]
        conic = conic_coeffs_through(*five)
        if not any(conic) or conic_det8(conic) == 0:
            from .exact import DegenerateConic

            raise DegenerateConic(f"conic through {node} and {rest} is degenerate")
        line = cross(n, pts[m])
        word = conic_word(five, [node] + rest)
        out.append((m, line_times_conic(line, conic), word))
    return out


def reducible_members(points, node, pencil: PencilOfCubics | None = None):
    """The five reducible members with their pencil coordinates.

    Returns a list of ``(CombinatorialReducibleCubic, (lam, mu))`` in label
    order of ``m``.
    """
    pts = _points(points)
    pencil = pencil or nodal_pencil_basis(pts, node)
    out = []
    for m, form, word in _reducible_forms(pts, node):
        coords = pencil_coordinate(pencil, form)
        out.append((CombinatorialReducibleCubic(node, m, CyclicWord(word)), coords))
    coords = [c for _, c in out]
    for a, b in itertools.combinations(coords, 2):
        if a[0] * b[1] == a[1] * b[0]:
            raise UnexpectedRank("two reducible members coincide in the pencil")
    return out


def pencil_order(forms: Sequence[Sequence[int]]) -> list[int]:
    """Indices of pencil members in cyclic order on the parameter line; the
    first two forms serve as basis."""
    c0, c1 = forms[0], forms[1]
    coords = []
    for f in forms:
        pc = _pencil_coords(c0, c1, f)
        if pc is None:
            raise NotInPencil("forms do not span a pencil")
        coords.append(pc)
    try:
        return _rp1_key(coords)
    except SharedDirection as exc:
        raise UnexpectedRank("two pencil members coincide") from exc


def pencil_items(points, node) -> tuple:
    """Canonical cyclic sequence of (m, conic word) for the pencil at ``node``.

    This is the allocation-light core of :func:`combinatorial_pencil`.
    """
    pts = points if isinstance(points, dict) else _points(points)
    forms = _reducible_forms(pts, node)
    order = pencil_order([f for _, f, _ in forms])
    return canonical_cycle([(forms[i][0], forms[i][2]) for i in order])


def combinatorial_pencil(points, node) -> CombinatorialPencil:
    pts = _points(points)
    forms = _reducible_forms(pts, node)
    order = pencil_order([f for _, f, _ in forms])
    return CombinatorialPencil(
        node, [CombinatorialReducibleCubic(node, forms[i][0], CyclicWord(forms[i][2])) for i in order]
    )


def order_consistent(points, node) -> bool:
    """Each reducible member's conic, read without the node, orders its four
    points as the lines through the node do."""
    pts = _points(points)
    ref = cyclic_order_in_line_pencil(pts[node], {x: p for x, p in pts.items() if x != node}).items
    for r in combinatorial_pencil(pts, node):
        keep = [x for x in r.word.items if x != node]
        if canonical_cycle(keep) != canonical_cycle([x for x in ref if x in keep]):
            return False
    return True


# ---------------------------------------------------------------------------
# the construction through a pencil of conics


@dataclass(frozen=True)
class ConicPencilMember:
    """A member of the pencil of conics after the quadratic transformation:
    either a line pair or a smooth conic through a fifth point."""

    lines: tuple[frozenset, frozenset] | None = None
    word: CyclicWord | None = None
    m: Hashable = None

    def key(self):
        if self.lines is not None:
            return ("lines", frozenset(self.lines))
        return ("conic", self.word.canonical)

    def __str__(self):
        if self.lines is not None:
            a, b = (sorted(s) for s in self.lines)
            return "".join(map(str, a)) + "∪" + "".join(map(str, b))
        return str(self.word)


def conic_pencil_after_cremona(points, node, base: Sequence) -> list[ConicPencilMember]:
    """Cyclic sequence of the five distinguished members of the pencil of
    conics obtained by transforming the nodal pencil at ``node``.

    ``base`` holds three labels including the node.  Each member records the
    label ``m`` of the reducible cubic it comes from.
    """
    pts = _points(points)
    base = list(base)
    if node not in base or len(set(base)) != 3:
        raise ValueError("the base must contain the node and two other labels")
    b = [pts[lab] for lab in base]
    rest = [lab for lab in pts if lab not in base]
    img = {lab: cremona_transform(b, pts[lab]).v for lab in rest}
    # the lines joining two base points are contracted onto the third one,
    # which keeps its label
    for lab in base:
        img[lab] = pts[lab]
    four = [node] + rest
    others = [lab for lab in base if lab != node]
    members: list[tuple[ConicPencilMember, tuple[int, ...]]] = []
    a = rest
    pairs = [
        ((node, a[0]), (a[1], a[2])),
        ((node, a[1]), (a[0], a[2])),
        ((node, a[2]), (a[0], a[1])),
    ]
    for (p, q), (r, s) in pairs:
        form = line_product(cross(img[p], img[q]), cross(img[r], img[s]))
        members.append((ConicPencilMember(lines=(frozenset((p, q)), frozenset((r, s))), m=q), form))
    for k, extra in enumerate(others):
        five_labels = four + [extra]
        five = [img[lab] for lab in five_labels]
        form = conic_coeffs_through(*five)
        if not any(form) or conic_det8(form) == 0:
            from .exact import DegenerateConic

            raise DegenerateConic("transformed conic is degenerate")
        word = CyclicWord(conic_word(five, five_labels))
        # the conic through one contracted base point comes from the cubic
        # whose line joins the node to the other base point
        members.append((ConicPencilMember(word=word, m=others[1 - k]), form))
    order = pencil_order([f for _, f in members])
    return [members[i][0] for i in order]


# ---------------------------------------------------------------------------
# seven points


def seven_point_nodal_cubic(points, node) -> CubicForm:
    """The unique cubic through seven points with a node at ``node``."""
    pts = _points(points)
    if len(pts) != 7:
        raise ValueError("seven points are required")
    n = pts[node]
    rows = _gradient_rows(n)
    rows += [_eval_row(p) for lab, p in pts.items() if lab != node]
    ns = nullspace(rows)
    if len(ns) != 1:
        raise UnexpectedRank(f"expected a unique nodal cubic, null space has dimension {len(ns)}")
    return CubicForm.from_rational(ns[0])


def nodal_cubic_fast(pts: Mapping, node) -> tuple[int, ...]:
    """Coefficients of the nodal cubic through seven points, combined from two
    reducible members of the pencil through six of them."""
    n = pts[node]
    others = [lab for lab in pts if lab != node]
    q = others[-1]
    six = others[:-1]
    forms = []
    for m in six[:2]:
        rest = [pts[lab] for lab in six if lab != m]
        conic = conic_coeffs_through(n, *rest)
        forms.append(line_times_conic(cross(n, pts[m]), conic))
    ra, rb = forms
    va, vb = cubic_eval(ra, pts[q]), cubic_eval(rb, pts[q])
    f = tuple(va * y - vb * x for x, y in zip(ra, rb))
    if not any(f):
        raise UnexpectedRank("nodal cubic is not unique")
    return primitive_ints(f)


ACNODE, CRUNODE = "acnode", "crunode"


@dataclass(frozen=True)
class NodalCubicDescriptor:
    """Topological type of a nodal cubic with labelled points on it.

    ``loop_run`` and ``odd_run`` list the labels met along the loop and along
    the odd branch, in the order of one traversal of the curve that starts at
    the node along the loop.  Empty loops are identified with isolated nodes,
    in which case ``loop_run`` is empty and ``odd_run`` is the cyclic order.
    """

    node: Hashable
    node_type: str
    raw_type: str
    word: CyclicWord
    loop: frozenset
    loop_run: tuple
    odd_run: tuple

    def key(self) -> tuple:
        if self.node_type == ACNODE:
            return (0, canonical_cycle(self.word.items))
        a = (self.loop_run, self.odd_run)
        b = (self.loop_run[::-1], self.odd_run[::-1])
        return (1,) + min(a, b)

    def relabel(self, mapping: Mapping) -> "NodalCubicDescriptor":
        return NodalCubicDescriptor(
            mapping[self.node],
            self.node_type,
            self.raw_type,
            self.word.relabel(mapping),
            frozenset(mapping[x] for x in self.loop),
            tuple(mapping[x] for x in self.loop_run),
            tuple(mapping[x] for x in self.odd_run),
        )

    def __str__(self) -> str:
        if self.node_type == ACNODE:
            return f"{self.node}: acnode {self.word}"
        loop = "".join(map(str, self.loop_run))
        odd = "".join(map(str, self.odd_run))
        return f"{self.node}: crunode loop({loop}) odd({odd})"


def _substitute(coeffs, frame) -> dict:
    """Cubic F(s*u + t*v + w*n) as {(i, j, k): coeff} in (s, t, w)."""
    u, v, n = frame
    lin = [(u[i], v[i], n[i]) for i in range(3)]
    out: dict = {}
    for coef, (a, b, e) in zip(coeffs, CUBIC_MONOMIALS):
        if not coef:
            continue
        terms = {(0, 0, 0): coef}
        for var, power in ((0, a), (1, b), (2, e)):
            for _ in range(power):
                nxt: dict = {}
                for mono, c in terms.items():
                    for k in range(3):
                        if lin[var][k]:
                            m2 = list(mono)
                            m2[k] += 1
                            m2 = tuple(m2)
                            nxt[m2] = nxt.get(m2, 0) + c * lin[var][k]
                terms = nxt
        for mono, c in terms.items():
            out[mono] = out.get(mono, 0) + c
    return out


_FRAME_CANDIDATES = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1),
    (1, -1, 0), (1, 0, -1), (0, 1, -1), (1, 2, 3), (3, -1, 2), (2, 3, -5),
)


def _frames(n):
    for u, v in itertools.combinations(_FRAME_CANDIDATES, 2):
        if det3(u, v, n) != 0:
            yield u, v


def _quad_sign(q, d) -> int:
    a, b, c = q
    s, t = d
    val = a * s * s + b * s * t + c * t * t
    return (val > 0) - (val < 0)


def _odd_arc_sign(tq, g) -> int | None:
    """Sign of T on the arc of RP^1 meeting the line {w = 0} an odd number of
    times, or None if the chart line is not transversal.

    ``tq`` = (a, b, c) for T = a s^2 + b s t + c t^2 and ``g`` = (g0..g3)
    for G = g0 s^3 + g1 s^2 t + g2 s t^2 + g3 t^3.
    """
    poly = [g[3], g[2], g[1], g[0]]  # G(x, 1) in increasing degree of x
    p = sturm.trim(poly)
    deg = len(p) - 1
    inf_mult = 3 - deg
    if inf_mult >= 2:
        return None
    # a multiple root means tangency; parity counting needs transversality
    if deg >= 2:
        gcdp = sturm.gcd(p, sturm.derivative(p))
        if len(gcdp) > 1:
            return None
    tpoly = [tq[2], tq[1], tq[0]]
    n = sturm.count_real_roots(p) if deg >= 1 else 0
    taq = sturm.tarski_query(tpoly, p) if deg >= 1 else 0
    n_pos = (n + taq) // 2
    n_neg = (n - taq) // 2
    if inf_mult == 1:
        s = (tq[0] > 0) - (tq[0] < 0)
        if s == 0:
            return None
        if s > 0:
            n_pos += 1
        else:
            n_neg += 1
    if n_pos % 2 == 1 and n_neg % 2 == 0:
        return 1
    if n_neg % 2 == 1 and n_pos % 2 == 0:
        return -1
    return None


def _roots_between(tq, d1, d2) -> int:
    """Number of roots of the binary quadratic on the open arc from d1 to d2
    (increasing angle in the upper half plane)."""
    # rotate coordinates so that d1 maps to (1:0); the arc becomes the
    # directions (x:1) with x decreasing from +inf to the image of d2
    s1, t1 = d1
    # basis change: new coordinates (X, Y) with (s, t) = X*d1 + Y*perp
    px, py = -t1, s1  # perpendicular, at angle +90 degrees from d1
    a, b, c = tq

    def form(s, t):
        return a * s * s + b * s * t + c * t * t

    # T(X*d1 + Y*p) = A X^2 + B X Y + C Y^2
    A = form(s1, t1)
    C = form(px, py)
    B = form(s1 + px, t1 + py) - A - C
    # coordinates of d2 in the (d1, p) basis
    s2, t2 = d2
    det = s1 * py - t1 * px
    X2 = s2 * py - t2 * px
    Y2 = s1 * t2 - t1 * s2
    if det < 0:
        X2, Y2 = -X2, -Y2
    # the arc from d1 (angle 0) counterclockwise to d2 (angle in (0, pi))
    if Y2 < 0:
        X2, Y2 = -X2, -Y2
    # directions (x:1) with x from +inf down to X2/Y2
    poly = [C, B, A]
    p = sturm.trim(poly)
    if len(p) <= 1:
        return 0
    lo = Fraction(X2, Y2) if Y2 else None
    if lo is None:
        return sturm.count_real_roots(p)
    return sturm.count_real_roots(p, lo, None)


def nodal_cubic_descriptor(cubic, node, others, node_label=None) -> NodalCubicDescriptor:
    """Describe the nodal cubic with node at the point ``node`` and the labelled
    points ``others`` on it.

    ``node`` is the singular point; ``node_label`` is only recorded.
    """
    coeffs = cubic.coeffs if isinstance(cubic, CubicForm) else tuple(cubic)
    n = _vec(node)
    labels, pts = _labelled(others)
    for lab, p in zip(labels, pts):
        if cubic_eval(coeffs, p) != 0:
            raise PointOffCubic(f"point {lab} is not on the cubic")
    if any(cubic_gradient(coeffs, n)):
        raise NotSingular("the cubic is not singular at the node")
    for u, v in _frames(n):
        res = _describe_in_frame(coeffs, n, u, v, labels, pts, node_label)
        if res is not None:
            return res
    raise GeometryError("no transversal chart line found")


def _describe_in_frame(coeffs, n, u, v, labels, pts, node_label):
    sub = _substitute(coeffs, (u, v, n))
    if any(sub.get((i, j, k), 0) for i, j, k in sub if k >= 2):
        raise NotSingular("the cubic is not singular at the node")
    tq = (sub.get((2, 0, 1), 0), sub.get((1, 1, 1), 0), sub.get((0, 2, 1), 0))
    g = (sub.get((3, 0, 0), 0), sub.get((2, 1, 0), 0), sub.get((1, 2, 0), 0), sub.get((0, 3, 0), 0))
    disc = tq[1] * tq[1] - 4 * tq[0] * tq[2]
    if disc == 0:
        raise Cusp("the node is a cusp")
    if (tq[0] == 0 and g[0] == 0) or len(sturm.gcd([g[3], g[2], g[1], g[0]], [tq[2], tq[1], tq[0]])) > 1:
        raise ReducibleCubic("the cubic contains a line through the node")
    inv = adjugate3([[u[i], v[i], n[i]] for i in range(3)])
    dirs = []
    for lab, p in zip(labels, pts):
        s, t, _ = matvec(inv, p)
        if s == 0 and t == 0:
            raise GeometryError(f"point {lab} coincides with the node")
        dirs.append((s, t))
    order = _rp1_key(dirs)
    word = CyclicWord(labels[i] for i in order)
    if disc < 0:
        return NodalCubicDescriptor(node_label, ACNODE, ACNODE, word, frozenset(), (), tuple(word.items))
    odd = _odd_arc_sign(tq, g)
    if odd is None:
        return None
    loop_sign = -odd
    signs = [_quad_sign(tq, dirs[i]) for i in order]
    if 0 in signs:
        raise GeometryError("a labelled point coincides with the node")
    ordered = [labels[i] for i in order]
    loop = frozenset(lab for lab, s in zip(ordered, signs) if s == loop_sign)
    if not loop:
        return NodalCubicDescriptor(node_label, ACNODE, CRUNODE, word, frozenset(), (), tuple(word.items))
    k = len(ordered)
    if len(loop) < k:
        # start at the first loop label that follows an odd-branch label
        start = next(i for i in range(k) if signs[i] == loop_sign and signs[i - 1] != loop_sign)
    else:
        # every label on the loop: the tangents sit in one gap
        odirs = [dirs[i] for i in order]
        start = None
        for i in range(k):
            d1, d2 = odirs[i - 1], odirs[i]
            if i == 0:
                # wrap-around gap: from the last direction through angle pi
                cnt = _roots_between(tq, d1, _flip(d2))
            else:
                cnt = _roots_between(tq, d1, d2)
            if cnt == 2:
                start = i
                break
        if start is None:
            raise GeometryError("tangent directions not located")
    seq = ordered[start:] + ordered[:start]
    sg = signs[start:] + signs[:start]
    loop_run = tuple(lab for lab, s in zip(seq, sg) if s == loop_sign)
    odd_run = tuple(lab for lab, s in zip(seq, sg) if s != loop_sign)
    return NodalCubicDescriptor(node_label, CRUNODE, CRUNODE, word, loop, loop_run, odd_run)


def _flip(d):
    return (-d[0], -d[1])

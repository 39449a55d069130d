"""Walls of the configuration space: which degenerations bound a camera,
their classes, and exact crossings."""

from __future__ import annotations

import functools
from importlib import resources
from fractions import Fraction
import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import catalog, sturm
from .classify import (
    GREEK,
    SevenData,
    SixData,
    _pts,
    seven_data,
    six_canonical_labelling,
    six_class_name,
    six_data,
    six_subdata,
)
from .exact import (
    GeometryError,
    _conic_order,
    _pencil_frame,
    canonical_cycle,
    conic_coeffs_through,
    conic_det8,
    conic_eval,
    cross,
    cyclic_order_in_line_pencil,
    det3,
    dot,
    genericity_report,
    positive_multiple,
)
from .paths import MotionGraph, Obstacle, PathBlocked, _eval_coords, _trace, conic_curve, has_root, segment_clean

Triple = tuple[int, int, int]


def _triple(*labels) -> Triple:
    return tuple(sorted(labels))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# six points


def six_walls_direct(points) -> tuple[set[Triple], bool]:
    """Line walls (as triples) and presence of the conic wall bounding the
    camera of six points, found by moving each point along exact paths that
    meet no other degeneracy."""
    pts = _pts(points)
    lines: set[Triple] = set()
    conic = False
    for x in pts:
        for w in motion_graph(pts, x).walls():
            if len(w) == 2:
                lines.add(_triple(x, *w))
            else:
                conic = True
    return lines, conic


@functools.lru_cache(maxsize=None)
def _six_wall_table() -> dict[str, tuple[frozenset, bool]]:
    # per class, walls of the representative in canonical labels
    out = {}
    for name, pts in catalog.six_representatives().items():
        data = six_data(pts)
        sigma = six_canonical_labelling(data)
        lines, conic = six_walls_direct(pts)
        out[name] = (frozenset(_triple(*(sigma[x] for x in t)) for t in lines), conic)
    return out


def _six_walls(data: SixData) -> tuple[set[Triple], bool]:
    lines, conic = _six_wall_table()[six_class_name(data)]
    sigma = six_canonical_labelling(data)
    inv = {v: k for k, v in sigma.items()}
    return {_triple(*(inv[c] for c in t)) for t in lines}, conic


def six_walls(points) -> tuple[set[Triple], bool]:
    """Line walls and conic-wall flag of a generic six-point camera.

    Walls depend only on the labelled arrangement, so they are transported
    from the class representative through canonical labellings."""
    return _six_walls(points if isinstance(points, SixData) else six_data(points))


# ---------------------------------------------------------------------------
# seven points


def _seven_line_walls(data: SevenData) -> set[Triple]:
    # a line wall lnm of seven points changes exactly the four six-point
    # arrangements without l, n, m, and must bound each of them
    sub_walls = {p: _six_walls(data.subs[p])[0] for p in data.labels}
    out = set()
    for t in itertools.combinations(data.labels, 3):
        if all(t in sub_walls[p] for p in data.labels if p not in t):
            out.add(t)
    return out


@functools.lru_cache(maxsize=256)
def _graph(frozen: tuple, x: int) -> MotionGraph:
    return MotionGraph(dict(frozen), x)


def motion_graph(pts: Mapping, x: int) -> MotionGraph:
    """Cached exact motion graph of ``x`` with the other points fixed."""
    return _graph(tuple(sorted((k, tuple(v)) for k, v in pts.items())), x)


def _seven_conic_walls(data: SevenData) -> set[int]:
    # the arrangement without the apex must have its conic wall (type beta);
    # this is not sufficient, so the wall is confirmed by exact motion
    out = set()
    for a in data.labels:
        if not _six_walls(data.subs[a])[1]:
            continue
        six = [x for x in data.labels if x != a]
        for x in six:
            five = tuple(y for y in six if y != x)
            if five in motion_graph(data.pts, x).walls():
                out.add(a)
                break
    return out


def admissible_triples(points) -> list[Triple]:
    """Triples whose alignment is a wall of the camera, for 6 or 7 points."""
    if isinstance(points, SevenData):
        return sorted(_seven_line_walls(points))
    if isinstance(points, SixData):
        return sorted(_six_walls(points)[0])
    pts = _pts(points)
    if len(pts) == 6:
        return sorted(six_walls(pts)[0])
    if len(pts) == 7:
        return sorted(_seven_line_walls(seven_data(pts)))
    raise ValueError("six or seven points are required")


def conic_wall_apices(points) -> list[int]:
    """Apices ``a`` such that the conic through the other six points is a
    wall of the camera of seven points."""
    data = points if isinstance(points, SevenData) else seven_data(points)
    return sorted(_seven_conic_walls(data))


def seven_walls_by_motion(points: Mapping) -> set[Triple]:
    """Triples reached by moving a single point with the others fixed; a
    subset of the admissible triples, used for cross-checks."""
    pts = _pts(points)
    out = set()
    for x in pts:
        for w in motion_graph(pts, x).walls():
            if len(w) == 2:
                out.add(_triple(x, *w))
    return out


def coconic_triples(points, apex: int = 7) -> list[Triple]:
    """Triples through the apex that bound the camera while the other six
    points stay on their conic (the six-point arrangements missing one
    coconic point are generic)."""
    pts = _pts(points)
    others = [x for x in pts if x != apex]
    subs = {p: _six_walls(six_subdata(pts, p))[0] for p in others}
    out = []
    for a, b in itertools.combinations(others, 2):
        t = _triple(a, b, apex)
        if all(t in subs[p] for p in others if p not in t):
            out.append(t)
    return sorted(out)


# ---------------------------------------------------------------------------
# degeneracies


class MultipleDegeneracies(GeometryError):
    pass


GENERIC = "generic"
COLLINEAR = "collinear_triple"
COCONIC = "coconic_sextuple"
OTHER = "other"


@dataclass(frozen=True)
class Degeneracy:
    kind: str
    labels: tuple = ()


def degeneracy_detect(points) -> Degeneracy:
    rep = genericity_report(points)
    t, s = rep.collinear_triples, rep.coconic_sextuples
    if not t and not s:
        return Degeneracy(GENERIC)
    if len(t) == 1 and not s:
        return Degeneracy(COLLINEAR, tuple(sorted(t[0])))
    if len(s) == 1 and not t:
        return Degeneracy(COCONIC, tuple(sorted(s[0])))
    return Degeneracy(OTHER, tuple(t) + tuple(s))


# ---------------------------------------------------------------------------
# line walls
#
# Three aligned points on a line L and four further points: the class of the
# wall is read on L, from the cyclic order of the aligned points and of the
# six intersections of L with the lines joining the other four.  Moving L
# inside the wall may carry it across the meeting point of two complementary
# lines (13 and 24, say) when no aligned point separates their intersections;
# this swaps two adjacent tokens.  The class is the minimum of the encoded
# sequence over the orbit of these swaps, rotations, reversals and
# relabellings of the four points.


def _line_frame_coords(line, vecs):
    u, v = _pencil_frame(line)
    return [(dot(x, u), dot(x, v)) for x in vecs]


def _rp1_groups(coords) -> list[list[int]]:
    """Indices in cyclic order on RP^1, coincident entries grouped."""
    norm = []
    for a, b in coords:
        if b < 0 or (b == 0 and a < 0):
            a, b = -a, -b
        norm.append((a, b))

    def cmp(i, j):
        (a1, b1), (a2, b2) = norm[i], norm[j]
        c = a1 * b2 - b1 * a2
        return (c < 0) - (c > 0)

    order = sorted(range(len(norm)), key=functools.cmp_to_key(cmp))
    groups: list[list[int]] = []
    for i in order:
        if groups and cmp(groups[-1][0], i) == 0:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def line_sequence(points, triple=None) -> list:
    """Cyclic sequence on the line of the aligned triple: aligned labels
    (ints) and intersections with the lines of the other points (frozenset
    pairs); coincident intersections come as a frozenset of two pairs."""
    pts = _pts(points)
    if triple is None:
        d = degeneracy_detect(pts)
        if d.kind != COLLINEAR:
            raise MultipleDegeneracies(f"expected one aligned triple, found {d.kind} {d.labels}")
        triple = d.labels
    a, b, c = triple
    line = cross(pts[a], pts[b])
    if dot(line, pts[c]) != 0:
        raise ValueError(f"points {triple} are not aligned")
    off = [x for x in pts if x not in triple]
    tokens: list = list(triple)
    vecs = [pts[x] for x in triple]
    for p, q in itertools.combinations(off, 2):
        tokens.append(frozenset((p, q)))
        vecs.append(cross(line, cross(pts[p], pts[q])))
    out = []
    for g in _rp1_groups(_line_frame_coords(line, vecs)):
        if len(g) == 1:
            out.append(tokens[g[0]])
        elif all(isinstance(tokens[i], frozenset) for i in g) and len(g) == 2:
            out.append(frozenset(tokens[i] for i in g))
        else:
            raise MultipleDegeneracies("a point of the line lies on another line")
    return out


def _flat(seq) -> list:
    out = []
    for t in seq:
        if isinstance(t, frozenset) and all(isinstance(x, frozenset) for x in t):
            out.extend(sorted(t, key=sorted))
        else:
            out.append(t)
    return out


def _complementary(s, t) -> bool:
    return isinstance(s, frozenset) and isinstance(t, frozenset) and not (s & t)


def red_tokens(seq) -> frozenset:
    """Intersections next to their complementary one on L with no aligned
    point between: the two whose order the wall does not fix."""
    flat = _flat(seq)
    n = len(flat)
    red = set()
    for i in range(n):
        s, t = flat[i], flat[(i + 1) % n]
        if _complementary(s, t):
            red.update((s, t))
    return frozenset(red)


def _swap_orbit(seq: tuple) -> set[tuple]:
    seen = {seq}
    todo = [seq]
    n = len(seq)
    while todo:
        s = todo.pop()
        for i in range(n):
            j = (i + 1) % n
            if _complementary(s[i], s[j]):
                t = list(s)
                t[i], t[j] = t[j], t[i]
                t = tuple(t)
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
    return seen


def _dihedral_rots(s: tuple):
    n = len(s)
    r = s[::-1]
    for i in range(n):
        yield s[i:] + s[:i]
        yield r[i:] + r[:i]


def line_wall_code(seq) -> tuple:
    """Canonical form of an L-sequence: aligned points unlabelled (0), the
    pair tokens numbered after relabelling the other points."""
    flat = tuple(_flat(seq))
    off = sorted({x for t in flat if isinstance(t, frozenset) for x in t})
    k = len(off)
    pairs = [frozenset(p) for p in itertools.combinations(range(1, k + 1), 2)]
    best = None
    for s in _swap_orbit(flat):
        for perm in itertools.permutations(range(1, k + 1)):
            sigma = dict(zip(off, perm))
            enc = tuple(0 if not isinstance(t, frozenset) else 1 + pairs.index(frozenset(sigma[x] for x in t)) for t in s)
            for r in _dihedral_rots(enc):
                if best is None or r < best:
                    best = r
    return best


def _reading(flat: list) -> list:
    """Rotation and direction used for display: start at the smallest
    aligned label, with the aligned labels increasing when possible."""
    n = len(flat)
    best = None
    for s in (flat, flat[::-1]):
        blacks = [t for t in s if not isinstance(t, frozenset)]
        i = s.index(min(blacks))
        r = s[i:] + s[:i]
        key = ([t for t in r if not isinstance(t, frozenset)], [_tok(t) for t in r])
        if best is None or key < best[0]:
            best = (key, r)
    return best[1] if n else flat


def format_sequence(seq) -> str:
    """Text form such as ``4, 5, 17, 6, 27, {37,12}, 13, 23``; the pairs
    in braces are the red ones, whose order the wall leaves free."""
    red = red_tokens(seq)
    flat = _reading(_flat(seq))
    n = len(flat)
    parts = []
    i = 0
    while i < n:
        t = flat[i]
        nxt = flat[(i + 1) % n]
        if t in red and nxt in red and _complementary(t, nxt) and i + 1 < n:
            parts.append("{" + _tok(t) + "," + _tok(nxt) + "}")
            i += 2
            continue
        parts.append(_tok(t))
        i += 1
    return ", ".join(parts)


def _tok(t) -> str:
    return "".join(map(str, sorted(t))) if isinstance(t, frozenset) else str(t)


def enumerate_line_wall_codes() -> list[tuple]:
    """All line-wall classes, by placing three aligned points in every way
    among the six intersections of a line with the lines of four points
    (both mutual positions of a line and four points)."""
    from .exact import det3

    four_sets = [
        # one point inside the triangle of the others, L far away
        {1: (0, 0, 1), 2: (4, 0, 1), 3: (0, 4, 1), 4: (1, 1, 1)},
        # convex position
        {1: (0, 0, 1), 2: (4, 1, 1), 3: (5, 5, 1), 4: (1, 3, 1)},
    ]
    line = (0, 0, 1)
    codes = set()
    for pts in four_sets:
        assert all(det3(*(pts[x] for x in t)) for t in itertools.combinations(pts, 3))
        pairs = [frozenset(p) for p in itertools.combinations(sorted(pts), 2)]
        vecs = [cross(line, cross(pts[p], pts[q])) for p, q in map(sorted, pairs)]
        groups = _rp1_groups(_line_frame_coords(line, vecs))
        base = [pairs[g[0]] for g in groups]
        for gaps in itertools.combinations_with_replacement(range(6), 3):
            seq = []
            for i, t in enumerate(base):
                seq.append(t)
                seq.extend([5 + k for k, g in enumerate(gaps) if g == i])
            codes.add(line_wall_code(seq))
    return sorted(codes)


# ---------------------------------------------------------------------------
# crossing walls


@dataclass(frozen=True)
class Crossing:
    """An exact crossing: the moving point follows ``path`` (a polyline
    meeting no degeneracy) to ``wall_point`` on the wall, then steps to
    ``far_point`` on the other side."""

    mover: int
    wall_labels: tuple
    before: dict
    at_wall: dict
    after: dict
    path: tuple

    @property
    def is_line(self) -> bool:
        return len(self.wall_labels) == 2


def _step_across(obs, wall, w, p):
    """A point beyond the wall from waypoint ``p`` through ``w``."""
    side = wall.value(p)
    for d in MotionGraph.DELTAS:
        q = positive_multiple([wc + d * (wc - pc) for wc, pc in zip(w, p)])
        v = wall.value(q)
        if v == 0 or (v > 0) == (side > 0):
            continue
        if segment_clean(obs, w, q, skip=wall) and _single_root(wall.along(w, q)):
            return q
    return None


def _single_root(poly) -> bool:
    # the wall polynomial vanishes at 0 only, on [0, 1]
    if len(poly) < 3 or poly[2] == 0:
        return True
    other = Fraction(-poly[1], poly[2])
    return not (0 < other <= 1)


def _try_cross(pts, x, wall_labels) -> Crossing | None:
    graph = motion_graph(pts, x)
    try:
        path = graph.path_to(wall_labels)
    except PathBlocked:
        return None
    w, p = path[-1], path[-2]
    want = tuple(sorted(wall_labels))
    wall = next(o for o in graph.obs if tuple(sorted(o.labels)) == want)
    q = _step_across(graph.obs, wall, w, p)
    if q is None:
        return None
    at = dict(pts) | {x: tuple(w)}
    after = dict(pts) | {x: q}
    return Crossing(x, want, dict(pts), at, after, tuple(path) + (q,))


def cross_line_wall(points, triple) -> Crossing:
    """Move one of the three points (the first one preferred) until it
    crosses the line of the other two."""
    pts = _pts(points)
    triple = tuple(triple)
    for x in triple:
        rest = tuple(y for y in triple if y != x)
        got = _try_cross(pts, x, rest)
        if got is not None:
            return got
    raise PathBlocked(f"no single-point crossing found for the triple {triple}")


def cross_conic_wall(points, apex: int | None = None) -> Crossing:
    """Move one of the six non-apex points (all six points when there is
    no apex) through the conic of the other five."""
    pts = _pts(points)
    six = [x for x in pts if x != apex]
    if len(six) != 6:
        raise ValueError("six points besides the apex are required")
    for x in six:
        got = _try_cross(pts, x, tuple(y for y in six if y != x))
        if got is not None:
            return got
    raise PathBlocked(f"no single-point crossing of the conic through {six}")


# ---------------------------------------------------------------------------
# conic walls
#
# Six points on a conic and an apex: the conic-diagram records the cyclic
# order of the six on the conic against their order in the pencil of lines
# at the apex.  The apex sees the conic either as a double cover of its
# pencil (inside) or folded over an interval (outside), so the pencil order
# interleaves two arcs of the conic, the second one reversed when outside.


class NonRealizableDiagram(GeometryError):
    pass


def _hexagon_dihedral():
    base = tuple(range(1, 7))
    r = base[::-1]
    for i in range(6):
        yield base[i:] + base[:i]
        yield r[i:] + r[:i]


def diagram_code(pencil_in_conic_positions: Sequence[int]) -> tuple:
    """Unmarked diagram: the pencil cycle written in conic positions 1..6,
    minimised over the symmetries of the hexagon."""
    best = None
    for g in _hexagon_dihedral():
        sigma = {g[i]: i + 1 for i in range(6)}
        c = canonical_cycle([sigma[x] for x in pencil_in_conic_positions])
        if best is None or c < best:
            best = c
    return best


def _shuffles(a: tuple, b: tuple):
    if not a or not b:
        yield a + b
        return
    for s in _shuffles(a[1:], b):
        yield (a[0],) + s
    for s in _shuffles(a, b[1:]):
        yield (b[0],) + s


@functools.lru_cache(maxsize=None)
def realizable_diagrams() -> dict[bool, frozenset]:
    """Unmarked diagrams realizable with the apex inside / outside."""
    out = {True: set(), False: set()}
    circle = tuple(range(1, 7))
    for r in range(6):
        arc = circle[r:] + circle[:r]
        for k in range(7):
            a, b = arc[:k], arc[k:]
            out[True].update(diagram_code(s) for s in _shuffles(a, b))
            out[False].update(diagram_code(s) for s in _shuffles(a, b[::-1]))
    return {k: frozenset(v) for k, v in out.items()}


@functools.lru_cache(maxsize=None)
def all_diagrams() -> frozenset:
    return frozenset(diagram_code((1,) + p) for p in itertools.permutations(range(2, 7)))


def non_realizable_diagrams() -> list[tuple]:
    real = realizable_diagrams()
    return sorted(all_diagrams() - real[True] - real[False])


def conic_diagram(points, apex: int | None = None) -> tuple[tuple, tuple, bool]:
    """(conic order, pencil order at the apex, apex inside) for seven points
    with exactly six on a conic."""
    pts = _pts(points)
    if apex is None:
        d = degeneracy_detect(pts)
        if d.kind != COCONIC:
            raise MultipleDegeneracies(f"expected one coconic sextuple, found {d.kind} {d.labels}")
        (apex,) = set(pts) - set(d.labels)
    six = [x for x in sorted(pts) if x != apex]
    c = conic_coeffs_through(*(pts[x] for x in six[:5]))
    if conic_eval(c, pts[six[5]]) != 0:
        raise ValueError("the six points are not coconic")
    conic = [six[i] for i in _conic_order(c, [pts[x] for x in six])]
    pencil = list(cyclic_order_in_line_pencil(pts[apex], {x: pts[x] for x in six}).items)
    inside = (conic_eval(c, pts[apex]) > 0) == (conic_det8(c) > 0)
    return tuple(conic), tuple(pencil), inside


def conic_wall_code(points, apex: int | None = None) -> tuple[tuple, bool]:
    conic, pencil, inside = conic_diagram(points, apex)
    pos = {x: i + 1 for i, x in enumerate(conic)}
    code = diagram_code([pos[x] for x in pencil])
    if code not in realizable_diagrams()[inside]:
        raise NonRealizableDiagram(f"diagram {code} cannot occur with the apex {'inside' if inside else 'outside'}")
    return code, inside


@functools.lru_cache(maxsize=None)
def conic_wall_table() -> dict[tuple, str]:
    return {conic_wall_code(catalog.coconic_representative(z), 7): z for z in catalog.names("coconic")}


def conic_wall_letter(points, apex: int | None = None) -> str:
    return conic_wall_table()[conic_wall_code(points, apex)]


# ---------------------------------------------------------------------------
# refined line walls: the line-wall data together with every defined
# point-versus-conic bit (conics through five points not containing the
# aligned triple)


def _wall_bits(pts, triple) -> list[tuple[int, frozenset]]:
    inside = []
    labels = sorted(pts)
    for five in itertools.combinations(labels, 5):
        if set(triple) <= set(five):
            continue
        c = conic_coeffs_through(*(pts[x] for x in five))
        d = conic_det8(c)
        for x in labels:
            if x in five:
                continue
            v = conic_eval(c, pts[x])
            if v == 0:
                raise MultipleDegeneracies(f"points {sorted(five)} and {x} are coconic")
            if (v > 0) == (d > 0):
                inside.append((x, frozenset(five)))
    return inside


def _labellings(flat: tuple, off: list[int]):
    # aligned points numbered in order of appearance, the others in all ways
    blacks = [t for t in flat if not isinstance(t, frozenset)]
    base = {x: i + 1 for i, x in enumerate(blacks)}
    for perm in itertools.permutations(range(4, 8)):
        yield base | dict(zip(off, perm))


def refined_wall_code(points, triple=None, swaps: bool = True) -> tuple:
    pts = _pts(points)
    seq = line_sequence(pts, triple)
    flat0 = tuple(_flat(seq))
    triple = tuple(sorted(t for t in flat0 if not isinstance(t, frozenset)))
    off = sorted(x for x in pts if x not in triple)
    bits = _wall_bits(pts, triple)
    orbit = _swap_orbit(flat0) if swaps else {flat0}
    best = None
    for s in orbit:
        for r in _dihedral_rots(s):
            for sigma in _labellings(r, off):
                enc_seq = tuple(
                    (0, sigma[t]) if not isinstance(t, frozenset) else (1,) + tuple(sorted(sigma[x] for x in t)) for t in r
                )
                enc_bits = tuple(sorted((sigma[x], tuple(sorted(sigma[y] for y in five))) for x, five in bits))
                key = (enc_seq, enc_bits)
                if best is None or key < best:
                    best = key
    return best


# ---------------------------------------------------------------------------
# names of line-wall classes


@functools.lru_cache(maxsize=None)
def wall_names() -> dict[tuple, str]:
    """Canonical line-wall code -> name ``W1`` .. ``W27``."""
    out = {}
    text = resources.files(__package__).joinpath("data/wall_names.txt").read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if line:
            name, code = line.split()
            out[tuple(int(ch) for ch in code)] = name
    return out


def line_wall_name(seq) -> str:
    return wall_names()[line_wall_code(seq)]


# ---------------------------------------------------------------------------
# line-conic walls: a coconic arrangement degenerated onto a line wall while
# its six points stay on their conic


def _conic_params(c, base, pts):
    """Polynomial parametrization of the conic from the point ``base`` and
    the parameter of each point of ``pts`` (None at infinity)."""
    curve = conic_curve(Obstacle((0,), tuple(c)), {0: base})
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    e1, e2 = next((u, w) for u, w in itertools.combinations(basis, 2) if det3(base, u, w) != 0)
    params = {}
    for k, p in pts.items():
        num, den = -det3(base, e1, p), det3(base, e2, p)
        params[k] = Fraction(num, den) if den else None
    return curve.coords, params


def _slide_on_conic(pts, six, c, mover, target_line, fixed):
    """Slide ``mover`` along the conic until it meets ``target_line``,
    without meeting any other line through two of the points."""
    lines = [
        Obstacle((p, q), cross(pts[p], pts[q]))
        for p, q in itertools.combinations([x for x in pts if x != mover], 2)
    ]
    for base in (x for x in six if x != mover and x not in fixed):
        coords, params = _conic_params(c, pts[base], {x: pts[x] for x in six})
        start = params[mover]
        tl = next(o for o in lines if set(o.labels) == set(target_line))
        poly = sturm.trim(_trace(tl, coords))
        if start is None or len(poly) != 3:
            continue
        known = params[next(x for x in target_line if x in six)]
        if known is None:
            continue
        end = -Fraction(poly[1], poly[2]) - known
        lo, hi = min(start, end), max(start, end)
        if any(has_root(_trace(o, coords), lo, hi, start == lo and o is not tl, start == hi and o is not tl) for o in lines if o is not tl):
            continue
        if has_root(_trace(tl, coords), lo, hi, False, False):
            continue
        return dict(pts) | {mover: _eval_coords(coords, end)}
    return None


def line_conic_point(points, triple, apex: int = 7) -> dict:
    """A configuration on the line wall ``triple`` (which contains the apex)
    with the other six points still on their conic, reached from the
    coconic arrangement ``points`` inside its camera."""
    pts = _pts(points)
    six = [x for x in sorted(pts) if x != apex]
    c = conic_coeffs_through(*(pts[x] for x in six[:5]))
    if apex not in triple:
        raise ValueError("the triple must contain the apex")
    a, b = (x for x in triple if x != apex)
    for mover, other in ((a, b), (b, a)):
        got = _slide_on_conic(pts, six, c, mover, (other, apex), (other,))
        if got is not None:
            d = degeneracy_detect(got)
            if d.kind == OTHER and len(d.labels) == 2:
                return got
    raise PathBlocked(f"no slide along the conic reaches the alignment {sorted(triple)}")


def line_conic_walls(points, apex: int = 7) -> dict[Triple, str]:
    """Line-wall name of each line-conic wall bounding a coconic arrangement."""
    out = {}
    for t in coconic_triples(points, apex):
        q = line_conic_point(points, t, apex)
        out[t] = line_wall_name(line_sequence(q, t))
    return out


# ---------------------------------------------------------------------------
# refined wall names


def refined_code_text(code: tuple) -> str:
    """Compact text of a refined code: the labelled L-sequence, then the
    inside bits as ``point:conic``."""
    seq, bits = code
    toks = ",".join("".join(map(str, t[1:])) for t in seq)
    return toks + " " + (";".join(f"{x}:{''.join(map(str, five))}" for x, five in bits) or "-")


@functools.lru_cache(maxsize=None)
def refined_names() -> dict[str, str]:
    """Refined code text -> name such as ``W21_2`` (plain ``W22`` when the
    line wall does not split)."""
    out = {}
    text = resources.files(__package__).joinpath("data/refined_names.txt").read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if line:
            name, rest = line.split(None, 1)
            out[rest] = name
    return out


# ---------------------------------------------------------------------------
# wall descriptors and crossings

LINE_WALL = "LineWall"
CONIC_WALL = "ConicWall"
REFINED_WALL = "RefinedLineWall"


@dataclass(frozen=True)
class WallDescriptor:
    kind: str
    name: str
    code: tuple = ()
    sequence: str = ""  # L-sequence text, red pairs in braces
    red: frozenset = frozenset()
    diagram: tuple = ()  # (conic order, pencil order) of a conic wall
    inside: bool | None = None
    refined: tuple = ()

    def __str__(self) -> str:
        return self.name


def line_wall_class(points, triple=None) -> WallDescriptor:
    """Class of a configuration with exactly one aligned triple."""
    pts = _pts(points)
    d = degeneracy_detect(pts)
    if d.kind != COLLINEAR or (triple is not None and tuple(sorted(triple)) != d.labels):
        raise MultipleDegeneracies(f"expected one aligned triple, found {d.kind} {d.labels}")
    seq = line_sequence(pts, d.labels)
    code = line_wall_code(seq)
    name = wall_names().get(code, "") if len(pts) == 7 else six_line_wall_name(code)
    return WallDescriptor(LINE_WALL, name, code, format_sequence(seq), red_tokens(seq))


def refined_wall_fingerprint(points, triple=None) -> WallDescriptor:
    pts = _pts(points)
    base = line_wall_class(pts, triple)
    code = refined_wall_code(pts)
    name = refined_names().get(refined_code_text(code), base.name + "?")
    return WallDescriptor(REFINED_WALL, name, base.code, base.sequence, base.red, refined=code)


def conic_wall_class(points, apex: int | None = None) -> WallDescriptor:
    """Class of seven points with exactly six on a conic (the apex off it),
    or of six coconic points."""
    pts = _pts(points)
    d = degeneracy_detect(pts)
    if d.kind != COCONIC:
        raise MultipleDegeneracies(f"expected one coconic sextuple, found {d.kind} {d.labels}")
    if len(pts) == 6:
        return WallDescriptor(CONIC_WALL, "conic")
    (a,) = set(pts) - set(d.labels)
    if apex is not None and apex != a:
        raise ValueError(f"the apex is {a}, not {apex}")
    conic, pencil, inside = conic_diagram(pts, a)
    code = conic_wall_code(pts, a)
    return WallDescriptor(CONIC_WALL, conic_wall_table()[code], code, diagram=(conic, pencil), inside=inside)


def class_name(points) -> str:
    """Camera class of six or seven generic points."""
    from .classify import seven_class

    pts = _pts(points)
    if len(pts) == 6:
        return six_class_name(six_data(pts))
    return seven_class(pts).name


@dataclass(frozen=True)
class CrossResult:
    after: dict
    wall: WallDescriptor
    before_class: str
    after_class: str
    crossing: Crossing


def cross_wall(points, wall_spec, refined: bool = False) -> CrossResult:
    """Cross the line wall of a triple (the first label moves when it can)
    or, with ``wall_spec`` ``"conic"`` or an apex label, a conic wall."""
    pts = _pts(points)
    if wall_spec == "conic" or isinstance(wall_spec, int):
        cr = cross_conic_wall(pts, None if wall_spec == "conic" else wall_spec)
        wall = conic_wall_class(cr.at_wall)
    else:
        cr = cross_line_wall(pts, wall_spec)
        if refined:
            wall = refined_wall_fingerprint(cr.at_wall)
        else:
            wall = line_wall_class(cr.at_wall)
    return CrossResult(cr.after, wall, class_name(cr.before), class_name(cr.after), cr)


# six points: line walls named by the camera classes they separate


@functools.lru_cache(maxsize=None)
def _six_line_wall_codes() -> dict[tuple, str]:
    out = {}
    for pts in catalog.six_representatives().values():
        for t in admissible_triples(pts):
            cr = cross_line_wall(pts, t)
            code = line_wall_code(line_sequence(cr.at_wall, t))
            ends = sorted((class_name(cr.before), class_name(cr.after)), key=_six_order)
            out[code] = "-".join(GREEK[e] for e in ends)
    return out


def _six_order(name: str) -> int:
    return list(catalog.SIX_ZONES).index(name)


def six_line_wall_name(code: tuple) -> str:
    return _six_line_wall_codes().get(code, "")


# ---------------------------------------------------------------------------
# census over the catalog


@dataclass(frozen=True)
class CatalogCrossing:
    start: str  # catalog name of the camera
    triple: Triple
    result: CrossResult


@functools.lru_cache(maxsize=None)
def catalog_line_crossings() -> tuple[CatalogCrossing, ...]:
    """Every admissible line wall of every seven-point catalog camera,
    crossed exactly, with its refined class."""
    out = []
    for name, pts in catalog.seven_representatives().items():
        for t in admissible_triples(seven_data(pts)):
            out.append(CatalogCrossing(name, t, cross_wall(pts, t, refined=True)))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def catalog_conic_crossings() -> tuple[CatalogCrossing, ...]:
    out = []
    for name, pts in catalog.seven_representatives().items():
        for a in conic_wall_apices(pts):
            out.append(CatalogCrossing(name, (a,), cross_wall(pts, a)))
    return tuple(out)


def refined_walls() -> dict[str, set[tuple]]:
    """Refined codes met in the catalog census, grouped by line wall."""
    out: dict[str, set[tuple]] = {}
    for c in catalog_line_crossings():
        w = c.result.wall
        out.setdefault(wall_names()[w.code], set()).add(w.refined)
    return out


def refined_census() -> int:
    return sum(len(v) for v in refined_walls().values())


@functools.lru_cache(maxsize=None)
def conic_admitting_walls() -> frozenset:
    """Line walls meeting a conic wall: names of the line-conic walls of
    the eleven coconic arrangements."""
    out = set()
    for z in catalog.names("coconic"):
        out.update(line_conic_walls(catalog.coconic_representative(z)).values())
    return frozenset(out)


# ---------------------------------------------------------------------------
# adjacency graphs


@dataclass(frozen=True)
class Edge:
    ends: tuple[str, str]
    wall: WallDescriptor


@dataclass(frozen=True)
class AdjacencyGraph:
    level: int
    conics: bool
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def wall_classes(self) -> set[str]:
        return {e.wall.name for e in self.edges}

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "stratification": "lines+conics" if self.conics else "lines-only",
            "vertices": list(self.vertices),
            "edges": [
                {"source": a, "target": b, "kind": e.wall.kind, "wall": e.wall.name, "sequence": e.wall.sequence}
                for e in self.edges
                for a, b in [e.ends]
            ],
        }

    def to_dot(self) -> str:
        lines = [f"graph level{self.level} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for e in self.edges:
            style = " style=dashed" if e.wall.kind == CONIC_WALL else ""
            lines.append(f'  "{e.ends[0]}" -- "{e.ends[1]}" [label="{e.wall.name}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _quadruple_of(name: str) -> str:
    return name.split("_")[0]


def _graph_from(level, conics, crossings, vertex):
    vertices = set()
    edges = {}
    for before, after, wall in crossings:
        a, b = sorted((vertex(before), vertex(after)))
        vertices.update((a, b))
        edges.setdefault((a, b, wall.kind, wall.name), wall)
    ordered = tuple(Edge((a, b), w) for (a, b, _, _), w in sorted(edges.items(), key=lambda kv: kv[0]))
    return AdjacencyGraph(level, conics, tuple(sorted(vertices)), ordered)


def adjacency_graph(level: int, conics: bool = False) -> AdjacencyGraph:
    """Cameras and walls met by crossing every admissible wall of every
    catalog camera.  Without conic walls the seven-point cameras are the
    quadruples, since conic walls join exactly the classes that share one."""
    crossings = []
    if level == 6:
        for pts in catalog.six_representatives().values():
            for t in admissible_triples(pts):
                r = cross_wall(pts, t)
                crossings.append((r.before_class, r.after_class, r.wall))
            if conics and six_walls(pts)[1]:
                r = cross_wall(pts, "conic")
                crossings.append((r.before_class, r.after_class, r.wall))
        return _graph_from(6, conics, crossings, lambda n: GREEK[n])
    if level != 7:
        raise ValueError("level must be 6 or 7")
    for c in catalog_line_crossings():
        r = c.result
        w = line_wall_class(r.crossing.at_wall)
        crossings.append((r.before_class, r.after_class, w))
    if conics:
        for c in catalog_conic_crossings():
            r = c.result
            crossings.append((r.before_class, r.after_class, r.wall))
        return _graph_from(7, True, crossings, lambda n: n)
    return _graph_from(7, False, crossings, _quadruple_of)

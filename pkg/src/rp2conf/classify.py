"""Configurations of six and seven labelled points and their classes.

Labelled data are gathered once per point set; a class is then fixed by a
canonical encoding.  Instead of scanning every relabelling, the encoding is
minimised over a small equivariant family of candidate labellings read off
the configuration itself (a distinguished point plus the cyclic order of the
others around it), which yields an exact canonical form.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from . import golden
from ._canon import best_encoding, best_labelling, relabel_mask, six_best
from .exact import (
    DegenerateConic,
    GeometryError,
    _conic_order,
    _labelled,
    canonical_cycle,
    conic_coeffs_through,
    conic_det8,
    conic_eval,
    cross,
)
from .pencils import (
    ACNODE,
    NodalCubicDescriptor,
    line_times_conic,
    nodal_cubic_descriptor,
    nodal_cubic_fast,
    pencil_order,
)


class UnknownClass(LookupError):
    pass


class UnknownZone(LookupError):
    pass


class NotGeneric(GeometryError):
    pass


SIX_NAMES = ("alpha", "beta", "gamma", "delta")
GREEK = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ"}

# pair index for labels 1..7
PAIR = [[-1] * 8 for _ in range(8)]
for _k, (_a, _b) in enumerate(itertools.combinations(range(1, 8), 2)):
    PAIR[_a][_b] = PAIR[_b][_a] = _k


def cycle_pairs(seq: Sequence[int]) -> tuple[tuple[int, int], ...]:
    n = len(seq)
    return tuple((seq[i], seq[(i + 1) % n]) for i in range(n))


def cycle_mask(seq: Sequence[int]) -> int:
    return sum(1 << PAIR[a][b] for a, b in cycle_pairs(seq))


# ---------------------------------------------------------------------------
# labelled data


def _pts(points) -> dict[int, tuple[int, int, int]]:
    labels, pts = _labelled(points)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise ValueError("labels must be 1..n")
    return dict(zip(labels, pts))


class ConicTable:
    """Conics through five of the points, computed lazily and shared."""

    def __init__(self, pts: Mapping[int, tuple]):
        self.pts = pts
        self._coeffs: dict[frozenset, tuple] = {}

    def coeffs(self, five: frozenset) -> tuple[tuple[int, ...], int]:
        got = self._coeffs.get(five)
        if got is None:
            c = conic_coeffs_through(*(self.pts[x] for x in sorted(five)))
            d = conic_det8(c) if any(c) else 0
            if d == 0:
                raise NotGeneric(f"three of the points {sorted(five)} are collinear")
            got = self._coeffs[five] = (c, d)
        return got

    def interior(self, x: int, five: frozenset) -> bool:
        c, d = self.coeffs(five)
        v = conic_eval(c, self.pts[x])
        if v == 0:
            raise NotGeneric(f"points {sorted(five | {x})} are coconic")
        return (v > 0) == (d > 0)

    def word(self, five: frozenset) -> tuple:
        c, _ = self.coeffs(five)
        labs = sorted(five)
        order = _conic_order(c, [self.pts[x] for x in labs])
        return canonical_cycle([labs[i] for i in order])


@dataclass
class SixData:
    """Labelled data of six points: conic words of the six 5-subsets (keyed by
    the missing label), interior bits and the order of the reducible members
    of each nodal pencil (keyed by the node)."""

    labels: tuple[int, ...]
    interior: dict[int, bool]
    words: dict[int, tuple]
    mseq: dict[int, tuple]
    _zone_codes: dict = field(default_factory=dict, repr=False)

    def pencil(self, node: int) -> tuple:
        """Canonical cyclic sequence of (m, conic word)."""
        return canonical_cycle([(m, self.words[m]) for m in self.mseq[node]])


def six_data(points) -> SixData:
    pts = _pts(points)
    if len(pts) != 6:
        raise ValueError("six points are required")
    return _six_data(tuple(sorted(pts)), ConicTable(pts))


def six_subdata(points, missing: int) -> SixData:
    """Labelled data of all points but ``missing``, keeping the labels."""
    pts = _pts(points)
    return _six_data(tuple(x for x in sorted(pts) if x != missing), ConicTable(pts))


def _six_data(labels: tuple[int, ...], table: ConicTable) -> SixData:
    full = frozenset(labels)
    interior, words, mseq = {}, {}, {}
    for x in labels:
        five = full - {x}
        interior[x] = table.interior(x, five)
        words[x] = table.word(five)
    for n in labels:
        ms = [m for m in labels if m != n]
        forms = [line_times_conic(cross(table.pts[n], table.pts[m]), table.coeffs(full - {m})[0]) for m in ms]
        order = pencil_order(forms)
        mseq[n] = canonical_cycle([ms[i] for i in order])
    return SixData(labels, interior, words, mseq)


def six_data_from_table(rows: Sequence[golden.SixListRow]) -> SixData:
    """Labelled data read from the rows of a golden list of six pencils."""
    interior, words, mseq = {}, {}, {}
    for r in rows:
        interior[r.node] = r.interior
        words[r.node] = canonical_cycle(r.conic)
    for r in rows:
        seq = []
        for mem in r.members:
            node, m = mem.line
            if node != r.node:
                raise ValueError("row member does not use the row's node")
            if canonical_cycle(mem.word) != words[m]:
                raise ValueError(f"inconsistent conic word for {r.node}{m}")
            seq.append(m)
        mseq[r.node] = canonical_cycle(seq)
    labels = tuple(sorted(interior))
    return SixData(labels, interior, words, mseq)


# ---------------------------------------------------------------------------
# zone codes: pencils up to relabelling of the non-node points


def _dihedral(seq: Sequence) -> list[tuple]:
    n = len(seq)
    s = tuple(seq)
    r = s[::-1]
    return [s[i:] + s[:i] for i in range(n)] + [r[i:] + r[:i] for i in range(n)]


def _node_labellings(node: int, mseq: Sequence[int]) -> list[dict]:
    out = []
    for order in _dihedral(mseq):
        sigma = {node: 1}
        for k, m in enumerate(order):
            sigma[m] = k + 2
        out.append(sigma)
    return out


def pencil_code(node: int, mseq: Sequence[int], words: Mapping[int, tuple]) -> tuple:
    """Code of the reducible members of a pencil up to relabelling of the
    non-node points (conic words only)."""
    return min(
        tuple(relabel_mask(cycle_pairs(words[m]), sigma) for m in sorted(sigma, key=sigma.__getitem__)[1:])
        for sigma in _node_labellings(node, mseq)
    )


def _zone_of(data: SixData, node: int) -> tuple[tuple, list[dict]]:
    """Code of the whole arrangement up to relabelling of the points other
    than ``node``, with the labellings that achieve it."""
    got = data._zone_codes.get(node)
    if got is None:
        cands = _node_labellings(node, data.mseq[node])
        best, hits = _six_best(data, cands)
        got = data._zone_codes[node] = (best, [cands[k] for k in hits])
    return got


def zone_code(points, node: int = 1) -> tuple:
    data = points if isinstance(points, SixData) else six_data(points)
    return _zone_of(data, node)[0]


def zone_letter(points, node: Hashable = 1) -> str:
    from .catalog import zone_table

    code = zone_code(points, node)
    try:
        return zone_table()[code]
    except KeyError:
        raise UnknownZone(f"arrangement around {node} matches none of the seven zones") from None


# ---------------------------------------------------------------------------
# six-point fingerprints


def _six_encode(data: SixData, sigma: Mapping[int, int]):
    inv = sorted(data.labels, key=sigma.__getitem__)
    bits = sum(1 << k for k, x in enumerate(inv) if data.interior[x])
    return (
        (bits,)
        + tuple(relabel_mask(cycle_pairs(data.words[x]), sigma) for x in inv)
        + tuple(relabel_mask(cycle_pairs(data.mseq[x]), sigma) for x in inv)
    )


def _six_best(data: SixData, cands: Sequence[Mapping[int, int]]) -> tuple[tuple, list[int]]:
    # flat integer form for the relabelling kernel
    idx = {x: i for i, x in enumerate(data.labels)}
    pairs = [
        [(idx[a], idx[b]) for a, b in cycle_pairs(data.words[x]) + cycle_pairs(data.mseq[x])]
        for x in data.labels
    ]
    interior = [int(data.interior[x]) for x in data.labels]
    perms = [[s[x] - 1 for x in data.labels] for s in cands]
    return six_best(pairs, interior, perms)


def six_point_keys(data: SixData) -> dict[int, tuple]:
    return {x: (not data.interior[x], _zone_of(data, x)[0]) for x in data.labels}


def _six_candidates(data: SixData) -> list[dict]:
    keys = six_point_keys(data)
    kmin = min(keys.values())
    cands = []
    for x in data.labels:
        if keys[x] == kmin:
            cands.extend(_zone_of(data, x)[1])
    return cands


def six_fingerprint_of(data: SixData) -> tuple:
    keys = six_point_keys(data)
    enc, _ = _six_best(data, _six_candidates(data))
    return (tuple(sorted(keys.values())), enc)


def six_canonical_labelling(data: SixData) -> dict:
    """A relabelling onto 1..6 under which the arrangement takes its
    canonical form; unique up to automorphisms of the arrangement."""
    cands = _six_candidates(data)
    return cands[_six_best(data, cands)[1][0]]


def six_fingerprint(points) -> tuple:
    return six_fingerprint_of(points if isinstance(points, SixData) else six_data(points))


def six_fingerprint_bruteforce(data: SixData) -> tuple:
    """Reference canonical form: minimum of the encoding over all 720
    relabellings (a different but equivalent canonical form)."""
    best = None
    for perm in itertools.permutations(range(1, 7)):
        sigma = dict(zip(data.labels, perm))
        enc = _six_encode(data, sigma)
        if best is None or enc < best:
            best = enc
    return best


@functools.lru_cache(maxsize=None)
def six_class_table() -> dict[tuple, str]:
    rows: dict[str, list] = {}
    for r in golden.six_lists():
        rows.setdefault(r.cls, []).append(r)
    out = {}
    for name, rs in rows.items():
        out[six_fingerprint_of(six_data_from_table(rs))] = name
    if len(out) != 4:
        raise ValueError("golden lists do not give four distinct classes")
    return out


@dataclass(frozen=True)
class SixClass:
    name: str
    interior_count: int

    @property
    def symbol(self) -> str:
        return GREEK[self.name]

    def __str__(self) -> str:
        return self.symbol


def six_class_name(data: SixData) -> str:
    fp = six_fingerprint_of(data)
    try:
        return six_class_table()[fp]
    except KeyError:
        raise UnknownClass("six-point fingerprint not in the catalog") from None


def six_class(points) -> SixClass:
    data = points if isinstance(points, SixData) else six_data(points)
    return SixClass(six_class_name(data), sum(data.interior.values()))


# ---------------------------------------------------------------------------
# seven points


@dataclass(frozen=True)
class Quadruple:
    n_beta: int
    n_delta: int
    n_gamma: int
    n_alpha: int

    def __str__(self) -> str:
        return f"({self.n_beta},{self.n_delta},{self.n_gamma},{self.n_alpha})"

    @classmethod
    def parse(cls, text: str) -> "Quadruple":
        body = text.split(")")[0].strip("(")
        return cls(*(int(v) for v in body.split(",")))


@dataclass
class SevenData:
    labels: tuple[int, ...]
    pts: dict
    table: ConicTable
    subs: dict[int, SixData]  # keyed by the missing label
    sub_names: dict[int, str]
    cubics: dict[int, tuple]
    descriptors: dict[int, NodalCubicDescriptor]
    interior: dict[tuple[int, frozenset], bool]

    def quadruple(self) -> Quadruple:
        names = list(self.sub_names.values())
        return Quadruple(*(names.count(n) for n in ("beta", "delta", "gamma", "alpha")))


def seven_data(points) -> SevenData:
    pts = _pts(points)
    if len(pts) != 7:
        raise ValueError("seven points are required")
    table = ConicTable(pts)
    labels = tuple(range(1, 8))
    subs, names = {}, {}
    for y in labels:
        subs[y] = _six_data(tuple(x for x in labels if x != y), table)
        names[y] = six_class_name(subs[y])
    cubics, desc = {}, {}
    for n in labels:
        c = nodal_cubic_fast(pts, n)
        cubics[n] = c
        desc[n] = nodal_cubic_descriptor(c, pts[n], {x: pts[x] for x in labels if x != n}, n)
    interior = {}
    full = frozenset(labels)
    for pair in itertools.combinations(labels, 2):
        five = full - set(pair)
        for x in pair:
            interior[(x, five)] = table.interior(x, five)
    return SevenData(labels, pts, table, subs, names, cubics, desc, interior)


def seven_quadruple(points) -> Quadruple:
    data = points if isinstance(points, SevenData) else seven_data(points)
    return data.quadruple()


_SIX_RANK = {"beta": 0, "delta": 1, "gamma": 2, "alpha": 3}


def _desc_code(d: NodalCubicDescriptor, sigma: Mapping[int, int]) -> tuple:
    if d.node_type == ACNODE:
        return (0, canonical_cycle([sigma[x] for x in d.word.items]))
    a = (tuple(sigma[x] for x in d.loop_run), tuple(sigma[x] for x in d.odd_run))
    b = (a[0][::-1], a[1][::-1])
    return (1,) + min(a, b)


def _seven_encode(data: SevenData, sigma: Mapping[int, int]):
    inv = sorted(data.labels, key=sigma.__getitem__)
    subs = tuple(_SIX_RANK[data.sub_names[x]] for x in inv)
    descs = tuple(_desc_code(data.descriptors[x], sigma) for x in inv)
    bits = 0
    for (x, five), v in data.interior.items():
        if v:
            missing = [sigma[y] for y in data.labels if y not in five]
            missing.sort()
            other = missing[0] if missing[1] == sigma[x] else missing[1]
            bits |= 1 << (7 * (sigma[x] - 1) + other - 1)
    return (subs, descs, bits)


def seven_point_keys(data: SevenData) -> dict[int, tuple]:
    keys = {}
    for x in data.labels:
        d = data.descriptors[x]
        tested = sum(v for (y, _), v in data.interior.items() if y == x)
        keys[x] = (_SIX_RANK[data.sub_names[x]], d.node_type != ACNODE, len(d.loop_run), tested)
    return keys


def _seven_candidates(data: SevenData, x: int) -> list[dict]:
    d = data.descriptors[x]
    if d.node_type == ACNODE:
        orders = _dihedral(d.word.items)
    else:
        seq = d.loop_run + d.odd_run
        orders = [seq, d.loop_run[::-1] + d.odd_run[::-1]]
    out = []
    for order in orders:
        sigma = {x: 1}
        for k, y in enumerate(order):
            sigma[y] = k + 2
        out.append(sigma)
    return out


def _seven_all_candidates(data: SevenData) -> list[dict]:
    keys = seven_point_keys(data)
    kmin = min(keys.values())
    cands = []
    for x in data.labels:
        if keys[x] == kmin:
            cands.extend(_seven_candidates(data, x))
    return cands


def seven_fingerprint_of(data: SevenData) -> tuple:
    keys = seven_point_keys(data)
    enc = best_encoding(_seven_encode, data, _seven_all_candidates(data))
    return (tuple(sorted(keys.values())), enc)


def seven_canonical_labelling(data: SevenData) -> dict:
    return best_labelling(_seven_encode, data, _seven_all_candidates(data))[1]


def seven_automorphisms(data: SevenData) -> list[dict]:
    """Relabellings of 1..7 preserving the labelled arrangement."""
    cands = _seven_all_candidates(data)
    best = best_encoding(_seven_encode, data, cands)
    hits = [s for s in cands if _seven_encode(data, s) == best]
    first = {v: k for k, v in hits[0].items()}
    return [{x: first[s[x]] for x in data.labels} for s in hits]


def seven_fingerprint(points) -> tuple:
    return seven_fingerprint_of(points if isinstance(points, SevenData) else seven_data(points))


@dataclass(frozen=True)
class SevenClass:
    quadruple: Quadruple
    index: int  # subscript among classes sharing the quadruple, 0 if unique

    @property
    def name(self) -> str:
        return f"{self.quadruple}_{self.index}" if self.index else str(self.quadruple)

    def __str__(self) -> str:
        return self.name


@functools.lru_cache(maxsize=None)
def seven_class_table() -> dict[tuple, SevenClass]:
    """Fingerprints of the fourteen catalog representatives; subscripts are
    bound to the representatives in table order."""
    from .catalog import seven_representatives

    out = {}
    for key, name in golden.quadruples().items():
        pts = seven_representatives()[key]
        quad, _, sub = name.partition("_")
        out[seven_fingerprint(pts)] = SevenClass(Quadruple.parse(quad), int(sub) if sub else 0)
    if len(out) != 14:
        raise ValueError("catalog representatives do not give fourteen classes")
    return out


def seven_class(points) -> SevenClass:
    data = points if isinstance(points, SevenData) else seven_data(points)
    try:
        return seven_class_table()[seven_fingerprint_of(data)]
    except KeyError:
        raise UnknownClass("seven-point fingerprint not in the catalog") from None

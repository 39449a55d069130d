import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import apply, random_generic, random_matrix, relabel, seeds
from rp2conf import catalog, walls
from rp2conf.classify import seven_data, six_data, six_fingerprint_of
from rp2conf.walls import (
    COCONIC,
    COLLINEAR,
    GENERIC,
    OTHER,
    admissible_triples,
    coconic_triples,
    conic_wall_class,
    cross_wall,
    degeneracy_detect,
    enumerate_line_wall_codes,
    format_sequence,
    line_sequence,
    line_wall_class,
    line_wall_code,
    six_walls,
    six_walls_direct,
)

SIX = catalog.six_representatives()
SEVEN = catalog.seven_representatives()


def _circle(t: Fraction):
    u, v = t.numerator, t.denominator
    return (v * v - u * u, 2 * u * v, v * v + u * u)


def test_degeneracy_detect_examples():
    assert degeneracy_detect(SEVEN["(E,6)"]).kind == GENERIC
    coconic = catalog.coconic_representative("A")
    assert degeneracy_detect(coconic) == walls.Degeneracy(COCONIC, (1, 2, 3, 4, 5, 6))
    pts = {1: (0, 0, 1), 2: (1, 0, 0), 3: (3, 0, 1), 4: (0, 1, 1), 5: (2, 3, 1), 6: (-1, 5, 2)}
    assert degeneracy_detect(pts) == walls.Degeneracy(COLLINEAR, (1, 2, 3))
    pts[4] = (5, 0, 1)
    assert degeneracy_detect(pts).kind == OTHER


# line walls


def test_there_are_27_line_wall_classes():
    codes = enumerate_line_wall_codes()
    assert len(codes) == 27
    assert set(walls.wall_names()) == set(codes)
    assert sorted(walls.wall_names().values(), key=lambda w: int(w[1:])) == [f"W{i}" for i in range(1, 28)]


def test_anchor_sequence_d6_456():
    r = cross_wall(SEVEN["(D,6)"], (4, 5, 6))
    assert r.wall.name == "W18" and r.after_class == "(1,4,2,0)"
    assert r.before_class == "(3,4,0,0)_1"
    tokens = [t.strip() for t in r.wall.sequence.replace("{", "").replace("}", "").split(",")]
    assert tokens == ["4", "5", "17", "6", "27", "12", "37", "13", "23"]
    # the two pairs in braces may come in either order
    assert "{12,37}" in r.wall.sequence or "{37,12}" in r.wall.sequence
    assert {"".join(map(str, sorted(t))) for t in r.wall.red} == {"12", "37"}


def test_named_walls_from_the_adjacency_rows():
    r = cross_wall(SEVEN["(E,6)"], (1, 6, 7))
    assert r.wall.name == "W12"
    r = cross_wall(SEVEN["(B,6)"], (2, 5, 7))
    assert (r.wall.name, r.after_class) == ("W23", "(1,0,6,0)")


def test_line_wall_code_is_relabelling_invariant():
    r = cross_wall(SEVEN["(D,6)"], (4, 5, 6))
    seq = line_sequence(r.crossing.at_wall, (4, 5, 6))
    code = line_wall_code(seq)
    for perm in itertools.permutations((1, 2, 3, 7)):
        sigma = {4: 4, 5: 5, 6: 6, **dict(zip((1, 2, 3, 7), perm))}
        moved = relabel(r.crossing.at_wall, sigma)
        assert line_wall_code(line_sequence(moved, (4, 5, 6))) == code
    for perm in itertools.permutations((4, 5, 6)):
        sigma = {1: 1, 2: 2, 3: 3, 7: 7, **dict(zip((4, 5, 6), perm))}
        assert line_wall_class(relabel(r.crossing.at_wall, sigma)).name == "W18"


def test_line_wall_class_projective_invariance():
    at = cross_wall(SEVEN["(D,6)"], (4, 5, 6)).crossing.at_wall
    rng = random.Random(3)
    for _ in range(20):
        assert line_wall_class(apply(random_matrix(rng), at)).name == "W18"


def test_crossing_back_returns_to_the_start_class():
    r = cross_wall(SEVEN["(D,6)"], (4, 5, 6))
    back = cross_wall(r.after, (4, 5, 6))
    assert back.after_class == r.before_class
    assert back.wall.code == r.wall.code


# six points


def test_six_point_walls_per_class():
    counts = {cls: (len(admissible_triples(pts)), six_walls(pts)[1]) for cls, pts in SIX.items()}
    assert counts == {"alpha": (10, False), "beta": (3, True), "gamma": (7, False), "delta": (6, False)}


@pytest.mark.parametrize("cls", list(SIX))
def test_six_walls_lookup_matches_motion(cls):
    assert six_walls(SIX[cls]) == six_walls_direct(SIX[cls])


@given(seeds)
@settings(max_examples=8)
def test_six_walls_lookup_matches_motion_random(seed):
    pts = random_generic(random.Random(seed), 6, bound=12)
    assert six_walls(pts) == six_walls_direct(pts)


# seven points


def test_coconic_line_walls():
    assert coconic_triples(catalog.coconic_representative("C")) == [(1, 5, 7), (2, 6, 7), (3, 6, 7)]
    assert coconic_triples(catalog.coconic_representative("E")) == [(1, 6, 7)]


def test_single_point_motion_agrees_with_admissible_triples():
    for name in ("(E,6)", "(B,6)", "T"):
        assert walls.seven_walls_by_motion(SEVEN[name]) == set(admissible_triples(SEVEN[name]))


def _locality(before, after, triple):
    a, b = seven_data(before), seven_data(after)
    subs = {p for p in a.labels if six_fingerprint_of(a.subs[p]) != six_fingerprint_of(b.subs[p])}
    descs = {n for n in a.labels if a.descriptors[n].key() != b.descriptors[n].key()}
    return subs, descs


def test_change_locality_over_the_catalog():
    seen = 0
    for c in walls.catalog_line_crossings():
        cr = c.result.crossing
        subs, descs = _locality(cr.before, cr.after, c.triple)
        assert subs == set(range(1, 8)) - set(c.triple), (c.start, c.triple)
        assert descs == set(c.triple), (c.start, c.triple)
        seen += 1
    assert seen >= 82


@given(seeds)
@settings(max_examples=6)
def test_change_locality_random(seed):
    rng = random.Random(seed)
    pts = random_generic(rng, 7, bound=15)
    triples = admissible_triples(pts)
    t = triples[rng.randrange(len(triples))]
    r = cross_wall(pts, t)
    subs, descs = _locality(r.crossing.before, r.after, t)
    assert subs == set(range(1, 8)) - set(t)
    assert descs == set(t)


# conic walls


def test_eleven_conic_wall_classes():
    letters = {z: conic_wall_class(catalog.coconic_representative(z)).name for z in catalog.names("coconic")}
    assert letters == {z: z for z in "ABCDEFGHIJK"}
    assert len(walls.conic_wall_table()) == 11


def test_conic_wall_class_invariance():
    rng = random.Random(11)
    for z in catalog.names("coconic"):
        pts = catalog.coconic_representative(z)
        for _ in range(10):
            perm = list(range(1, 8))
            rng.shuffle(perm)
            moved = apply(random_matrix(rng), relabel(pts, dict(zip(range(1, 8), perm))))
            assert conic_wall_class(moved).name == z


def test_conic_diagram_counts():
    real = walls.realizable_diagrams()
    assert len(walls.all_diagrams()) == 12
    assert (len(real[True]), len(real[False])) == (5, 6)
    assert len(walls.non_realizable_diagrams()) == 4
    assert not set(walls.non_realizable_diagrams()) & (real[True] | real[False])


def test_six_coconic_points_are_the_conic_wall():
    six = {i + 1: _circle(Fraction(a, b)) for i, (a, b) in enumerate(((0, 1), (1, 2), (1, 1), (3, 1), (-1, 3), (-2, 1)))}
    assert conic_wall_class(six).name == "conic"


# refined walls


def test_refined_census():
    split = {w: len(codes) for w, codes in walls.refined_walls().items()}
    assert sum(split.values()) == walls.refined_census() == 38
    admitting = walls.conic_admitting_walls()
    assert len(admitting) == 11
    assert sum(split[w] for w in admitting) == 22
    assert sum(split[w] for w in split if w not in admitting) == 16
    assert all(split[w] == 1 for w in split if w not in admitting)
    assert (split["W4"], split["W16"], split["W12"], split["W21"], split["W22"]) == (3, 3, 2, 2, 1)


def test_refined_ends():
    ends: dict = {}
    for c in walls.catalog_line_crossings():
        r = c.result
        ends.setdefault(r.wall.name, set()).add(tuple(sorted((r.before_class, r.after_class))))
    assert ends["W21_1"] == ends["W21_2"] == {("(1,2,2,2)", "(1,2,2,2)")}
    for name in ("W12_1", "W12_2"):
        assert all("(7,0,0,0)" in e for e in ends[name])
    assert len(ends) == 38


# graphs


def test_adjacency_graph_counts():
    g = walls.adjacency_graph(6)
    assert (len(g.vertices), len(g.edges), len(g.wall_classes())) == (4, 3, 3)
    gc = walls.adjacency_graph(6, conics=True)
    extra = [e for e in gc.edges if e.wall.kind == walls.CONIC_WALL]
    assert len(gc.vertices) == 4 and len(gc.edges) == 4
    assert len(extra) == 1 and extra[0].ends == ("β", "β")
    g7 = walls.adjacency_graph(7)
    assert (len(g7.vertices), len(g7.wall_classes())) == (11, 27)
    g7c = walls.adjacency_graph(7, conics=True)
    assert len(g7c.vertices) == 14
    assert g7c.wall_classes() >= g7.wall_classes()


def test_graph_serialization_is_deterministic():
    g = walls.adjacency_graph(7, conics=True)
    assert g.to_dot() == walls.adjacency_graph(7, conics=True).to_dot()
    d = g.to_dict()
    assert d["stratification"] == "lines+conics"
    assert Counter(e["kind"] for e in d["edges"])[walls.CONIC_WALL] > 0
    assert all(f'"{v}"' in g.to_dot() for v in g.vertices)

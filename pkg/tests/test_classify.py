import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import apply, random_generic, random_matrix, relabel, seeds
from rp2conf import catalog, golden
from rp2conf.classify import (
    Quadruple,
    _seven_encode,
    seven_class,
    seven_data,
    seven_fingerprint,
    seven_quadruple,
    six_class,
    six_data,
    six_fingerprint,
    six_fingerprint_bruteforce,
    zone_letter,
)

SIX = catalog.six_representatives()
SEVEN = catalog.seven_representatives()

# arrangements pushed to the other side of their conic, and the catalog
# camera each one belongs to
IDENTIFIED = {
    "(A,6')": "(A,6)",
    "(B,6')": "(B,6)",
    "(C,6')": "(C',6)",
    "(D,6')": "(D,6)",
    "(E,6')": "(E,6)",
    "(F,6)": "(E,6)",
    "(F,6')": "(E,6)",
    "(G,6')": "(D,6)",
    "(H,6')": "(C,6)",
    "(I,6')": "(I,6)",
    "(J,6')": "(J,6)",
    "(K,6')": "(K,6)",
}


def test_six_classes_and_interior_counts():
    got = {name: six_class(pts) for name, pts in SIX.items()}
    assert {n: c.interior_count for n, c in got.items()} == {"alpha": 6, "beta": 3, "gamma": 3, "delta": 2}
    assert {n: c.name for n, c in got.items()} == {n: n for n in got}
    assert str(got["alpha"]) == "α"
    assert six_fingerprint(SIX["beta"]) != six_fingerprint(SIX["gamma"])
    assert len({six_fingerprint(p) for p in SIX.values()}) == 4


def test_zone_letters_of_zone_representatives():
    for z in "ABCDEFG":
        assert zone_letter(catalog.zone_representative(z), 1) == z


def test_zone_letter_is_relabelling_invariant():
    pts = catalog.zone_representative("E")
    for perm in itertools.permutations(range(2, 7)):
        sigma = {1: 1, **dict(zip(range(2, 7), perm))}
        assert zone_letter(relabel(pts, sigma), 1) == "E"


def test_zone_letter_follows_the_node():
    # moving a node to label 1 keeps its zone
    for cls, pts in SIX.items():
        letters = sorted(zone_letter(pts, n) for n in pts)
        ref = {}
        for n in pts:
            moved = relabel(pts, {x: (1 if x == n else (n if x == 1 else x)) for x in pts})
            ref[n] = zone_letter(moved, 1)
        assert letters == sorted(ref.values())


@pytest.mark.parametrize("cls", list(SIX))
def test_six_fingerprint_all_relabellings(cls):
    pts = SIX[cls]
    fp = six_fingerprint(pts)
    for perm in itertools.permutations(range(1, 7)):
        assert six_fingerprint(relabel(pts, dict(zip(range(1, 7), perm)))) == fp


@given(seeds)
@settings(max_examples=100)
def test_six_fingerprint_projective_invariance(seed):
    rng = random.Random(seed)
    pts = random_generic(rng, 6)
    assert six_fingerprint(apply(random_matrix(rng), pts)) == six_fingerprint(pts)


@given(seeds)
@settings(max_examples=25)
def test_six_fingerprint_agrees_with_bruteforce(seed):
    rng = random.Random(seed)
    a = six_data(random_generic(rng, 6))
    b = six_data(random_generic(rng, 6))
    assert (six_fingerprint(a) == six_fingerprint(b)) == (six_fingerprint_bruteforce(a) == six_fingerprint_bruteforce(b))


def test_six_bruteforce_separates_the_four_classes():
    assert len({six_fingerprint_bruteforce(six_data(p)) for p in SIX.values()}) == 4


# seven points


def test_quadruples_of_the_catalog():
    for name, want in golden.quadruples().items():
        assert seven_class(SEVEN[name]).name == want
        q = seven_quadruple(SEVEN[name])
        assert q == Quadruple.parse(want)
        assert q.n_beta + q.n_delta + q.n_gamma + q.n_alpha == 7
    assert str(seven_quadruple(SEVEN["(E,6)"])) == "(7,0,0,0)"
    assert str(seven_quadruple(SEVEN["R"])) == "(0,4,3,0)"


def test_fourteen_distinct_classes():
    fps = {seven_fingerprint(p) for p in SEVEN.values()}
    assert len(fps) == 14
    assert seven_class(SEVEN["(D,6)"]).name == "(3,4,0,0)_1"
    assert seven_class(SEVEN["(G,6)"]).name == "(3,4,0,0)_2"
    shared = {seven_class(SEVEN[n]).name for n in ("(C,6)", "(C',6)", "(H,6)")}
    assert shared == {"(2,2,3,0)_1", "(2,2,3,0)_2", "(2,2,3,0)_3"}


@pytest.mark.parametrize("pushed,camera", sorted(IDENTIFIED.items()))
def test_identifications(pushed, camera):
    assert seven_fingerprint(catalog.entry("pushed", pushed)) == seven_fingerprint(SEVEN[camera])


def _seven_bruteforce(pts):
    data = seven_data(pts)
    return min(_seven_encode(data, dict(zip(range(1, 8), p))) for p in itertools.permutations(range(1, 8)))


def test_seven_fingerprint_partition_matches_bruteforce():
    names = ["(E,6)", "(D,6)", "(G,6)", "(K,6)"]
    brute = {n: _seven_bruteforce(SEVEN[n]) for n in names}
    assert len(set(brute.values())) == len(names)
    assert _seven_bruteforce(catalog.entry("pushed", "(G,6')")) == brute["(D,6)"]
    assert _seven_bruteforce(catalog.entry("pushed", "(K,6')")) == brute["(K,6)"]


def test_seven_relabelling_invariance_500():
    rng = random.Random(7)
    names = list(SEVEN)
    fps = {n: seven_fingerprint(p) for n, p in SEVEN.items()}
    for k in range(500):
        n = names[k % len(names)]
        perm = list(range(1, 8))
        rng.shuffle(perm)
        assert seven_fingerprint(relabel(SEVEN[n], dict(zip(range(1, 8), perm)))) == fps[n]


@given(seeds)
@settings(max_examples=100)
def test_seven_projective_invariance(seed):
    rng = random.Random(seed)
    names = list(SEVEN)
    pts = SEVEN[names[seed % len(names)]]
    img = apply(random_matrix(rng), pts)
    assert seven_class(img) == seven_class(pts)
    assert seven_fingerprint(img) == seven_fingerprint(pts)


@given(seeds)
@settings(max_examples=30)
def test_random_seven_points_are_catalogued(seed):
    pts = random_generic(random.Random(seed), 7)
    assert seven_class(pts).name in set(golden.quadruples().values())

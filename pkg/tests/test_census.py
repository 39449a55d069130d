import pytest

from rp2conf import census
from rp2conf.exact import genericity_report
from rp2conf.walls import COCONIC, degeneracy_detect


def test_substreams_are_deterministic_and_independent():
    assert census.substream(3, 5).random() == census.substream(3, 5).random()
    assert census.substream(3, 5).random() != census.substream(3, 6).random()
    assert census.substream(3, 5).random() != census.substream(4, 5).random()


def test_samplers():
    rng = census.substream(0, 0)
    pts, _ = census.random_generic(rng, 7, 10)
    assert genericity_report(pts).fully_generic
    assert all(max(map(abs, v)) <= 10 for v in pts.values())
    pts, _ = census.random_coconic(rng, 10)
    assert degeneracy_detect(pts).kind == COCONIC
    assert degeneracy_detect(pts).labels == (1, 2, 3, 4, 5, 6)


@pytest.mark.parametrize("kind", census.KINDS)
def test_census_is_reproducible(kind):
    a = census.run_census(kind, 40, seed=9, bound=20)
    b = census.run_census(kind, 40, seed=9, bound=20)
    assert a == b and a.ok
    assert sum(a.histogram.values()) == 40


def test_census_does_not_depend_on_jobs():
    a = census.run_census("six", 60, seed=2, bound=20, jobs=1)
    b = census.run_census("six", 60, seed=2, bound=20, jobs=2)
    assert a == b


def test_six_census_sees_the_four_classes():
    r = census.run_census("six", 400, seed=1)
    assert r.ok
    assert set(r.histogram) == {"alpha", "beta", "gamma", "delta"}
    assert len(r.fingerprints) == 4


def test_census_rejects_bad_configuration():
    with pytest.raises(ValueError):
        census.run_census("eight", 10)
    with pytest.raises(ValueError):
        census.run_census("six", 0)
    with pytest.raises(ValueError):
        census.run_census("six", 10, bound=1)

"""Acceptance suite: one PASS/FAIL line per criterion, printed in the
terminal summary (and immediately with ``-s``)."""

import itertools
import random
import sys
import time
from collections import Counter
from contextlib import contextmanager

import pytest

from conftest import apply, random_matrix, relabel
from rp2conf import catalog, golden, tables, walls
from rp2conf.census import run_census
from rp2conf.classify import seven_class, seven_data, seven_fingerprint, six_data, six_fingerprint, six_fingerprint_of
from rp2conf.exact import Point, collinear, cremona_transform
from rp2conf.pencils import combinatorial_pencil, order_consistent

RESULTS: dict[int, str] = {}
CENSUS_SEED = 20240601


@contextmanager
def criterion(n: int, title: str, budget: float):
    t0 = time.perf_counter()
    try:
        yield
        dt = time.perf_counter() - t0
        assert dt < budget, f"took {dt:.1f} s, budget {budget:.0f} s"
    except BaseException as e:
        dt = time.perf_counter() - t0
        RESULTS[n] = f"criterion {n:2d}: FAIL  {title} ({dt:.1f} s): {str(e).splitlines()[0] if str(e) else type(e).__name__}"
        print("\n" + RESULTS[n])
        raise
    RESULTS[n] = f"criterion {n:2d}: PASS  {title} ({dt:.1f} s)"
    print("\n" + RESULTS[n])


def _table(name):
    t = tables.CHECKS[name]()
    assert t.ok, f"{name}: " + "; ".join(t.diffs[:3])
    return t


def test_criterion_01_seven_pencils_of_cubics():
    with criterion(1, "seven pencils of cubics, zones A..G", 1.0):
        t = _table("cubic_pencils")
        assert len(t.rows) == 7


def test_criterion_02_cremona_cross_check():
    with criterion(2, "seven pencils of conics and their pullback", 1.0):
        t = _table("conic_pencils")
        assert len(t.rows) == 7


def test_criterion_03_four_lists_and_six_point_census():
    with criterion(3, "four lists of six pencils; 10,000-sample six-point census", 120):
        t = _table("six_lists")
        assert len(t.rows) == 24
        r = run_census("six", 10_000, seed=CENSUS_SEED, bound=50)
        assert r.ok, r.failures[:3]
        assert len(r.fingerprints) == 4, f"{len(r.fingerprints)} fingerprints"
        assert set(r.histogram) == {"alpha", "beta", "gamma", "delta"}


def test_criterion_04_six_point_adjacency_counts():
    with criterion(4, "six-point adjacency counts by wall crossing", 30):
        got = {}
        for cls, pts in catalog.six_representatives().items():
            ends = Counter(walls.cross_wall(pts, t).after_class for t in walls.admissible_triples(pts))
            if walls.six_walls(pts)[1]:
                r = walls.cross_wall(pts, "conic")
                ends[("conic", r.after_class)] += 1
            got[cls] = dict(ends)
        assert got == {
            "alpha": {"gamma": 10},
            "beta": {"delta": 3, ("conic", "beta"): 1},
            "gamma": {"delta": 6, "alpha": 1},
            "delta": {"gamma": 4, "beta": 2},
        }, got


IDENTIFIED = {
    "(A,6')": "(A,6)", "(B,6')": "(B,6)", "(C,6')": "(C',6)", "(D,6')": "(D,6)",
    "(E,6')": "(E,6)", "(F,6)": "(E,6)", "(F,6')": "(E,6)", "(G,6')": "(D,6)",
    "(H,6')": "(C,6)", "(I,6')": "(I,6)", "(J,6')": "(J,6)", "(K,6')": "(K,6)",
}


def test_criterion_05_fourteen_configurations():
    with criterion(5, "14 classes, quadruples, identifications; 10,000-sample seven-point census", 600):
        reps = catalog.seven_representatives()
        fps = {n: seven_fingerprint(p) for n, p in reps.items()}
        assert len(set(fps.values())) == 14
        _table("quadruples")
        for pushed, camera in IDENTIFIED.items():
            assert seven_fingerprint(catalog.entry("pushed", pushed)) == fps[camera], pushed
        r = run_census("seven", 10_000, seed=CENSUS_SEED, bound=50)
        assert r.ok, r.failures[:3]
        assert set(r.histogram) <= set(golden.quadruples().values())


def test_criterion_06_coconic_configurations():
    with criterion(6, "11 conic-wall classes; non-realizable diagrams absent from 10,000 coconic samples", 300):
        classes = {walls.conic_wall_code(catalog.coconic_representative(z), 7) for z in catalog.names("coconic")}
        assert len(classes) == 11
        bad = set(walls.non_realizable_diagrams())
        assert len(bad) >= 3
        r = run_census("coconic", 10_000, seed=CENSUS_SEED, bound=50)
        assert r.ok, r.failures[:3]
        assert not {code for code, _ in r.fingerprints} & bad


def _anchor_tokens(text):
    """Tokens of an L-sequence with each braced group as a set."""
    out = []
    for part in text.replace(" ", "").replace("{", "|{").replace("}", "}|").split("|"):
        if part.startswith("{"):
            out.append(frozenset(part.strip("{}").split(",")))
        else:
            out.extend(x for x in part.split(",") if x)
    return out


def test_criterion_07_adjacency_tables_and_anchor():
    with criterion(7, "line- and conic-wall adjacency rows, one W bijection, anchor sequence", 120):
        rows = golden.line_adjacency()
        assert len(rows) >= 60
        _table("line_adjacency")
        _table("conic_adjacency")
        # one bijection between listed W names and computed classes
        name_codes: dict = {}
        reps = catalog.seven_representatives()
        for row in rows:
            code = walls.cross_wall(reps[row.start], tuple(sorted(row.triple))).wall.code
            name_codes.setdefault(row.wall, set()).add(code)
        assert all(len(c) == 1 for c in name_codes.values()), name_codes
        codes = [next(iter(c)) for c in name_codes.values()]
        assert len(set(codes)) == len(codes) == 27
        r = walls.cross_wall(reps["(D,6)"], (4, 5, 6))
        assert _anchor_tokens(r.wall.sequence) == _anchor_tokens("4, 5, 17, 6, 27, {37,12}, 13, 23"), r.wall.sequence
        assert r.wall.name == "W18"


def test_criterion_08_camera_and_wall_counts():
    with criterion(8, "cameras and walls of the adjacency graphs", 300):
        g7 = walls.adjacency_graph(7)
        assert (len(g7.vertices), len(g7.wall_classes())) == (11, 27)
        g6 = walls.adjacency_graph(6)
        assert (len(g6.vertices), len(g6.edges)) == (4, 3)
        g6c = walls.adjacency_graph(6, conics=True)
        extra = set(g6c.edges) - set(g6.edges)
        assert len(g6c.vertices) == 4 and len(extra) == 1
        (e,) = extra
        assert e.wall.kind == walls.CONIC_WALL and e.ends == ("β", "β")


def test_criterion_09_refined_walls():
    with criterion(9, "38 refined line walls = 22 + 16 with the listed splits", 300):
        split = {w: len(c) for w, c in walls.refined_walls().items()}
        assert walls.refined_census() == 38
        admitting = walls.conic_admitting_walls()
        assert len(admitting) == 11
        assert sum(split[w] for w in admitting) == 22
        assert sum(split[w] for w in split if w not in admitting) == 16 == 27 - 11
        listed = Counter(r.wall.split("_")[0] for r in golden.refined_adjacency())
        assert {w: split[w] for w in listed} == dict(listed)
        assert set(listed) == set(admitting)
        _table("refined_adjacency")


def _rand_generic(rng, n):
    from conftest import random_generic

    return random_generic(rng, n)


def test_criterion_10_property_suites():
    with criterion(10, "invariance, involution, order-consistency and locality suites", 300):
        rng = random.Random(10)
        six = catalog.six_representatives()
        seven = catalog.seven_representatives()
        # projective invariance, 100 maps
        for k in range(100):
            m = random_matrix(rng)
            p6 = _rand_generic(rng, 6)
            assert six_fingerprint(apply(m, p6)) == six_fingerprint(p6)
            name = list(seven)[k % 14]
            assert seven_class(apply(m, seven[name])).name == golden.quadruples()[name]
        # relabelling: all permutations for six points, 500 for seven
        for pts in six.values():
            fp = six_fingerprint(pts)
            for perm in itertools.permutations(range(1, 7)):
                assert six_fingerprint(relabel(pts, dict(zip(range(1, 7), perm)))) == fp
        fps = {n: seven_fingerprint(p) for n, p in seven.items()}
        for k in range(500):
            name = list(seven)[k % 14]
            perm = list(range(1, 8))
            rng.shuffle(perm)
            assert seven_fingerprint(relabel(seven[name], dict(zip(range(1, 8), perm)))) == fps[name]
        # scale invariance
        for pts in list(six.values()) + list(seven.values())[:4]:
            factors = {x: rng.randint(2, 9) * rng.choice((-1, 1)) for x in pts}
            scaled = {x: tuple(factors[x] * c for c in v) for x, v in pts.items()}
            f = six_fingerprint if len(pts) == 6 else seven_fingerprint
            assert f(scaled) == f(pts)
        # Cremona involution
        done = 0
        while done < 100:
            base = [tuple(rng.randint(-9, 9) for _ in range(3)) for _ in range(3)]
            p = tuple(rng.randint(-30, 30) for _ in range(3))
            if not any(p) or collinear(*base) or any(collinear(a, b, p) for a, b in itertools.combinations(base, 2)):
                continue
            assert cremona_transform(base, cremona_transform(base, p)) == Point(*p)
            done += 1
        # Bezout order-consistency on every sampled pencil
        for _ in range(50):
            p6 = _rand_generic(rng, 6)
            assert all(order_consistent(p6, n) for n in p6)
        for z in "ABCDEFG":
            assert order_consistent(catalog.zone_representative(z), 1)
        # change locality of every catalog line-wall crossing
        for c in walls.catalog_line_crossings():
            a, b = seven_data(c.result.crossing.before), seven_data(c.result.crossing.after)
            subs = {p for p in a.labels if six_fingerprint_of(a.subs[p]) != six_fingerprint_of(b.subs[p])}
            descs = {n for n in a.labels if a.descriptors[n].key() != b.descriptors[n].key()}
            assert subs == set(range(1, 8)) - set(c.triple) and len(subs) == 4
            assert descs == set(c.triple)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))

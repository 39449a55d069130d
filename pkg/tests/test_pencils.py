import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import apply, random_generic, random_matrix, relabel, seeds
from rp2conf import catalog, golden
from rp2conf.exact import CyclicWord, GeometryError, canonical_cycle, conic_word, conic_coeffs_through, cross, primitive_ints
from rp2conf.pencils import (
    ACNODE,
    CRUNODE,
    CUBIC_MONOMIALS,
    CubicForm,
    NotInPencil,
    ReducibleCubic,
    UnexpectedRank,
    combinatorial_pencil,
    conic_pencil_after_cremona,
    cubic_eval,
    cubic_gradient,
    nodal_cubic_descriptor,
    nodal_cubic_fast,
    nodal_pencil_basis,
    order_consistent,
    pencil_coordinate,
    reducible_members,
    seven_point_nodal_cubic,
)

ZONES = "ABCDEFG"


def _form(terms: dict) -> tuple:
    """Coefficient vector of a cubic given as {exponents: coefficient}."""
    return tuple(terms.get(m, 0) for m in CUBIC_MONOMIALS)


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def _members(pencil):
    return [(r.m, r.word.canonical) for r in pencil.members]


def _same_cycle(a, b):
    return canonical_cycle(a) == canonical_cycle(b)


@pytest.mark.parametrize("zone", ZONES)
def test_nodal_pencil_basis_definition(zone):
    pts = catalog.zone_representative(zone)
    pencil = nodal_pencil_basis(pts, 1)
    rng = random.Random(zone)
    for lam, mu in [(1, 0), (0, 1)] + [(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(25)]:
        c = pencil.member(lam, mu).coeffs
        assert all(cubic_eval(c, p) == 0 for p in pts.values())
        assert cubic_gradient(c, pts[1]) == (0, 0, 0)


ALIGNED = {1: (0, 0, 1), 2: (1, 0, 1), 3: (2, 0, 1), 4: (0, 1, 1), 5: (1, 3, 1), 6: (3, 1, 2)}


def test_node_on_aligned_triple_is_reported():
    # every member contains the line 123, so the reducible members degenerate
    with pytest.raises(GeometryError):
        combinatorial_pencil(ALIGNED, 1)



def test_pencil_coordinate_examples():
    pts = catalog.zone_representative("A")
    pencil = nodal_pencil_basis(pts, 1)
    c0, c1 = pencil.c0.coeffs, pencil.c1.coeffs
    assert pencil_coordinate(pencil, pencil.c0) == (1, 0)
    assert pencil_coordinate(pencil, [a + b for a, b in zip(c0, c1)]) == (1, 1)
    with pytest.raises(NotInPencil):
        pencil_coordinate(pencil, _form({(3, 0, 0): 1}))


def test_reducible_member_reexpands():
    pts = catalog.zone_representative("B")
    pencil = nodal_pencil_basis(pts, 1)
    line = cross(pts[1], pts[2])
    conic = conic_coeffs_through(*(pts[i] for i in (1, 3, 4, 5, 6)))
    line_p = {(1, 0, 0): line[0], (0, 1, 0): line[1], (0, 0, 1): line[2]}
    quad = dict(zip([(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)], conic))
    product = _form(_poly_mul(line_p, quad))
    lam, mu = pencil_coordinate(pencil, product)
    combo = [lam * a + mu * b for a, b in zip(pencil.c0.coeffs, pencil.c1.coeffs)]
    assert primitive_ints(combo) in (primitive_ints(product), primitive_ints([-x for x in product]))


def test_reducible_members_zone_a():
    got = {r.m: r.word for r, _ in reducible_members(catalog.zone_representative("A"), 1)}
    want = {2: (5, 1, 4, 3, 6), 5: (3, 1, 2, 6, 4), 3: (5, 1, 6, 2, 4), 6: (3, 1, 4, 5, 2), 4: (2, 1, 6, 5, 3)}
    assert got == {m: CyclicWord(w) for m, w in want.items()}
    coords = [c for _, c in reducible_members(catalog.zone_representative("A"), 1)]
    assert len(coords) == 5
    assert all(a[0] * b[1] != a[1] * b[0] for a, b in itertools.combinations(coords, 2))


def test_combinatorial_pencil_rows_a_and_g():
    a = combinatorial_pencil(catalog.zone_representative("A"), 1)
    assert _same_cycle(_members(a), [(2, canonical_cycle((5, 1, 4, 3, 6))), (5, canonical_cycle((3, 1, 2, 6, 4))),
                                     (3, canonical_cycle((5, 1, 6, 2, 4))), (6, canonical_cycle((3, 1, 4, 5, 2))),
                                     (4, canonical_cycle((2, 1, 6, 5, 3)))])
    g = combinatorial_pencil(catalog.zone_representative("G"), 1)
    assert _same_cycle(_members(g), [(2, canonical_cycle((1, 4, 6, 3, 5))), (5, canonical_cycle((1, 2, 4, 3, 6))),
                                     (3, canonical_cycle((1, 2, 4, 5, 6))), (6, canonical_cycle((1, 2, 4, 5, 3))),
                                     (4, canonical_cycle((1, 2, 6, 3, 5)))])


@pytest.mark.parametrize("zone", ZONES)
def test_combinatorial_pencil_golden(zone):
    got = combinatorial_pencil(catalog.zone_representative(zone), 1)
    want = [(m.line[1], canonical_cycle(m.word)) for m in golden.cubic_pencils()[zone]]
    assert _same_cycle(_members(got), want)


def test_conic_pencil_zone_a_base_145():
    got = conic_pencil_after_cremona(catalog.zone_representative("A"), 1, (1, 4, 5))
    keys = [m.key() for m in got]
    want = [
        ("lines", frozenset({frozenset({1, 2}), frozenset({3, 6})})),
        ("conic", canonical_cycle((1, 3, 4, 6, 2))),
        ("lines", frozenset({frozenset({1, 3}), frozenset({2, 6})})),
        ("lines", frozenset({frozenset({1, 6}), frozenset({2, 3})})),
        ("conic", canonical_cycle((1, 6, 5, 3, 2))),
    ]
    assert _same_cycle(keys, want)


@pytest.mark.parametrize("zone", ZONES)
def test_cremona_pullback_equals_direct_pencil(zone):
    base, _ = golden.conic_pencils()[zone]
    pts = catalog.zone_representative(zone)
    got = conic_pencil_after_cremona(pts, 1, base)
    assert _same_cycle([m.m for m in got], [r.m for r in combinatorial_pencil(pts, 1).members])


@pytest.mark.parametrize("zone", ZONES)
def test_pencil_relabel_equivariance(zone):
    pts = catalog.zone_representative(zone)
    base = combinatorial_pencil(pts, 1)
    for perm in itertools.permutations(range(2, 7)):
        sigma = {1: 1, **dict(zip(range(2, 7), perm))}
        assert combinatorial_pencil(relabel(pts, sigma), 1) == base.relabel(sigma)


@given(seeds)
@settings(max_examples=60)
def test_bezout_order_and_conic_word_coherence(seed):
    rng = random.Random(seed)
    pts = random_generic(rng, 6)
    for node in pts:
        assert order_consistent(pts, node)
        # the m labels in pencil order are the points in order on their own conic
        others = [x for x in pts if x != node]
        ms = [r.m for r in combinatorial_pencil(pts, node).members]
        assert canonical_cycle(ms) == conic_word([pts[x] for x in others], others)


@given(seeds)
@settings(max_examples=100)
def test_pencil_projective_invariance(seed):
    rng = random.Random(seed)
    pts = catalog.zone_representative(ZONES[seed % 7])
    img = apply(random_matrix(rng), pts)
    for node in (1, 1 + seed % 6):
        assert combinatorial_pencil(img, node) == combinatorial_pencil(pts, node)


# seven-point nodal cubics


@pytest.mark.parametrize("name", catalog.names("seven"))
def test_seven_point_nodal_cubic(name):
    pts = catalog.seven_representatives()[name]
    for n in pts:
        c = seven_point_nodal_cubic(pts, n)
        assert all(c(p) == 0 for p in pts.values())
        assert c.gradient(pts[n]) == (0, 0, 0)
        fast = nodal_cubic_fast(pts, n)
        assert primitive_ints(fast) in (c.coeffs, tuple(-x for x in c.coeffs))


def test_seven_point_cubic_through_aligned_node_is_reported():
    pts = {**ALIGNED, 7: (5, -2, 3)}
    c = seven_point_nodal_cubic(pts, 1)
    with pytest.raises(ReducibleCubic):
        nodal_cubic_descriptor(c, pts[1], {k: v for k, v in pts.items() if k != 1}, 1)



def _proj(x, y):
    d = x.denominator * y.denominator
    return primitive_ints((int(x * d), int(y * d), d))


def test_crunode_descriptor_against_parametrization():
    cubic = _form({(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1})
    ts = [Fraction(1, 2), Fraction(-1, 3), Fraction(3, 2), Fraction(2), Fraction(-3), Fraction(5)]
    others = {i + 2: _proj(t * t - 1, t * (t * t - 1)) for i, t in enumerate(ts)}
    d = nodal_cubic_descriptor(cubic, (0, 0, 1), others, 1)
    assert d.node_type == CRUNODE
    # the loop is traced by the lines with |slope| < 1
    assert d.loop == frozenset(i + 2 for i, t in enumerate(ts) if abs(t) < 1)
    by_t = sorted(others, key=lambda i: ts[i - 2])
    loop = [i for i in by_t if abs(ts[i - 2]) < 1]
    odd = [i for i in by_t if ts[i - 2] > 1] + [i for i in by_t if ts[i - 2] < -1]
    assert list(d.loop_run) in (loop, loop[::-1])
    assert (list(d.loop_run), list(d.odd_run)) in ((loop, odd), (loop[::-1], odd[::-1]))


def test_acnode_descriptor_against_parametrization():
    # x1^2 x2 = x0^2 (x0 - x2): isolated point at the origin
    cubic = _form({(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): 1})
    ts = [Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(-3), Fraction(7, 2)]
    others = {i + 2: _proj(t * t + 1, t * (t * t + 1)) for i, t in enumerate(ts)}
    d = nodal_cubic_descriptor(cubic, (0, 0, 1), others, 1)
    assert d.node_type == ACNODE and d.loop == frozenset() and d.loop_run == ()
    assert d.word == CyclicWord(sorted(others, key=lambda i: ts[i - 2]))


@given(seeds)
@settings(max_examples=100)
def test_descriptor_projective_invariance(seed):
    rng = random.Random(seed)
    names = catalog.names("seven")
    pts = catalog.seven_representatives()[names[seed % len(names)]]
    img = apply(random_matrix(rng), pts)
    node = 1 + seed % 7
    rest = {x: v for x, v in pts.items() if x != node}
    rest_img = {x: v for x, v in img.items() if x != node}
    d = nodal_cubic_descriptor(seven_point_nodal_cubic(pts, node), pts[node], rest, node)
    e = nodal_cubic_descriptor(seven_point_nodal_cubic(img, node), img[node], rest_img, node)
    assert d.key() == e.key()

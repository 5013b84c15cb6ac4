import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from circumradii.exact_core import (
    INFINITE,
    DuplicatePoint,
    Mode,
    Point,
    circumcenter,
    concyclic,
    is_general_position,
    orientation,
    squared_area,
    squared_circumradius,
)
from oracles import incircle_by_sympy, shared_edge_instance, sq_radius_by_center

F = Fraction

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
points = st.tuples(rationals, rationals)


@pytest.mark.parametrize(
    "a, b, c, expected",
    [((0, 0), (1, 0), (0, 1), 1), ((0, 0), (1, 0), (2, 0), 0), ((0, 0), (0, 1), (1, 0), -1)],
)
def test_orientation(a, b, c, expected):
    assert orientation(a, b, c) == expected


@pytest.mark.parametrize(
    "a, b, c, expected",
    [
        ((0, 0), (4, 0), (0, 3), F(36)),
        ((0, 0), (1, 0), (2, 0), F(0)),
        ((0, 0), (1, 0), (F(1, 2), F(1, 2)), F(1, 16)),
    ],
)
def test_squared_area(a, b, c, expected):
    assert squared_area(a, b, c) == expected


def test_squared_circumradius_examples():
    assert squared_circumradius((0, 0), (4, 0), (0, 3)) == F(25, 4)
    assert squared_circumradius((0, 0), (1, 0), (2, 0)) is INFINITE
    # frozen from the independent circumcenter solve
    assert sq_radius_by_center((0, 0), (4, 0), (1, 3)) == F(5)
    assert squared_circumradius((0, 0), (4, 0), (1, 3)) == F(5)


def test_rational_coordinates_take_the_general_path():
    a, b, c = (F(1, 2), 0), (F(9, 2), 0), (F(3, 2), 3)
    assert squared_circumradius(a, b, c) == F(5)
    assert circumcenter(a, b, c) == Point.of(F(5, 2), 1)


def test_duplicate_point_raises():
    with pytest.raises(DuplicatePoint):
        squared_circumradius((0, 0), (0, 0), (1, 1))
    with pytest.raises(DuplicatePoint):
        concyclic((0, 0), (1, 0), (1, 0), (2, 2))
    with pytest.raises(DuplicatePoint):
        is_general_position([(0, 0), (1, 1), (0, 0)])


def test_infinite_is_a_singleton_equal_only_to_itself():
    assert squared_circumradius((0, 0), (1, 1), (2, 2)) == squared_circumradius((0, 5), (1, 5), (7, 5))
    assert INFINITE != F(10**9)
    assert len({INFINITE, INFINITE, F(1)}) == 2


@pytest.mark.parametrize(
    "pts, expected",
    [
        ([(1, 0), (0, 1), (-1, 0), (0, -1)], True),
        ([(0, 0), (1, 0), (2, 0), (3, 0)], True),
        ([(0, 0), (4, 0), (0, 3), (1, 1)], False),
    ],
)
def test_concyclic(pts, expected):
    assert concyclic(*pts) is expected
    assert incircle_by_sympy(*pts) is expected


def test_three_collinear_plus_one_is_not_concyclic():
    assert not concyclic((0, 0), (1, 0), (2, 0), (5, 7))


def test_general_position_examples():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    rep = is_general_position(square, Mode.PAPER)
    assert not rep.ok and rep.witness == (0, 1, 2, 3)

    line3 = [(0, 0), (1, 0), (2, 0), (5, 7)]
    rep = is_general_position(line3, Mode.STRICT)
    assert not rep.ok and rep.witness == (0, 1, 2)
    rep = is_general_position(line3, Mode.PAPER)
    assert rep.ok and rep.witness is None
    assert is_general_position(line3).mode is Mode.PAPER


def test_general_position_witness_is_lexicographically_smallest():
    pts = [(6, 13), (1, 0), (0, 1), (-1, 0), (0, -1), (2, 2), (0, 0), (4, 4), (9, 9)]
    rep = is_general_position(pts)
    # unit circle gives (1, 2, 3, 4); the diagonal line gives (5, 6, 7, 8)
    assert rep.witness == (1, 2, 3, 4)


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=4, max_size=7, unique=True))
def test_general_position_matches_brute_force(pts):
    brute = [q for q in itertools.combinations(range(len(pts)), 4) if concyclic(*(pts[i] for i in q))]
    rep = is_general_position(pts, Mode.PAPER)
    assert rep.ok == (not brute)
    if brute:
        assert rep.witness == min(brute)


@given(points, points, points)
def test_matches_circumcenter_oracle(a, b, c):
    assume(len({a, b, c}) == 3)
    r2 = squared_circumradius(a, b, c)
    if orientation(a, b, c) == 0:
        assert r2 is INFINITE
        return
    center = circumcenter(a, b, c)
    for p in (a, b, c):
        assert (p[0] - center.x) ** 2 + (p[1] - center.y) ** 2 == r2


def test_matches_sympy_solve_on_seeded_triples():
    rng = random.Random(7)
    for _ in range(30):
        tri = [(F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(3)]
        if len(set(tri)) < 3:
            continue
        expected = sq_radius_by_center(*tri)
        got = squared_circumradius(*tri)
        assert (got is INFINITE) if expected is None else got == expected


@given(points, points, points, points)
def test_translation_invariance(a, b, c, v):
    assume(len({a, b, c}) == 3)
    shift = lambda p: (p[0] + v[0], p[1] + v[1])  # noqa: E731
    assert squared_circumradius(a, b, c) == squared_circumradius(shift(a), shift(b), shift(c))


@given(points, points, points, rationals)
def test_scaling_covariance(a, b, c, s):
    assume(len({a, b, c}) == 3 and s != 0)
    scaled = [(p[0] * s, p[1] * s) for p in (a, b, c)]
    r2 = squared_circumradius(a, b, c)
    if r2 is INFINITE:
        assert squared_circumradius(*scaled) is INFINITE
    else:
        assert squared_circumradius(*scaled) == r2 * s * s


@given(points, points, points)
def test_permutation_and_reflection_invariance(a, b, c):
    assume(len({a, b, c}) == 3)
    r2 = squared_circumradius(a, b, c)
    for perm in itertools.permutations((a, b, c)):
        assert squared_circumradius(*perm) == r2
    mirror_x = [(p[0], -p[1]) for p in (a, b, c)]
    mirror_y = [(-p[0], p[1]) for p in (a, b, c)]
    assert squared_circumradius(*mirror_x) == r2
    assert squared_circumradius(*mirror_y) == r2


def test_shared_edge_fact_on_constructed_instances():
    rng = random.Random(3)
    for _ in range(25):
        inst = shared_edge_instance(rng)
        if inst is None:
            continue
        a, b, (c, d, e) = inst
        r = squared_circumradius(a, b, c)
        assert r is not INFINITE
        assert squared_circumradius(a, b, d) == r == squared_circumradius(a, b, e)
        assert any(concyclic(*q) for q in itertools.combinations((a, b, c, d, e), 4))

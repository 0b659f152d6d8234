from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from urysohn import (
    ORIGIN,
    PreconditionError,
    UrysohnPoint,
    avoidant_witness,
    ball_key,
    delta,
    equidistant_family,
    seed_point,
)

COORDS = [F(k, 12) for k in range(1, 13)]

points = st.builds(
    UrysohnPoint.of,
    st.dictionaries(st.sampled_from(COORDS), st.integers(0, 5), max_size=6),
)


def test_point_canonicalization():
    p = UrysohnPoint.of({F(1): 0, F(1, 2): 3})
    assert p.coords == ((F(1, 2), 3),)
    assert p.value(F(1)) == 0
    assert not ORIGIN


def test_delta_examples():
    assert delta(ORIGIN, ORIGIN) == 0
    assert delta(ORIGIN, UrysohnPoint.of({F(1, 2): 3})) == F(1, 2)
    f = UrysohnPoint.of({F(1): 2, F(1, 4): 1})
    g = UrysohnPoint.of({F(1): 2, F(1, 4): 5})
    assert delta(f, g) == F(1, 4)


@given(points, points, points)
@settings(max_examples=300)
def test_delta_is_an_ultrametric(f, g, h):
    assert delta(f, g) == delta(g, f)
    assert (delta(f, g) == 0) == (f == g)
    assert delta(f, h) <= max(delta(f, g), delta(g, h))


@given(points, points)
def test_delta_values_come_from_supports(f, g):
    assert delta(f, g) in {F(0)} | set(f.support()) | set(g.support())


def test_seed_point_examples():
    assert seed_point(ORIGIN, F(1), 0) == ORIGIN
    q = seed_point(ORIGIN, F(1), 2)
    assert q == UrysohnPoint.of({F(1): 2})
    assert delta(ORIGIN, q) == 1
    a = UrysohnPoint.of({F(2): 5, F(1, 2): 1})
    assert seed_point(a, F(1), 3) == UrysohnPoint.of({F(2): 5, F(1): 3})


def test_seed_point_rejects_nonpositive_radius():
    with pytest.raises(PreconditionError):
        seed_point(ORIGIN, F(0), 1)


@given(points, st.sampled_from(COORDS), st.integers(0, 6), st.integers(0, 6))
def test_seed_points_pairwise_distance(a, r, j, k):
    pj, pk = seed_point(a, r, j), seed_point(a, r, k)
    assert delta(a, pj) <= r
    if j != k:
        assert delta(pj, pk) == r
    # index a(r) stays strictly inside a's class
    assert delta(a, seed_point(a, r, a.value(r))) < r


def test_equidistant_family_example():
    fam = equidistant_family(ORIGIN, F(1), 3)
    assert fam == (ORIGIN, UrysohnPoint.of({F(1): 1}), UrysohnPoint.of({F(1): 2}))
    for x, y in combinations(fam, 2):
        assert delta(x, y) == 1


@given(points, st.sampled_from(COORDS))
@settings(max_examples=100)
def test_equidistant_family_is_sound(a, r):
    fam = equidistant_family(a, r, 10)
    assert len(set(fam)) == 10
    assert all(delta(a, m) <= r for m in fam)
    assert all(delta(x, y) == r for x, y in combinations(fam, 2))


def test_avoidant_witness_examples():
    assert avoidant_witness(ORIGIN, F(1), []) == ORIGIN
    assert avoidant_witness(ORIGIN, F(1), [ORIGIN]) == UrysohnPoint.of({F(1): 1})
    a_set = [ORIGIN, UrysohnPoint.of({F(1): 1}), UrysohnPoint.of({F(1): 5})]
    assert avoidant_witness(ORIGIN, F(1), a_set) == UrysohnPoint.of({F(1): 2})


def test_avoidant_witness_rejects_outside_points():
    with pytest.raises(PreconditionError):
        avoidant_witness(ORIGIN, F(1, 2), [UrysohnPoint.of({F(1): 1})])


@given(points, st.sampled_from(COORDS), st.lists(st.integers(0, 8), max_size=6))
def test_avoidant_witness_is_sound(a, r, indices):
    constraints = [seed_point(a, r, k) for k in indices]
    p = avoidant_witness(a, r, constraints)
    assert delta(a, p) <= r
    assert all(delta(x, p) == r for x in constraints)


def test_ball_key_trace():
    a = UrysohnPoint.of({F(1): 2, F(1, 4): 1})
    assert ball_key(a, F(2)).trace == ORIGIN
    assert ball_key(a, F(1, 2)).trace == UrysohnPoint.of({F(1): 2})


@given(points, points, st.sampled_from(COORDS))
def test_ball_key_equality_characterizes_balls(a, b, r):
    assert (ball_key(a, r) == ball_key(b, r)) == (delta(a, b) <= r)

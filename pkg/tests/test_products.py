import random
from fractions import Fraction as F
from itertools import combinations, product

import pytest

from urysohn import (
    INF,
    ORIGIN,
    ProductPoint,
    UrysohnPoint,
    linf_distance,
    linf_grid_search,
    lp_counterexample,
    lp_solvability_condition,
    matrix_rank,
    pairing_matrix,
    product_equidistant_family,
)
from urysohn.products import solve_nonnegative
from urysohn.gen import random_point


def test_linf_is_max_of_components():
    a = ProductPoint(ORIGIN, ORIGIN)
    b = ProductPoint(UrysohnPoint.of({F(1): 1}), UrysohnPoint.of({F(1, 2): 1}))
    assert linf_distance(a, a) == 0
    assert linf_distance(a, b) == 1


def test_linf_strong_triangle_on_random_triples():
    rng = random.Random(67)
    for _ in range(300):
        a, b, c = (
            ProductPoint(random_point(rng), random_point(rng)) for _ in range(3)
        )
        assert linf_distance(a, c) <= max(linf_distance(a, b), linf_distance(b, c))


def test_product_family_example():
    center = ProductPoint(ORIGIN, ORIGIN)
    fam = product_equidistant_family(center, F(1), 3)
    for x, y in combinations(fam, 2):
        assert linf_distance(x, y) == 1
    assert all(linf_distance(center, m) <= 1 for m in fam)


def test_product_family_exhaustive_pairwise():
    rng = random.Random(71)
    for _ in range(30):
        center = ProductPoint(random_point(rng), random_point(rng))
        r = F(rng.randint(1, 12), 12)
        fam = product_equidistant_family(center, r, 8)
        assert len(set(fam)) == 8
        assert all(linf_distance(center, m) <= r for m in fam)
        assert all(
            linf_distance(x, y) == r for x, y in combinations(fam, 2)
        )


def test_pairing_matrix_rank_is_three():
    assert matrix_rank(pairing_matrix()) == 3


def test_solvability_symmetric_target():
    ok, defect = lp_solvability_condition(1, (F(1), F(1), F(1), F(1)))
    assert ok and defect == 0


def test_solvability_defects():
    target = (F(1), F(3, 4), F(3, 4), F(1))
    ok, defect = lp_solvability_condition(1, target)
    assert not ok and defect == F(1, 2)
    ok, defect = lp_solvability_condition(2, target)
    assert not ok and defect == F(7, 8)


def test_counterexample_certificates():
    for p in (1, 2):
        cert = lp_counterexample(p)
        assert cert.target == (F(1), F(3, 4), F(3, 4), F(1))
        assert cert.defect != 0
        rhs = [t ** p for t in cert.target]
        assert solve_nonnegative(pairing_matrix(), rhs) is None
    cert = lp_counterexample(INF)
    assert cert.target == (F(1, 2), F(1, 2), F(1, 2), F(1))
    assert linf_grid_search(cert.target) is None


def test_condition_matches_linear_solver():
    # defect = 0 iff a nonnegative exact solution exists, on a grid of targets
    grid = [F(1, 2), F(3, 4), F(1)]
    for p in (1, 2):
        for target in product(grid, repeat=4):
            ok, _ = lp_solvability_condition(p, target)
            rhs = [t ** p for t in target]
            assert ok == (solve_nonnegative(pairing_matrix(), rhs) is not None)


def test_grid_search_finds_solvable_targets():
    # the all-equal target is realized by the max system
    assert linf_grid_search((F(1), F(1), F(1), F(1))) is not None


def test_invalid_exponent():
    with pytest.raises(Exception):
        lp_solvability_condition(0, (F(1), F(1), F(1), F(1)))

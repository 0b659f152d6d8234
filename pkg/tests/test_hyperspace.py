import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from urysohn import (
    FiniteSubset,
    ORIGIN,
    PreconditionError,
    SymmetricProductBound,
    UNBOUNDED,
    UrysohnPoint,
    check_symmetric_product,
    delta,
    hausdorff_ballmin,
    hausdorff_supinf,
    hyperspace_equidistant_family,
)
from urysohn.hyperspace import ball_family
from urysohn.gen import random_subset

HALFPOINT = UrysohnPoint.of({F(1, 2): 1})


def test_supinf_examples():
    e = FiniteSubset.of([ORIGIN])
    f = FiniteSubset.of([ORIGIN, HALFPOINT])
    assert hausdorff_supinf(e, e) == 0
    assert hausdorff_supinf(e, f) == F(1, 2)
    assert hausdorff_supinf(f, e) == F(1, 2)


def test_ball_family_key_counts():
    e = FiniteSubset.of([ORIGIN, HALFPOINT])
    assert len(ball_family(e, F(1, 2))) == 1
    assert len(ball_family(e, F(1, 4))) == 2


def test_ballmin_examples():
    e = FiniteSubset.of([ORIGIN])
    f = FiniteSubset.of([ORIGIN, HALFPOINT])
    assert hausdorff_ballmin(e, e) == 0
    assert hausdorff_ballmin(e, f) == F(1, 2)


def test_two_algorithms_agree_on_random_pairs():
    rng = random.Random(53)
    for _ in range(200):
        e = random_subset(rng, rng.randint(1, 8))
        f = random_subset(rng, rng.randint(1, 8))
        value = hausdorff_ballmin(e, f)
        assert value == hausdorff_supinf(e, f)
        union = set(e.points) | set(f.points)
        candidates = {F(0)} | {delta(a, b) for a, b in combinations(union, 2)}
        assert value in candidates


def test_hausdorff_strong_triangle():
    rng = random.Random(59)
    for _ in range(100):
        e, f, g = (random_subset(rng, rng.randint(1, 5)) for _ in range(3))
        assert hausdorff_supinf(e, g) <= max(
            hausdorff_supinf(e, f), hausdorff_supinf(f, g)
        )


def test_symmetric_product_bounds():
    e = FiniteSubset.of([ORIGIN, HALFPOINT, UrysohnPoint.of({F(1): 1})])
    assert check_symmetric_product(e, UNBOUNDED)
    assert not check_symmetric_product(e, SymmetricProductBound(m=2))
    assert check_symmetric_product(e, SymmetricProductBound(l=F(1)))
    assert not check_symmetric_product(e, SymmetricProductBound(l=F(1, 4)))


def test_bound_validation():
    with pytest.raises(PreconditionError):
        SymmetricProductBound(m=1)
    with pytest.raises(PreconditionError):
        SymmetricProductBound(l=F(0))


def test_hyperspace_family_example():
    fam = hyperspace_equidistant_family(FiniteSubset.of([ORIGIN]), F(1), 2)
    assert fam == (
        FiniteSubset.of([ORIGIN]),
        FiniteSubset.of([UrysohnPoint.of({F(1): 1})]),
    )
    assert hausdorff_supinf(fam[0], fam[1]) == 1


def test_hyperspace_family_all_bound_shapes():
    rng = random.Random(61)
    bounds = [
        UNBOUNDED,
        SymmetricProductBound(m=10),
        SymmetricProductBound(l=F(4)),
        SymmetricProductBound(m=10, l=F(4)),
    ]
    for case in range(60):
        base = random_subset(rng, rng.randint(1, 5))
        r = F(rng.randint(1, 12), 12)
        bound = bounds[case % 4]
        fam = hyperspace_equidistant_family(base, r, 4, bound)
        assert len(set(fam)) == 4
        for member in fam:
            assert check_symmetric_product(member, bound)
            assert hausdorff_supinf(member, base) <= r
        for x, y in combinations(fam, 2):
            assert hausdorff_supinf(x, y) == r


def test_hyperspace_family_rejects_oversized_base():
    base = FiniteSubset.of([ORIGIN, HALFPOINT, UrysohnPoint.of({F(1): 1})])
    with pytest.raises(PreconditionError):
        hyperspace_equidistant_family(base, F(1), 2, SymmetricProductBound(m=2))

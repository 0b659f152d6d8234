"""Full-scale acceptance battery: each test runs one criterion at its
declared size, prints a single PASS/FAIL line, asserts exact success, and
enforces the runtime budget where one is declared."""

import pytest

from urysohn import verify


def report(result, budget=None):
    print(result.line())
    assert result.ok, result.detail
    if budget is not None:
        assert result.seconds < budget, (
            f"criterion {result.number} took {result.seconds:.1f}s "
            f"(budget {budget}s)"
        )


def test_criterion_01_model_ultrametric_axioms():
    report(verify.criterion_1(), budget=5)


def test_criterion_02_three_way_equivalence():
    report(verify.criterion_2(), budget=60)


def test_criterion_03_hausdorff_oracle_equivalence():
    report(verify.criterion_3(), budget=30)


def test_criterion_04_hausdorff_strong_triangle():
    report(verify.criterion_4())


def test_criterion_05_embedding_isometry():
    report(verify.criterion_5())


def test_criterion_06_equidistant_witnesses():
    report(verify.criterion_6())


def test_criterion_07_product_certificates():
    report(verify.criterion_7(), budget=10)


def test_criterion_08_heir_distances():
    report(verify.criterion_8())


def test_criterion_09_petal_properties():
    report(verify.criterion_9())


def test_criterion_10_petal_covers():
    report(verify.criterion_10())

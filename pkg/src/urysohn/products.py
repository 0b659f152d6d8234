"""Product metrics on pairs of model points.

The max-product preserves the ultrametric structure and its equidistant
families; finite-p power products do not, which a rank-3 linear system
certifies: the prescribed distance vectors fill a 4-cube, but realizable
vectors lie on a hyperplane.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InternalCheckError, PreconditionError
from .model import UrysohnPoint, delta, equidistant_family

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

INF = "inf"
Exponent = Union[int, str]


@dataclass(frozen=True)
class ProductPoint:
    left: UrysohnPoint
    right: UrysohnPoint


@dataclass(frozen=True)
class LpCertificate:
    """A 4-vector of prescribed distances no product point can realize."""

    p: Exponent
    target: tuple[Fraction, Fraction, Fraction, Fraction]
    defect: Optional[Fraction]
    reason: str

    def __post_init__(self):
        if any(not HALF <= t <= ONE for t in self.target):
            raise PreconditionError("target components must lie in [1/2, 1]")


def linf_distance(a: ProductPoint, b: ProductPoint) -> Fraction:
    """Max of the two component distances."""
    return max(delta(a.left, b.left), delta(a.right, b.right))


def product_equidistant_family(
    center: ProductPoint, r: Fraction, n: int
) -> tuple[ProductPoint, ...]:
    """n product points pairwise at max-distance exactly r, within r of center.

    The diagonal of the two component families suffices: both components of
    any two members differ at exactly r.
    """
    if r <= 0:
        raise PreconditionError("radius must be positive")
    if n < 1:
        raise PreconditionError("n must be >= 1")
    lefts = equidistant_family(center.left, r, n)
    rights = equidistant_family(center.right, r, n)
    return tuple(ProductPoint(l, g) for l, g in zip(lefts, rights))


def row_echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], int]:
    """Exact Gaussian elimination; returns (echelon matrix, rank)."""
    mat = [[Fraction(v) for v in row] for row in rows]
    n_rows = len(mat)
    n_cols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(n_cols):
        pivot = next(
            (r for r in range(rank, n_rows) if mat[r][col] != 0), None
        )
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [v / inv for v in mat[rank]]
        for r in range(n_rows):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return mat, rank


def matrix_rank(rows: list[list[Fraction]]) -> int:
    return row_echelon(rows)[1]


def pairing_matrix() -> list[list[Fraction]]:
    """Incidence of {x, y} x {z, w} against the four prescribed distances."""
    return [
        [ONE, ZERO, ONE, ZERO],
        [ONE, ZERO, ZERO, ONE],
        [ZERO, ONE, ONE, ZERO],
        [ZERO, ONE, ZERO, ONE],
    ]


def solve_nonnegative(rows, rhs) -> Optional[tuple[Fraction, ...]]:
    """A nonnegative exact solution of rows * x = rhs, or None.

    General elimination for the consistency check; the (at most
    one-dimensional) kernel is then swept over the interval where every
    coordinate stays nonnegative.  Suffices for the 4x4 pairing system.
    """
    n = len(rows[0])
    aug = [list(row) + [r] for row, r in zip(rows, rhs)]
    ech, _ = row_echelon(aug)
    pivots = {}
    for row in ech:
        lead = next((c for c, v in enumerate(row) if v != 0), None)
        if lead is None:
            continue
        if lead == n:
            return None  # inconsistent
        pivots[lead] = row
    free = [c for c in range(n) if c not in pivots]
    if len(free) > 1:
        raise PreconditionError("kernel dimension > 1 is not supported")

    def solution(t: Fraction) -> list[Fraction]:
        x = [ZERO] * n
        for c in free:
            x[c] = t
        for lead, row in pivots.items():
            x[lead] = row[n] - sum(row[c] * x[c] for c in free)
        return x

    if not free:
        x = solution(ZERO)
        return tuple(x) if all(v >= 0 for v in x) else None
    # coordinates are affine in t; intersect the nonnegativity intervals
    lo, hi = None, None
    base = solution(ZERO)
    slope = [b - a for a, b in zip(base, solution(ONE))]
    for b, s in zip(base, slope):
        if s == 0:
            if b < 0:
                return None
        elif s > 0:
            bound = -b / s
            lo = bound if lo is None else max(lo, bound)
        else:
            bound = -b / s
            hi = bound if hi is None else min(hi, bound)
    if lo is None:
        lo = hi if hi is not None else ZERO
    if hi is not None and lo > hi:
        return None
    x = solution(lo)
    return tuple(x) if all(v >= 0 for v in x) else None


def _power(v: Fraction, p: int) -> Fraction:
    return Fraction(v) ** p


def lp_solvability_condition(
    p: int, target: tuple[Fraction, Fraction, Fraction, Fraction]
) -> tuple[bool, Fraction]:
    """Is the p-th-power pairing system solvable for the given targets?

    Row reduction of the pairing matrix shows its image is the hyperplane
    v1 + v4 = v2 + v3, so the defect r00^p + r11^p - r01^p - r10^p decides
    consistency; solvability additionally needs a nonnegative solution,
    which on targets in [1/2, 1]^4 follows from consistency.
    """
    if not isinstance(p, int) or p < 1:
        raise PreconditionError("exponent must be an integer >= 1")
    r00, r01, r10, r11 = (Fraction(t) for t in target)
    for t in (r00, r01, r10, r11):
        if not HALF <= t <= ONE:
            raise PreconditionError("target components must lie in [1/2, 1]")
    a, b, c, d = (_power(t, p) for t in (r00, r01, r10, r11))
    defect = a + d - (b + c)
    if defect != 0:
        return False, defect
    solvable = solve_nonnegative(pairing_matrix(), [a, b, c, d]) is not None
    return solvable, defect


def lp_counterexample(p: Exponent) -> LpCertificate:
    """A prescribed distance vector in [1/2, 1]^4 that no product point meets.

    Finite p: (1, 3/4, 3/4, 1) misses the solvability hyperplane.
    p = inf: (1/2, 1/2, 1/2, 1) forces max(y, w) <= 1/2 < 1 = r11.
    """
    if p == INF:
        target = (HALF, HALF, HALF, ONE)
        return LpCertificate(
            p=INF,
            target=target,
            defect=None,
            reason=(
                "max constraints give y <= r10 and w <= r01, hence "
                "max(y, w) <= 1/2 < r11; no assignment matches r11"
            ),
        )
    if not isinstance(p, int) or p < 1:
        raise PreconditionError("exponent must be an integer >= 1 or 'inf'")
    target = (ONE, Fraction(3, 4), Fraction(3, 4), ONE)
    solvable, defect = lp_solvability_condition(p, target)
    if solvable or defect == 0:
        raise InternalCheckError("chosen target unexpectedly solvable")
    return LpCertificate(
        p=p,
        target=target,
        defect=defect,
        reason=(
            "p-th powers must satisfy r00^p + r11^p = r01^p + r10^p; "
            f"the defect is {defect}"
        ),
    )


def linf_grid_search(
    target: tuple[Fraction, Fraction, Fraction, Fraction],
    step: Fraction = Fraction(1, 8),
    lo: Fraction = HALF,
    hi: Fraction = ONE,
) -> Optional[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Exhaustive max-constraint solver over a rational grid.

    Returns a grid point (x, y, z, w) with x|z = r00, x|w = r01, y|z = r10,
    y|w = r11 (| = max), or None when the grid holds no solution.
    """
    r00, r01, r10, r11 = target
    values = []
    v = lo
    while v <= hi:
        values.append(v)
        v += step
    for x, y, z, w in itertools.product(values, repeat=4):
        if (
            max(x, z) == r00
            and max(x, w) == r01
            and max(y, z) == r10
            and max(y, w) == r11
        ):
            return x, y, z, w
    return None

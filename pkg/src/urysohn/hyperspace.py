"""Hausdorff ultrametric on finite subsets of the model.

Two independent algorithms compute the same value: the classical sup-inf
formula, and the minimum radius at which the two sets generate the same
family of closed balls.  Symmetric-product bounds (cardinality, diameter)
restrict the hyperspace; equidistant families exist inside every bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InternalCheckError, PreconditionError
from .model import BallKey, UrysohnPoint, ball_key, delta, equidistant_family

ZERO = Fraction(0)


@dataclass(frozen=True)
class FiniteSubset:
    """Nonempty finite set of model points, canonically sorted."""

    points: tuple[UrysohnPoint, ...]

    def __post_init__(self):
        if not self.points:
            raise PreconditionError("subset must be nonempty")
        if any(b <= a for a, b in zip(self.points, self.points[1:])):
            raise PreconditionError("points must be sorted and distinct")

    @classmethod
    def of(cls, points: Iterable[UrysohnPoint]) -> "FiniteSubset":
        return cls(tuple(sorted(set(points))))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def diameter(self) -> Fraction:
        return max(
            (delta(a, b) for a, b in itertools.combinations(self.points, 2)),
            default=ZERO,
        )


@dataclass(frozen=True)
class SymmetricProductBound:
    """Cardinality and diameter caps; None means unconstrained."""

    m: Optional[int] = None
    l: Optional[Fraction] = None

    def __post_init__(self):
        if self.m is not None and self.m < 2:
            raise PreconditionError("cardinality bound must be >= 2")
        if self.l is not None and self.l <= 0:
            raise PreconditionError("diameter bound must be positive")


UNBOUNDED = SymmetricProductBound()


def hausdorff_supinf(e: FiniteSubset, f: FiniteSubset) -> Fraction:
    """Hausdorff distance as the max of the two directed sup-inf distances."""

    def directed(src, dst):
        return max(min(delta(a, b) for b in dst) for a in src)

    return max(directed(e.points, f.points), directed(f.points, e.points))


def ball_family(e: FiniteSubset, r: Fraction) -> frozenset[BallKey]:
    """The set of closed balls of radius r with centers in e, as canonical keys."""
    return frozenset(ball_key(a, r) for a in e.points)


def hausdorff_ballmin(e: FiniteSubset, f: FiniteSubset) -> Fraction:
    """Hausdorff distance as the minimum r with equal ball families.

    The value is always realized among {0} and the pairwise distances of the
    union, so only those radii are tried, in ascending order.  A ball key at
    radius r is the center's coordinate prefix strictly above r; since the
    coordinates are stored descending, each key is a bisected tuple slice,
    and families are compared as sorted lists to avoid hashing.
    """
    candidates = {ZERO}
    union = tuple(set(e.points) | set(f.points))
    for a, b in itertools.combinations(union, 2):
        candidates.add(delta(a, b))

    def family(points, r):
        keys = []
        for p in points:
            coords = p.coords
            # first index whose coordinate is <= r, scanning the descending list
            lo, hi = 0, len(coords)
            while lo < hi:
                mid = (lo + hi) // 2
                if coords[mid][0] > r:
                    lo = mid + 1
                else:
                    hi = mid
            keys.append(coords[:lo])
        keys.sort()
        keys = [k for i, k in enumerate(keys) if i == 0 or k != keys[i - 1]]
        return keys

    for r in sorted(candidates):
        if family(e.points, r) == family(f.points, r):
            return r
    raise AssertionError("unreachable: families coincide at the max distance")


def check_symmetric_product(e: FiniteSubset, bound: SymmetricProductBound) -> bool:
    """True iff e satisfies both caps (missing bound = no constraint)."""
    if bound.m is not None and len(e) > bound.m:
        return False
    if bound.l is not None and e.diameter() > bound.l:
        return False
    return True


def hyperspace_equidistant_family(
    a: FiniteSubset,
    r: Fraction,
    n: int,
    bound: SymmetricProductBound = UNBOUNDED,
) -> tuple[FiniteSubset, ...]:
    """n subsets pairwise at Hausdorff distance exactly r, all within r of a,
    each satisfying the bound.

    Construction: drop the ball B(x, r) around the first point x of a and
    adjoin one member of an equidistant family of x instead.
    """
    if r <= 0:
        raise PreconditionError("radius must be positive")
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if not check_symmetric_product(a, bound):
        raise PreconditionError("base subset violates the symmetric-product bound")
    x = a.points[0]
    outside = tuple(p for p in a.points if delta(p, x) > r)
    family = []
    for q in equidistant_family(x, r, n):
        fq = FiniteSubset.of(outside + (q,))
        if not check_symmetric_product(fq, bound):
            raise InternalCheckError(
                "constructed subset violates the symmetric-product bound"
            )
        family.append(fq)
    return tuple(family)

"""The concrete Urysohn universal ultrametric model.

Points are finite-support maps from positive rationals to nonnegative
integers; the distance of two maps is the largest coordinate where they
differ.  Seed points give canonical equidistant families inside any closed
ball, which is what makes the model universal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InternalCheckError, PreconditionError, StructureError

ZERO = Fraction(0)


@dataclass(frozen=True, order=True)
class UrysohnPoint:
    """Finite-support map, stored as (coordinate, value) pairs with
    coordinates strictly descending and no zero values."""

    coords: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        prev = None
        for c, v in self.coords:
            if c <= ZERO:
                raise StructureError("coordinates must be positive")
            if v <= 0:
                raise StructureError("stored values must be positive integers")
            if prev is not None and not c < prev:
                raise StructureError("coordinates must be strictly descending")
            prev = c

    @classmethod
    def of(cls, mapping: Mapping[Fraction, int] | Iterable[tuple[Fraction, int]]):
        """Canonicalize an arbitrary coordinate->value mapping (zeros dropped)."""
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        cleaned = [(Fraction(c), int(v)) for c, v in items if int(v) != 0]
        cleaned.sort(key=lambda cv: cv[0], reverse=True)
        return cls(tuple(cleaned))

    def value(self, coord: Fraction) -> int:
        for c, v in self.coords:
            if c == coord:
                return v
        return 0

    def support(self) -> tuple[Fraction, ...]:
        return tuple(c for c, _ in self.coords)

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.coords)

    def restrict_above(self, radius: Fraction) -> "UrysohnPoint":
        """Keep only coordinates strictly greater than `radius`."""
        return UrysohnPoint(tuple((c, v) for c, v in self.coords if c > radius))

    def restrict_to(self, coords) -> "UrysohnPoint":
        """Keep only coordinates belonging to the given collection."""
        allowed = set(coords)
        return UrysohnPoint(tuple((c, v) for c, v in self.coords if c in allowed))

    def __bool__(self) -> bool:
        return bool(self.coords)


ORIGIN = UrysohnPoint()


@dataclass(frozen=True)
class BallKey:
    """Canonical representative of a closed ball: the part of any center
    lying strictly above the radius.  Keys coincide iff the balls do."""

    radius: Fraction
    trace: UrysohnPoint

    def __post_init__(self):
        if any(c <= self.radius for c, _ in self.trace.coords):
            raise StructureError("trace may not contain coordinates <= radius")


def delta(f: UrysohnPoint, g: UrysohnPoint) -> Fraction:
    """Ultrametric distance: max coordinate where the two maps differ, 0 if equal."""
    i, j = 0, 0
    fc, gc = f.coords, g.coords
    while i < len(fc) and j < len(gc):
        (cf, vf), (cg, vg) = fc[i], gc[j]
        if cf > cg:
            return cf
        if cg > cf:
            return cg
        if vf != vg:
            return cf
        i += 1
        j += 1
    if i < len(fc):
        return fc[i][0]
    if j < len(gc):
        return gc[j][0]
    return ZERO


def seed_point(a: UrysohnPoint, r: Fraction, k: int) -> UrysohnPoint:
    """k-th canonical point of the closed ball B(a, r): copy a strictly
    above r, store k at r (omitted when 0), empty below r.

    Distinct indices give points at distance exactly r from each other, and
    every result lies within r of a.
    """
    if r <= 0:
        raise PreconditionError("seed radius must be positive")
    if k < 0:
        raise PreconditionError("seed index must be nonnegative")
    coords = [(c, v) for c, v in a.coords if c > r]
    if k > 0:
        coords.append((Fraction(r), k))
    return UrysohnPoint(tuple(coords))


def equidistant_family(
    a: UrysohnPoint, r: Fraction, n: int
) -> tuple[UrysohnPoint, ...]:
    """n points of B(a, r), pairwise at distance exactly r (indices 0..n-1)."""
    if r <= 0:
        raise PreconditionError("radius must be positive")
    if n < 1:
        raise PreconditionError("n must be >= 1")
    return tuple(seed_point(a, r, k) for k in range(n))


def avoidant_witness(
    a: UrysohnPoint, r: Fraction, points: Iterable[UrysohnPoint]
) -> UrysohnPoint:
    """Smallest-index seed of B(a, r) at distance exactly r from every given
    point.  Each constraint point excludes at most one seed index (the index
    it stores at coordinate r), so an index in 0..len(points) always works.
    """
    pts = list(points)
    for x in pts:
        if delta(a, x) > r:
            raise PreconditionError("constraint point outside the closed ball")
    excluded = {x.value(Fraction(r)) for x in pts}
    for k in range(len(pts) + 1):
        if k not in excluded:
            witness = seed_point(a, r, k)
            break
    else:  # pragma: no cover - pigeonhole makes this unreachable
        raise InternalCheckError("no admissible seed index found")
    for x in pts:
        if delta(x, witness) != r:
            raise InternalCheckError("avoidant witness failed its distance check")
    if delta(a, witness) > r:
        raise InternalCheckError("avoidant witness left the ball")
    return witness


def ball_key(a: UrysohnPoint, r: Fraction) -> BallKey:
    """Canonical key of B(a, r); keys agree iff delta(a, b) <= r."""
    if r < 0:
        raise PreconditionError("radius must be nonnegative")
    return BallKey(radius=Fraction(r), trace=a.restrict_above(Fraction(r)))

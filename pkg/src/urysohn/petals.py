"""Seeds, inheritances, heir trees, and petal pieces of the model.

An inheritance is a chain of seed steps with strictly decreasing radii
starting at the origin (the empty map); its endpoint is an heir.  The
distance of two heirs is read off the chains alone.  The piece of a range
set S is realized as the points with support inside S; restriction to S is
its proximal retraction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import PreconditionError
from .model import ORIGIN, UrysohnPoint, delta, equidistant_family, seed_point
from .spaces import RangeSet, distance_set, FiniteUltrametricSpace
from .embedding import embed_space
from .hyperspace import FiniteSubset

ZERO = Fraction(0)


@dataclass(frozen=True)
class Inheritance:
    """Witness chain v_0 .. v_m with step radii r_0 .. r_{m-1}."""

    points: tuple[UrysohnPoint, ...]
    radii: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.points) != len(self.radii) + 1:
            raise PreconditionError("need exactly one more point than radii")

    @property
    def length(self) -> int:
        return len(self.radii)

    @property
    def endpoint(self) -> UrysohnPoint:
        return self.points[-1]

    def extend(self, radius: Fraction, seed_index: int) -> "Inheritance":
        child = seed_point(self.endpoint, radius, seed_index)
        return Inheritance(self.points + (child,), self.radii + (radius,))


@dataclass(frozen=True)
class InheritanceReport:
    ok: bool
    violations: tuple[str, ...]


def validate_inheritance(inh: Inheritance, s: RangeSet) -> InheritanceReport:
    """Check the five chain conditions: starts at the origin, every step is
    a seed step, consecutive points differ, radii strictly decrease and
    belong to the range set."""
    bad: list[str] = []
    if inh.points[0] != ORIGIN:
        bad.append("chain does not start at the origin")
    for i, r in enumerate(inh.radii):
        prev, nxt = inh.points[i], inh.points[i + 1]
        if r not in s or r <= 0:
            bad.append(f"radius {r} at step {i} is not a nonzero member of S")
        if nxt == prev:
            bad.append(f"consecutive points at step {i} coincide")
        if r > 0:
            k = nxt.value(Fraction(r))
            if seed_point(prev, r, k) != nxt:
                bad.append(f"step {i} is not a seed step")
        if i + 1 < len(inh.radii) and not inh.radii[i + 1] < r:
            bad.append(f"radii do not strictly decrease at step {i}")
    return InheritanceReport(ok=not bad, violations=tuple(bad))


def heir_distance(a: Inheritance, b: Inheritance) -> Fraction:
    """Distance of two heirs computed from their chains alone.

    Equal chains: 0.  One a proper point-prefix of the other: the longer
    chain's next radius.  Otherwise: max of the two radii at the first
    divergence.  Always equals the direct distance of the endpoints.
    """
    for inh in (a, b):
        rep = _structural_report(inh)
        if not rep.ok:
            raise PreconditionError("; ".join(rep.violations))
    common = 0
    while (
        common < len(a.points)
        and common < len(b.points)
        and a.points[common] == b.points[common]
    ):
        common += 1
    if common == len(a.points) and common == len(b.points):
        return ZERO
    if common == len(a.points):
        return b.radii[common - 1]
    if common == len(b.points):
        return a.radii[common - 1]
    return max(a.radii[common - 1], b.radii[common - 1])


def _structural_report(inh: Inheritance) -> InheritanceReport:
    """Chain conditions that do not refer to a range set."""
    bad: list[str] = []
    if inh.points[0] != ORIGIN:
        bad.append("chain does not start at the origin")
    for i, r in enumerate(inh.radii):
        prev, nxt = inh.points[i], inh.points[i + 1]
        if r <= 0:
            bad.append(f"radius {r} at step {i} is not positive")
            continue
        if nxt == prev:
            bad.append(f"consecutive points at step {i} coincide")
        if seed_point(prev, r, nxt.value(Fraction(r))) != nxt:
            bad.append(f"step {i} is not a seed step")
        if i + 1 < len(inh.radii) and not inh.radii[i + 1] < r:
            bad.append(f"radii do not strictly decrease at step {i}")
    return InheritanceReport(ok=not bad, violations=tuple(bad))


@dataclass(frozen=True)
class HeirNode:
    point: UrysohnPoint
    inheritance: Inheritance
    parent: Optional[int]  # index into the tree's node list
    radius: Optional[Fraction]
    seed_index: Optional[int]


@dataclass(frozen=True)
class HeirTree:
    range: RangeSet
    depth: int
    branching: int
    nodes: tuple[HeirNode, ...]

    def children(self, index: int) -> list[int]:
        return [i for i, n in enumerate(self.nodes) if n.parent == index]


def generate_heirs(s: RangeSet, depth: int, branching: int) -> HeirTree:
    """Breadth-first truncation of the heir set of the origin.

    A node with last step radius r gets, for every smaller nonzero radius
    (all of S for the root, descending), children with the first `branching`
    seed indices producing a new point; index 0 reproduces the parent below
    the new radius and is skipped whenever it does.
    """
    if depth < 0:
        raise PreconditionError("depth must be >= 0")
    if branching < 1:
        raise PreconditionError("branching must be >= 1")
    root = HeirNode(
        point=ORIGIN,
        inheritance=Inheritance((ORIGIN,), ()),
        parent=None,
        radius=None,
        seed_index=None,
    )
    nodes = [root]
    queue = deque([0])
    while queue:
        idx = queue.popleft()
        node = nodes[idx]
        if node.inheritance.length >= depth:
            continue
        last = node.radius  # None for the root: no upper constraint
        for radius in sorted(s.nonzero(), reverse=True):
            if last is not None and not radius < last:
                continue
            produced = 0
            k = 0
            while produced < branching:
                child_point = seed_point(node.point, radius, k)
                if child_point != node.point:
                    child = HeirNode(
                        point=child_point,
                        inheritance=node.inheritance.extend(radius, k),
                        parent=idx,
                        radius=radius,
                        seed_index=k,
                    )
                    nodes.append(child)
                    queue.append(len(nodes) - 1)
                    produced += 1
                k += 1
    return HeirTree(range=s, depth=depth, branching=branching, nodes=tuple(nodes))


def distance_to_petal(
    x: UrysohnPoint, s: RangeSet
) -> tuple[Fraction, UrysohnPoint]:
    """Distance from x to the piece of S, with the nearest point.

    The piece is the set of points supported inside S; the nearest point is
    the restriction of x to S and the distance is the largest support
    coordinate outside S (0 when there is none).
    """
    allowed = set(s.nonzero())
    nearest = x.restrict_to(allowed)
    outside = [c for c in x.support() if c not in allowed]
    dist = max(outside, default=ZERO)
    return dist, nearest


def in_petal(x: UrysohnPoint, s: RangeSet) -> bool:
    return all(c in s for c in x.support())


@dataclass(frozen=True)
class PetalPropertyReport:
    ok: bool
    violations: tuple[tuple[str, str], ...]  # (property, detail)
    skipped: tuple[UrysohnPoint, ...]  # samples outside the T-piece


def check_petal_properties(
    s: RangeSet, t: RangeSet, samples: Iterable[UrysohnPoint]
) -> PetalPropertyReport:
    """Finitary piece properties over a sample set.

    Membership compatibility: a sample lies in both the S- and T-pieces
    exactly when it lies in the piece of their intersection.  Each sample
    lies in the piece of its own support closure.  Equidistant families
    seeded inside a piece stay inside it.  For samples supported in T, the
    distance to the S-piece lies in {0} or T minus S.
    """
    samples = list(samples)
    violations: list[tuple[str, str]] = []
    skipped: list[UrysohnPoint] = []
    st = s.intersection(t)
    t_minus_s = set(t.values) - set(s.values)
    for x in samples:
        both = in_petal(x, s) and in_petal(x, t)
        if both != in_petal(x, st):
            violations.append(
                ("intersection", f"membership mismatch for {x.as_dict()}")
            )
        closure = RangeSet.of(x.support())
        if not in_petal(x, closure):
            violations.append(
                ("support-closure", f"{x.as_dict()} escapes its own closure")
            )
        if in_petal(x, s):
            for r in s.nonzero():
                for member in equidistant_family(x, r, 3):
                    if not in_petal(member, s):
                        violations.append(
                            ("family-closure", f"family at radius {r} left the piece")
                        )
        if not in_petal(x, t):
            skipped.append(x)
            continue
        dist, nearest = distance_to_petal(x, s)
        if not (dist == ZERO or dist in t_minus_s):
            violations.append(
                (
                    "piece-distance",
                    f"distance {dist} of {x.as_dict()} outside {{0}} and T-S",
                )
            )
        if delta(x, nearest) != dist:
            violations.append(
                ("piece-distance", "nearest point does not realize the distance")
            )
    return PetalPropertyReport(
        ok=not violations, violations=tuple(violations), skipped=tuple(skipped)
    )


@dataclass(frozen=True)
class PetalCover:
    range: RangeSet
    images: tuple[tuple[UrysohnPoint, UrysohnPoint], ...]
    ok: bool
    offenders: tuple[UrysohnPoint, ...]


def build_petal_cover(k: FiniteSubset) -> PetalCover:
    """Re-embed a finite subset from the origin and confirm the images are
    supported inside the distance set of the subset."""
    points = k.points
    labels = tuple(f"k{i}" for i in range(len(points)))
    rows = tuple(
        tuple(delta(a, b) for b in points) for a in points
    )
    space = FiniteUltrametricSpace(labels, rows)
    t = distance_set(space)
    images = embed_space(space, basepoint=ORIGIN)
    pairs = tuple((p, images[l]) for p, l in zip(points, labels))
    offenders = tuple(
        orig for orig, img in pairs if not in_petal(img, t)
    )
    return PetalCover(range=t, images=pairs, ok=not offenders, offenders=offenders)

"""Seeded random generators for spaces, points, and subsets.

All functions take a `random.Random` so corpora are reproducible from a
single seed.  Distances are drawn from a small rational pool (twelfths by
default) which keeps printed matrices readable and exact.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .model import UrysohnPoint
from .spaces import FiniteUltrametricSpace, RangeSet
from .hyperspace import FiniteSubset

DEFAULT_POOL = tuple(Fraction(k, 12) for k in range(1, 25))


def random_ultrametric_space(
    rng: random.Random,
    n_points: int,
    pool: tuple[Fraction, ...] = DEFAULT_POOL,
    label_prefix: str = "p",
) -> FiniteUltrametricSpace:
    """Random ultrametric space built by recursive partitioning.

    Split the point set into blocks, assign the current diameter between
    blocks, and recurse into each block with strictly smaller values. The
    result satisfies the strong triangle inequality by construction.
    """
    if n_points < 1:
        raise ValueError("need at least one point")
    dist = [[Fraction(0)] * n_points for _ in range(n_points)]

    def fill(indices: list[int], values: tuple[Fraction, ...]) -> None:
        if len(indices) <= 1 or not values:
            # no values left: merge the block at distance 0 is not allowed
            # for distinct points, so collapse by assigning the smallest
            # available value pairwise (only hit when the pool runs dry).
            if len(indices) > 1:
                v = values[0] if values else pool[0]
                for i in indices:
                    for j in indices:
                        if i != j:
                            dist[i][j] = v
            return
        v = rng.choice(values)
        smaller = tuple(x for x in values if x < v)
        n_blocks = rng.randint(1, len(indices))
        blocks: list[list[int]] = [[] for _ in range(n_blocks)]
        for idx in indices:
            blocks[rng.randrange(n_blocks)].append(idx)
        blocks = [b for b in blocks if b]
        for bi, block_a in enumerate(blocks):
            for block_b in blocks[bi + 1 :]:
                for i in block_a:
                    for j in block_b:
                        dist[i][j] = v
                        dist[j][i] = v
        for block in blocks:
            fill(block, smaller)

    fill(list(range(n_points)), tuple(sorted(pool)))
    labels = tuple(f"{label_prefix}{i}" for i in range(n_points))
    return FiniteUltrametricSpace(labels, tuple(tuple(row) for row in dist))


def random_range_set(
    rng: random.Random,
    size: int,
    pool: tuple[Fraction, ...] = DEFAULT_POOL,
) -> RangeSet:
    """Range set with `size` nonzero values drawn from the pool."""
    if size > len(pool):
        raise ValueError("pool too small for requested size")
    return RangeSet.of(rng.sample(pool, size))


def random_point(
    rng: random.Random,
    max_support: int = 4,
    max_value: int = 5,
    coord_pool: tuple[Fraction, ...] = DEFAULT_POOL,
) -> UrysohnPoint:
    """Finite-support map with at most `max_support` nonzero coordinates."""
    k = rng.randint(0, max_support)
    coords = rng.sample(coord_pool, min(k, len(coord_pool)))
    return UrysohnPoint.of({c: rng.randint(1, max_value) for c in coords})


def random_subset(
    rng: random.Random,
    size: int,
    max_support: int = 4,
    max_value: int = 5,
    coord_pool: tuple[Fraction, ...] = DEFAULT_POOL,
) -> FiniteSubset:
    """Nonempty finite subset of the model with at most `size` points."""
    if size < 1:
        raise ValueError("subsets are nonempty")
    pts = {random_point(rng, max_support, max_value, coord_pool) for _ in range(size)}
    return FiniteSubset.of(pts)

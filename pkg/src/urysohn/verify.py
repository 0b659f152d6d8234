"""Self-contained verification suites with exact (tolerance-zero) checks.

Each criterion runs a seeded randomized battery against an independent
check (brute-force oracle, second algorithm, or axiom instance) and returns
a CriterionResult.  `run_all` executes the full battery; the CLI `check`
verb and the acceptance test file both call into here.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import gen
from .embedding import check_one_point_injectivity, embed_space
from .hyperspace import (
    FiniteSubset,
    SymmetricProductBound,
    UNBOUNDED,
    hausdorff_ballmin,
    hausdorff_supinf,
    hyperspace_equidistant_family,
    check_symmetric_product,
)
from .model import UrysohnPoint, delta, equidistant_family
from .petals import (
    build_petal_cover,
    check_petal_properties,
    distance_to_petal,
    generate_heirs,
    heir_distance,
)
from .products import (
    INF,
    ProductPoint,
    linf_distance,
    linf_grid_search,
    lp_counterexample,
    matrix_rank,
    pairing_matrix,
    product_equidistant_family,
    solve_nonnegative,
)
from .spaces import RangeSet, distance_set, is_avoidant, is_haloed

ZERO = Fraction(0)
DEFAULT_SEED = 20240817

TWELFTHS = tuple(Fraction(k, 12) for k in range(1, 13))


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    ok: bool
    checked: int
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"[{status}] criterion {self.number}: {self.name} "
            f"({self.checked} checks, {self.seconds:.2f}s){self._suffix()}"
        )

    def _suffix(self) -> str:
        return f" -- {self.detail}" if self.detail else ""


def _result(number, name, ok, checked, detail, started) -> CriterionResult:
    return CriterionResult(
        number=number,
        name=name,
        ok=ok,
        checked=checked,
        detail=detail,
        seconds=time.monotonic() - started,
    )


def criterion_1(seed: int = DEFAULT_SEED, count: int = 10_000) -> CriterionResult:
    """Model distance is an ultrametric on random triples."""
    started = time.monotonic()
    rng = random.Random(seed)
    for i in range(count):
        f, g, h = (
            gen.random_point(rng, max_support=6, coord_pool=TWELFTHS)
            for _ in range(3)
        )
        if delta(f, g) != delta(g, f):
            return _result(1, "model ultrametric axioms", False, i, "symmetry", started)
        if (delta(f, g) == ZERO) != (f == g):
            return _result(1, "model ultrametric axioms", False, i, "identity", started)
        if delta(f, g) > max(delta(f, h), delta(h, g)):
            return _result(
                1, "model ultrametric axioms", False, i, "strong triangle", started
            )
    return _result(1, "model ultrametric axioms", True, count, "", started)


def criterion_2(seed: int = DEFAULT_SEED, count: int = 500) -> CriterionResult:
    """Haloed, avoidant, and one-point injective agree for every n <= 8."""
    started = time.monotonic()
    rng = random.Random(seed)
    checked = 0
    for i in range(count):
        space = gen.random_ultrametric_space(rng, rng.randint(1, 8))
        range_set = distance_set(space)
        for n in range(1, 9):
            h = is_haloed(space, range_set, n)[0]
            a = is_avoidant(space, range_set, n)[0]
            j = check_one_point_injectivity(space, range_set, n)[0]
            checked += 1
            if not (h == a == j):
                return _result(
                    2,
                    "haloed/avoidant/injective agreement",
                    False,
                    checked,
                    f"disagree at space {i}, n={n}: {h}/{a}/{j}",
                    started,
                )
    return _result(
        2, "haloed/avoidant/injective agreement", True, checked, "", started
    )


def criterion_3(seed: int = DEFAULT_SEED, count: int = 2_000) -> CriterionResult:
    """Both Hausdorff algorithms agree and land in the candidate set."""
    started = time.monotonic()
    rng = random.Random(seed)
    for i in range(count):
        e = gen.random_subset(rng, rng.randint(1, 8))
        f = gen.random_subset(rng, rng.randint(1, 8))
        both = hausdorff_ballmin(e, f)
        if both != hausdorff_supinf(e, f):
            return _result(
                3, "hausdorff two-algorithm agreement", False, i, "values differ", started
            )
        union = tuple(set(e.points) | set(f.points))
        candidates = {ZERO} | {
            delta(p, q) for p, q in combinations(union, 2)
        }
        if both not in candidates:
            return _result(
                3,
                "hausdorff two-algorithm agreement",
                False,
                i,
                "value outside candidate set",
                started,
            )
    return _result(3, "hausdorff two-algorithm agreement", True, count, "", started)


def criterion_4(seed: int = DEFAULT_SEED, count: int = 2_000) -> CriterionResult:
    """Hausdorff distance satisfies the strong triangle inequality."""
    started = time.monotonic()
    rng = random.Random(seed + 4)
    for i in range(count):
        e, f, g = (gen.random_subset(rng, rng.randint(1, 6)) for _ in range(3))
        def hd(a, b):
            return hausdorff_supinf(a, b)
        if hd(e, g) > max(hd(e, f), hd(f, g)):
            return _result(
                4, "hausdorff strong triangle", False, i, "triangle fails", started
            )
    return _result(4, "hausdorff strong triangle", True, count, "", started)


def criterion_5(seed: int = DEFAULT_SEED, count: int = 500) -> CriterionResult:
    """Embedding reproduces the full distance matrix exactly."""
    started = time.monotonic()
    rng = random.Random(seed + 5)
    for i in range(count):
        space = gen.random_ultrametric_space(rng, rng.randint(1, 10))
        images = embed_space(space)
        for a, b in combinations(space.labels, 2):
            if delta(images[a], images[b]) != space.d(a, b):
                return _result(
                    5,
                    "embedding isometry",
                    False,
                    i,
                    f"distance {a},{b} not preserved in space {i}",
                    started,
                )
    return _result(5, "embedding isometry", True, count, "", started)


def _family_ok(members, center_dist, pairwise_dist, r) -> bool:
    """Pairwise exactly r, all within r of the center, all distinct."""
    if len(set(members)) != len(members):
        return False
    if any(center_dist(m) > r for m in members):
        return False
    return all(
        pairwise_dist(x, y) == r for x, y in combinations(members, 2)
    )


def criterion_6(seed: int = DEFAULT_SEED, count: int = 200) -> CriterionResult:
    """Equidistant families in the model, the hyperspace, and the product."""
    started = time.monotonic()
    rng = random.Random(seed + 6)
    checked = 0

    for _ in range(count):
        a = gen.random_point(rng)
        r = rng.choice(TWELFTHS)
        n = rng.randint(1, 10)
        fam = equidistant_family(a, r, n)
        checked += 1
        if not _family_ok(fam, lambda m: delta(m, a), delta, r):
            return _result(6, "equidistant families", False, checked, "model family", started)

    bounds = [
        UNBOUNDED,
        SymmetricProductBound(m=None, l=Fraction(4)),
        SymmetricProductBound(m=12, l=None),
        SymmetricProductBound(m=12, l=Fraction(4)),
    ]
    for case in range(count):
        base = gen.random_subset(rng, rng.randint(1, 6))
        r = rng.choice(TWELFTHS)
        n = rng.randint(1, 10)
        bound = bounds[case % len(bounds)]
        fam = hyperspace_equidistant_family(base, r, n, bound)
        checked += 1
        ok = _family_ok(
            fam, lambda m: hausdorff_supinf(m, base), hausdorff_supinf, r
        ) and all(check_symmetric_product(m, bound) for m in fam)
        if not ok:
            return _result(
                6, "equidistant families", False, checked, "hyperspace family", started
            )

    for _ in range(count):
        base = ProductPoint(gen.random_point(rng), gen.random_point(rng))
        r = rng.choice(TWELFTHS)
        n = rng.randint(1, 10)
        fam = product_equidistant_family(base, r, n)
        checked += 1
        if not _family_ok(
            fam, lambda m: linf_distance(m, base), linf_distance, r
        ):
            return _result(
                6, "equidistant families", False, checked, "product family", started
            )

    return _result(6, "equidistant families", True, checked, "", started)


def criterion_7() -> CriterionResult:
    """Rank of the pairing matrix and unsolvable prescribed-distance targets."""
    started = time.monotonic()
    if matrix_rank(pairing_matrix()) != 3:
        return _result(7, "product distance certificates", False, 1, "rank != 3", started)
    checked = 1
    for p in (1, 2):
        cert = lp_counterexample(p)
        checked += 1
        if cert.defect is None or cert.defect == ZERO:
            return _result(
                7, "product distance certificates", False, checked, f"p={p} solvable", started
            )
        # cross-check the hyperplane condition with an exact linear solve
        rhs = [t ** p for t in cert.target]
        if solve_nonnegative(pairing_matrix(), rhs) is not None:
            return _result(
                7,
                "product distance certificates",
                False,
                checked,
                f"p={p} linear solve found a solution",
                started,
            )
    cert = lp_counterexample(INF)
    checked += 1
    if linf_grid_search(cert.target) is not None:
        return _result(
            7,
            "product distance certificates",
            False,
            checked,
            "grid search found a max-constraint solution",
            started,
        )
    return _result(7, "product distance certificates", True, checked, "", started)


def criterion_8(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Heir distance from chains equals the direct point distance."""
    started = time.monotonic()
    rng = random.Random(seed + 8)
    checked = 0
    for _ in range(3):
        s = gen.random_range_set(rng, rng.randint(2, 4))
        depth = rng.randint(1, 3)
        branching = rng.randint(1, 3)
        tree = generate_heirs(s, depth, branching)
        endpoints = [n.point for n in tree.nodes]
        if len(set(endpoints)) != len(endpoints):
            return _result(
                8, "heir distances", False, checked, "endpoints not distinct", started
            )
        for i, j in combinations(range(len(tree.nodes)), 2):
            checked += 1
            via_chain = heir_distance(
                tree.nodes[i].inheritance, tree.nodes[j].inheritance
            )
            if via_chain != delta(endpoints[i], endpoints[j]):
                return _result(
                    8,
                    "heir distances",
                    False,
                    checked,
                    f"pair ({i},{j}) disagrees",
                    started,
                )
    return _result(8, "heir distances", True, checked, "", started)


def criterion_9(seed: int = DEFAULT_SEED, count: int = 100) -> CriterionResult:
    """Piece membership, piece distances, and the 1-Lipschitz retraction."""
    started = time.monotonic()
    rng = random.Random(seed + 9)
    checked = 0
    for i in range(count):
        s = gen.random_range_set(rng, rng.randint(1, 4))
        t = gen.random_range_set(rng, rng.randint(1, 5))
        samples = []
        for _ in range(rng.randint(1, 8)):
            if rng.random() < 0.7 and t.nonzero():
                # mostly sample inside the T-piece so the distance check bites
                coords = rng.sample(t.nonzero(), rng.randint(0, len(t.nonzero())))
                samples.append(
                    UrysohnPoint.of({c: rng.randint(1, 4) for c in coords})
                )
            else:
                samples.append(gen.random_point(rng))
        report = check_petal_properties(s, t, samples)
        checked += 1
        if not report.ok:
            return _result(
                9,
                "petal pieces",
                False,
                checked,
                f"config {i}: {report.violations[0][1]}",
                started,
            )
        retracted = [distance_to_petal(x, s)[1] for x in samples]
        for (x, rx), (y, ry) in combinations(zip(samples, retracted), 2):
            checked += 1
            if delta(rx, ry) > delta(x, y):
                return _result(
                    9, "petal pieces", False, checked, "retraction expands", started
                )
    return _result(9, "petal pieces", True, checked, "", started)


def criterion_10(seed: int = DEFAULT_SEED, count: int = 100) -> CriterionResult:
    """Re-embedding a finite set lands inside the piece of its distance set."""
    started = time.monotonic()
    rng = random.Random(seed + 10)
    for i in range(count):
        k = gen.random_subset(rng, rng.randint(1, 6))
        cover = build_petal_cover(k)
        if not cover.ok:
            return _result(
                10, "petal covers", False, i, f"subset {i} escapes its piece", started
            )
        for (pa, ia), (pb, ib) in combinations(cover.images, 2):
            if delta(ia, ib) != delta(pa, pb):
                return _result(
                    10, "petal covers", False, i, "re-embedding not isometric", started
                )
    return _result(10, "petal covers", True, count, "", started)


def run_all(seed: int = DEFAULT_SEED, scale: Fraction | float = 1) -> list[CriterionResult]:
    """All ten criteria; `scale` shrinks the randomized batteries uniformly."""

    def sized(n: int) -> int:
        return max(1, int(n * scale))

    return [
        criterion_1(seed, sized(10_000)),
        criterion_2(seed, sized(500)),
        criterion_3(seed, sized(2_000)),
        criterion_4(seed, sized(2_000)),
        criterion_5(seed, sized(500)),
        criterion_6(seed, sized(200)),
        criterion_7(),
        criterion_8(seed),
        criterion_9(seed, sized(100)),
        criterion_10(seed, sized(100)),
    ]

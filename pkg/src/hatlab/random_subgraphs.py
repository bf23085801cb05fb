"""Independence statistics of random induced subgraphs.

The central quantity is the expected best independent-set fraction inside a
uniformly random vertex subset W:

    alpha_star_star(G) = E_W[ max over independent I of |I ∩ W| ] / n
                       = E_W[ alpha(G[W]) ] / n.

Exact mode enumerates all 2^n subsets through a subset DP; Monte-Carlo mode
draws one unbiased coin per vertex per sample from a counter-based stream
keyed (seed, sample, vertex), so estimates are bit-identical for any thread
count or evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .bits import iter_bits
from .errors import SizeLimitError
from .graph_core import (
    Graph,
    VertexSet,
    enumerate_maximum_independent_sets,
    graph_fingerprint,
    induced_subgraph,
    max_independent_set,
    subset_alpha_table,
)
from .hat_game import WinningFamily
from .rng import coin, randrange

EXACT_SUBSET_GUARD = 15
EXACT_PARTS_GUARD = 20


@dataclass(frozen=True)
class AlphaStarStarResult:
    fingerprint: str
    n: int
    mode: str  # "exact" | "monte_carlo"
    estimate: Fraction | float
    stderr: float | None
    samples: int
    seed: int | None


@dataclass(frozen=True)
class RemovalStep:
    removed_vertex: int
    alpha: int
    successful: bool


@dataclass(frozen=True)
class RemovalTrace:
    fingerprint: str
    n: int
    seed: int
    threshold: Fraction
    m_final: int
    alpha_initial: int
    steps: tuple[RemovalStep, ...]


@dataclass(frozen=True)
class HajnalReport:
    alpha: int
    intersection: VertexSet
    union: VertexSet

    @property
    def intersection_size(self) -> int:
        return len(self.intersection)

    @property
    def union_size(self) -> int:
        return len(self.union)

    @property
    def passed(self) -> bool:
        return self.intersection_size + self.union_size >= 2 * self.alpha


@dataclass(frozen=True)
class MarginReport:
    """Check of the quarter-plus-tau bound on alpha_star_star."""

    fingerprint: str
    alpha_bar: Fraction
    tau: Fraction
    bound: Fraction
    mode: str
    estimate: Fraction | float
    stderr: float | None
    samples: int
    seed: int | None

    @property
    def passed(self) -> bool:
        if self.mode == "exact":
            return self.estimate <= self.bound
        return float(self.estimate) <= float(self.bound) + 3.0 * (self.stderr or 0.0)


@dataclass(frozen=True)
class PartitionBoundResult:
    r: int
    sampler: str
    mode: str
    estimate: Fraction | float
    stderr: float | None
    samples: int
    seed: int | None


@lru_cache(maxsize=64)
def _alpha_table_cached(G: Graph) -> tuple[int, ...]:
    return tuple(subset_alpha_table(G))


def _alpha_of_subset(G: Graph, mask: int) -> int:
    if G.n <= EXACT_SUBSET_GUARD:
        return _alpha_table_cached(G)[mask]
    return max_independent_set(induced_subgraph(G, VertexSet(G.n, mask))).alpha


def _mean_and_stderr(values: Sequence[Fraction], denom: int) -> tuple[float, float]:
    """Float mean and standard error of values/denom, computed exactly first.

    Exact rational accumulation makes the result independent of summation
    order, which keeps Monte-Carlo records bit-identical across runs.
    """
    s = len(values)
    total = sum(values)
    mean = Fraction(total, denom * s) if s else Fraction(0)
    if s < 2:
        return float(mean), 0.0
    sq = sum(v * v for v in values)
    var = (Fraction(sq, denom * denom) - Fraction(total * total, denom * denom * s)) / (s - 1)
    return float(mean), math.sqrt(float(var) / s)


def alpha_star_star_exact(G: Graph, guard: int = EXACT_SUBSET_GUARD) -> AlphaStarStarResult:
    """Exact rational average of alpha(G[W])/n over all 2^n subsets W."""
    if G.n < 1:
        raise ValueError("graph must have at least one vertex")
    if G.n > guard:
        raise SizeLimitError(f"exact mode enumerates 2^n subsets; n={G.n} exceeds guard {guard}")
    table = _alpha_table_cached(G)
    value = Fraction(sum(table), (1 << G.n) * G.n)
    return AlphaStarStarResult(graph_fingerprint(G), G.n, "exact", value, None, 1 << G.n, None)


def alpha_star_star_mc(G: Graph, samples: int, seed: int) -> AlphaStarStarResult:
    """Unbiased Monte-Carlo estimate with standard error."""
    if samples < 1:
        raise ValueError("need samples >= 1")
    n = G.n
    values = []
    for s in range(samples):
        mask = 0
        for v in range(n):
            if coin(seed, s, v):
                mask |= 1 << v
        values.append(Fraction(_alpha_of_subset(G, mask)))
    mean, stderr = _mean_and_stderr(values, n)
    return AlphaStarStarResult(graph_fingerprint(G), n, "monte_carlo", mean, stderr, samples, seed)


def hajnal_check(G: Graph, cap: int = 200_000) -> HajnalReport:
    """Intersection and union of all maximum independent sets.

    The reported flag checks |intersection| + |union| >= 2 * alpha(G), which
    holds for every graph.
    """
    sets = enumerate_maximum_independent_sets(G, cap=cap)
    inter = (1 << G.n) - 1 if G.n else 0
    union = 0
    for vs in sets:
        inter &= vs.bits
        union |= vs.bits
    alpha = len(sets[0])
    return HajnalReport(alpha, VertexSet(G.n, inter), VertexSet(G.n, union))


def removal_trace(G: Graph, m: int, seed: int, threshold: Fraction) -> RemovalTrace:
    """Remove n - m uniformly random vertices one at a time, tracking alpha.

    A step is successful when alpha was already below threshold * n before
    the step (n the original vertex count), or when the step strictly
    decreased alpha.
    """
    if not 0 <= m <= G.n:
        raise ValueError("target size m must lie in [0, n]")
    remaining = list(range(G.n))
    mask = (1 << G.n) - 1
    alpha_prev = max_independent_set(G).alpha
    alpha_initial = alpha_prev
    cutoff = threshold * G.n
    steps = []
    for step in range(1, G.n - m + 1):
        idx = randrange(len(remaining), seed, step)
        v = remaining.pop(idx)
        mask &= ~(1 << v)
        alpha_now = max_independent_set(induced_subgraph(G, VertexSet(G.n, mask))).alpha
        successful = alpha_prev < cutoff or alpha_now < alpha_prev
        steps.append(RemovalStep(v, alpha_now, successful))
        alpha_prev = alpha_now
    return RemovalTrace(
        graph_fingerprint(G), G.n, seed, threshold, m, alpha_initial, tuple(steps)
    )


def alpha_star_star_margin(
    G: Graph,
    samples: int = 2000,
    seed: int = 0,
    exact_guard: int = EXACT_SUBSET_GUARD,
) -> MarginReport:
    """Check alpha_star_star(G) <= 1/4 + tau - tau^2/3 where alpha_bar = 1/4 + tau.

    Requires 0 < tau < 1/4 (raises ValueError otherwise).  The estimate is
    exact for n <= exact_guard; otherwise the Monte-Carlo estimate must stay
    below the bound plus three standard errors.
    """
    res = max_independent_set(G)
    tau = res.alpha_bar - Fraction(1, 4)
    if not 0 < tau < Fraction(1, 4):
        raise ValueError(
            f"independence ratio {res.alpha_bar} out of range: need 1/4 < alpha_bar < 1/2"
        )
    bound = Fraction(1, 4) + tau - tau * tau / 3
    if G.n <= exact_guard:
        est = alpha_star_star_exact(G, guard=exact_guard)
    else:
        est = alpha_star_star_mc(G, samples, seed)
    return MarginReport(
        graph_fingerprint(G),
        res.alpha_bar,
        tau,
        bound,
        est.mode,
        est.estimate,
        est.stderr,
        est.samples,
        est.seed,
    )


def _validate_partition(G: Graph, partition: Sequence[VertexSet]) -> list[int]:
    masks = []
    union = 0
    total = 0
    for part in partition:
        if part.n != G.n:
            raise ValueError("partition parts must live on the graph's vertex set")
        masks.append(part.bits)
        union |= part.bits
        total += part.bits.bit_count()
    if union != (1 << G.n) - 1 or total != G.n:
        raise ValueError("parts must cover every vertex exactly once")
    return masks


def partition_bound_eval(
    G: Graph,
    partition: Sequence[VertexSet],
    sampler: str | WinningFamily = "binomial",
    samples: int = 2000,
    seed: int = 0,
    mode: str = "auto",
) -> PartitionBoundResult:
    """Expected best independent fraction inside a sampled union of parts.

    For an index set R drawn from the sampler, the inner value is
    alpha(G[union of parts in R]) / n; the result estimates its expectation
    for the GIVEN partition.  Samplers: "binomial" (each part independently
    with probability 1/2) or a :class:`WinningFamily` (R is the index set of
    sets containing a uniform point of the family's cube; part indices then
    align with winning-set indices).

    Exact mode enumerates the sampler's distribution and needs r <= 20
    (binomial) or the family cube enumerable; "auto" picks exact when the
    graph also admits the subset table, Monte-Carlo otherwise.
    """
    masks = _validate_partition(G, partition)
    r = len(masks)
    n = G.n
    family = sampler if isinstance(sampler, WinningFamily) else None
    if family is not None and family.r != r:
        raise ValueError("partition must have one part per winning set")
    sampler_name = "binomial" if family is None else f"r_v({family.kind})"

    if mode == "auto":
        exact_ok = r <= EXACT_PARTS_GUARD and n <= EXACT_SUBSET_GUARD
        mode = "exact" if exact_ok else "mc"
    if mode == "exact":
        if family is None:
            if r > EXACT_PARTS_GUARD:
                raise SizeLimitError(f"exact mode enumerates 2^r index sets; r={r} exceeds {EXACT_PARTS_GUARD}")
            total = Fraction(0)
            cache: dict[int, int] = {}
            for R in range(1 << r):
                U = 0
                for i in iter_bits(R):
                    U |= masks[i]
                a = cache.get(U)
                if a is None:
                    a = _alpha_of_subset(G, U)
                    cache[U] = a
                total += a
            value = Fraction(total, (1 << r) * n)
        else:
            space = 1 << family.n
            cache = {}
            total = Fraction(0)
            for v in range(space):
                U = 0
                for i in range(r):
                    if (family.sets[i] >> v) & 1:
                        U |= masks[i]
                a = cache.get(U)
                if a is None:
                    a = _alpha_of_subset(G, U)
                    cache[U] = a
                total += a
            value = Fraction(total, space * n)
        return PartitionBoundResult(r, sampler_name, "exact", value, None, 0, None)

    if mode != "mc":
        raise ValueError("mode must be 'auto', 'exact', or 'mc'")
    if samples < 1:
        raise ValueError("need samples >= 1")
    values = []
    for s in range(samples):
        U = 0
        if family is None:
            for i in range(r):
                if coin(seed, s, i):
                    U |= masks[i]
        else:
            v = randrange(1 << family.n, seed, s)
            for i in range(r):
                if (family.sets[i] >> v) & 1:
                    U |= masks[i]
        values.append(Fraction(_alpha_of_subset(G, U)))
    mean, stderr = _mean_and_stderr(values, n)
    return PartitionBoundResult(r, sampler_name, "mc", mean, stderr, samples, seed)

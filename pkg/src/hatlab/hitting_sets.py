"""Exact minimum hitting sets, specialized to maximum independent sets.

``h(G)`` is the least number of vertices meeting every maximum independent
set of G.  The engine is enumeration-first: materialize the target sets,
then run branch and bound (branch on a smallest unhit set, lower-bound by a
greedily packed disjoint sub-collection, seed the incumbent with greedy
max-coverage).  Deterministic tie-breaks by least vertex index throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bits import iter_bits
from .graph_core import (
    Graph,
    VertexSet,
    enumerate_maximal_independent_sets,
    enumerate_maximum_independent_sets,
    max_independent_set,
)

DEFAULT_HIT_BUDGET = 5_000_000


@dataclass(frozen=True)
class HittingSetResult:
    h: int
    witness: VertexSet
    num_targets: int
    lower_bound_cert: int
    exact: bool
    nodes: int


def greedy_hitting(sets: Sequence[VertexSet], universe: int) -> VertexSet:
    """Repeatedly pick the vertex hitting the most unhit sets (least index on ties)."""
    masks = [s.bits for s in sets]
    chosen = 0
    unhit = list(masks)
    while unhit:
        best_v = -1
        best_cnt = 0
        counts = [0] * universe
        for m in unhit:
            for v in iter_bits(m):
                counts[v] += 1
        for v in range(universe):
            if counts[v] > best_cnt:
                best_cnt = counts[v]
                best_v = v
        if best_v < 0:
            raise ValueError("an empty target set cannot be hit")
        chosen |= 1 << best_v
        unhit = [m for m in unhit if not (m >> best_v) & 1]
    return VertexSet(universe, chosen)


def _packing_bound(masks: list[int]) -> int:
    """Size of a greedily packed pairwise-disjoint sub-collection."""
    used = 0
    count = 0
    for m in masks:
        if not m & used:
            used |= m
            count += 1
    return count


def min_hitting_set(
    sets: Sequence[VertexSet], universe: int, budget: int = DEFAULT_HIT_BUDGET
) -> HittingSetResult:
    """Exact minimum hitting set of the given collection.

    On budget exhaustion the best hitting set found so far (at worst the
    greedy seed) is returned with ``exact=False``.
    """
    if not sets:
        raise ValueError("need a nonempty collection of target sets")
    masks = [s.bits for s in sets]
    if any(m == 0 for m in masks):
        raise ValueError("an empty target set cannot be hit")

    greedy = greedy_hitting(sets, universe)
    best_mask = greedy.bits
    best_size = len(greedy)
    root_cert = _packing_bound(masks)
    nodes = 0
    exhausted = False

    def dfs(chosen_mask: int, chosen_size: int, unhit: list[int]) -> None:
        nonlocal best_mask, best_size, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        if not unhit:
            if chosen_size < best_size:
                best_size = chosen_size
                best_mask = chosen_mask
            return
        if chosen_size + _packing_bound(unhit) >= best_size:
            return
        # branch on the elements of a smallest unhit set (first on ties)
        pivot = min(unhit, key=lambda m: m.bit_count())
        for v in iter_bits(pivot):
            bit = 1 << v
            rest = [m for m in unhit if not m & bit]
            dfs(chosen_mask | bit, chosen_size + 1, rest)

    dfs(0, 0, masks)
    return HittingSetResult(
        h=best_size,
        witness=VertexSet(universe, best_mask),
        num_targets=len(sets),
        lower_bound_cert=root_cert,
        exact=not exhausted,
        nodes=nodes,
    )


def h_of_graph(
    G: Graph,
    cap: int = 200_000,
    budget: int = DEFAULT_HIT_BUDGET,
    threshold_eps: Fraction | None = None,
) -> HittingSetResult:
    """Minimum vertex set meeting every maximum independent set of G.

    With ``threshold_eps`` the targets widen to all containment-maximal
    independent sets of size at least (alpha_bar - eps) * n, reusing the
    same engine.
    """
    if threshold_eps is None:
        targets = enumerate_maximum_independent_sets(G, cap=cap, budget=budget)
    else:
        alpha = max_independent_set(G, budget=budget).alpha
        need = alpha - threshold_eps * G.n
        min_size = max(0, -((-need.numerator) // need.denominator)) if need > 0 else 0
        targets = enumerate_maximal_independent_sets(G, min_size=min_size, cap=cap)
    return min_hitting_set(targets, G.n, budget=budget)


def covering_code_check(m: int, radius: int, code: Sequence[int]) -> bool:
    """True iff every m-bit word is within Hamming distance ``radius`` of the code."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    size = 1 << m
    words = list(code)
    for w in words:
        if not 0 <= w < size:
            raise ValueError(f"codeword {w} out of range for {m} bits")
    if not words:
        return False
    for x in range(size):
        if all((x ^ c).bit_count() > radius for c in words):
            return False
    return True

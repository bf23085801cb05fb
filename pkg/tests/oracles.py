"""Independent reference implementations used to cross-check the solvers.

Everything here is deliberately naive: direct enumeration, per-tuple
simulation, size-ordered subset search.  None of it shares code with the
package's branch-and-bound or coloring machinery.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from hatlab.bits import iter_bits, iter_submasks
from hatlab.graph_core import Graph
from hatlab.hat_game import Strategy, WinningFamily, view_index


def is_independent(G: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if G.adj[v] & mask:
            return False
    return True


def brute_alpha_all_masks(G: Graph) -> int:
    """Maximum independent set size by checking every one of the 2^n subsets."""
    best = 0
    for mask in range(1 << G.n):
        if mask.bit_count() > best and is_independent(G, mask):
            best = mask.bit_count()
    return best


def enumerate_independent_sets(G: Graph) -> list[int]:
    """Every independent set, generated by a vertex-ordered subset tree."""
    allowed = [v for v in range(G.n) if not G.has_loop(v)]
    out = [0]

    def grow(mask: int, start: int) -> None:
        for idx in range(start, len(allowed)):
            v = allowed[idx]
            if G.adj[v] & mask:
                continue
            out.append(mask | (1 << v))
            grow(mask | (1 << v), idx + 1)

    grow(0, 0)
    return out


def brute_alpha(G: Graph) -> int:
    if G.n <= 14:
        return brute_alpha_all_masks(G)
    return max(m.bit_count() for m in enumerate_independent_sets(G))


def brute_maximum_sets(G: Graph) -> set[int]:
    sets = enumerate_independent_sets(G)
    alpha = max(m.bit_count() for m in sets)
    return {m for m in sets if m.bit_count() == alpha}


def brute_maximal_sets(G: Graph) -> set[int]:
    sets = set(enumerate_independent_sets(G))
    out = set()
    for m in sets:
        if all(
            (m >> v) & 1 or (m | (1 << v)) not in sets for v in range(G.n)
        ):
            out.add(m)
    return out


def brute_alpha_star_star(G: Graph) -> Fraction:
    """Second implementation of the random-subset average, via submasks."""
    total = 0
    for W in range(1 << G.n):
        best = 0
        for sub in iter_submasks(W):
            if sub.bit_count() > best and is_independent(G, sub):
                best = sub.bit_count()
        total += best
    return Fraction(total, (1 << G.n) * G.n)


def maximal_intersecting_families(n: int) -> set[int]:
    """Maximal intersecting families of {0,1}^n, found by direct filtering."""
    words = list(range(1 << n))

    def intersecting(mask: int) -> bool:
        members = [w for w in words if (mask >> w) & 1]
        return all(x & y for x in members for y in members)

    families = [m for m in range(1 << (1 << n)) if intersecting(m)]
    fams = set(families)
    out = set()
    for m in fams:
        if all((m >> w) & 1 or (m | (1 << w)) not in fams for w in words):
            out.add(m)
    return out


def simulate_strategy(family: WinningFamily, s: Strategy) -> tuple[int, Fraction]:
    """Per-tuple forward simulation of a strategy's winning set."""
    N = 1 << family.n
    total = N**s.t
    count = 0
    for flat in range(total):
        coords = []
        f = flat
        for _ in range(s.t):
            coords.append(f % N)
            f //= N
        coords.reverse()
        if all(
            (family.sets[s.tables[i][view_index(coords, i, N)]] >> coords[i]) & 1
            for i in range(s.t)
        ):
            count += 1
    return count, Fraction(count, total)


def brute_two_player_value(family: WinningFamily) -> Fraction:
    """Max winning measure over every pair of full guess tables."""
    from itertools import product

    N = 1 << family.n
    best = Fraction(0)
    for t0 in product(range(family.r), repeat=N):
        for t1 in product(range(family.r), repeat=N):
            _, measure = simulate_strategy(family, Strategy(2, family.n, (t0, t1)))
            if measure > best:
                best = measure
    return best


def two_player_winning_masks(family: WinningFamily) -> list[int]:
    """Winning sets (masks over B^2, flat x0*N+x1) of all two-player strategies."""
    from itertools import product

    N = 1 << family.n
    out = []
    for t0 in product(range(family.r), repeat=N):
        for t1 in product(range(family.r), repeat=N):
            w = 0
            for x0 in range(N):
                for x1 in range(N):
                    if (family.sets[t0[x1]] >> x0) & 1 and (family.sets[t1[x0]] >> x1) & 1:
                        w |= 1 << (x0 * N + x1)
            out.append(w)
    return out


def brute_min_hitting(masks: list[int], universe: int) -> int:
    """Smallest hitting set size by trying vertex subsets in size order."""
    for size in range(0, universe + 1):
        for combo in combinations(range(universe), size):
            chosen = sum(1 << v for v in combo)
            if all(m & chosen for m in masks):
                return size
    raise AssertionError("unhittable collection")

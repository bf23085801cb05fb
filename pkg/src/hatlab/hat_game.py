"""Winning-set families, strategies, and exact game values.

Setting: ``t`` players, each carrying a stack of ``n`` hats encoded as a
point of B = {0,1}^n.  Each player sees everyone else's point, then names
one winning set from a fixed indexed family; the collective succeeds when
every player's own point lies in the set she named.

Conventions:

* Winning-set indices are 0-based throughout.
* A tuple x = (x_0, ..., x_{t-1}) over B has flat index
  ``sum(x_j * N**(t-1-j))`` with N = 2^n (player 0 is the major digit).
* Player i's view of x is the (t-1)-tuple with coordinate i deleted,
  flattened the same way over the remaining players in increasing order.
* All exact values are Fractions with power-of-two denominators; no floats
  on exact paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Sequence

from .bits import iter_bits
from .constructions import kneser_hypercube
from .errors import SizeLimitError
from .graph_core import enumerate_maximal_independent_sets
from .rng import randrange

KINDS = ("dictator", "intersecting", "monotone")
INTERSECTING_MAX_N = 4
MONOTONE_MAX_N = 5
DEFAULT_TABLE_BUDGET = 2_000_000
DEFAULT_MASK_GUARD = 1 << 22


@dataclass(frozen=True)
class WinningFamily:
    """Indexed family of winning sets over B = {0,1}^n.

    Each set is stored as a 2^n-bit membership mask (bit w set iff the word
    w belongs to the set).
    """

    n: int
    kind: str
    sets: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.sets)

    def measure(self, i: int) -> Fraction:
        return Fraction(self.sets[i].bit_count(), 1 << self.n)


@dataclass(frozen=True)
class Strategy:
    """Per-player guess tables; tables[i][flat view] is a winning-set index."""

    t: int
    n: int
    tables: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GameValue:
    t: int
    n: int
    kind: str
    value: Fraction
    mode: str  # "exact" | "lower_bound" | "upper_bound"
    witness: Strategy | None = None


def _dictator_sets(n: int) -> tuple[int, ...]:
    size = 1 << n
    return tuple(
        sum(1 << w for w in range(size) if (w >> i) & 1) for i in range(n)
    )


def _balanced_monotone_sets(n: int) -> tuple[int, ...]:
    """All up-closed subsets of {0,1}^n with exactly 2^(n-1) members.

    Recursive assignment over words in decreasing-weight order: a word may
    be included only once all its immediate supersets are included.
    """
    size = 1 << n
    target = size // 2
    words = sorted(range(size), key=lambda w: (-w.bit_count(), w))
    supersets = [
        [w | (1 << j) for j in range(n) if not (w >> j) & 1] for w in words
    ]
    out: list[int] = []

    def assign(pos: int, mask: int, ones: int) -> None:
        remaining = len(words) - pos
        if ones > target or ones + remaining < target:
            return
        if pos == len(words):
            out.append(mask)
            return
        w = words[pos]
        if all((mask >> s) & 1 for s in supersets[pos]):
            assign(pos + 1, mask | (1 << w), ones + 1)
        assign(pos + 1, mask, ones)

    assign(0, 0, 0)
    return tuple(sorted(out))


def winning_family(kind: str, n: int) -> WinningFamily:
    """Build the full indexed family of the given kind.

    dictator: the n coordinate sets {x : x_i = 1}, in coordinate order.
    intersecting: all containment-maximal intersecting families, computed as
    the maximal independent sets of the disjoint-support graph; guarded to
    n <= 4.  monotone: all balanced up-closed sets; guarded to n <= 5.
    """
    if n < 1:
        raise ValueError("winning_family needs n >= 1")
    if kind == "dictator":
        return WinningFamily(n, kind, _dictator_sets(n))
    if kind == "intersecting":
        if n > INTERSECTING_MAX_N:
            raise SizeLimitError(f"intersecting families enumerable only for n <= {INTERSECTING_MAX_N}")
        fams = enumerate_maximal_independent_sets(kneser_hypercube(n))
        sets = tuple(sorted(vs.bits for vs in fams))
        half = 1 << (n - 1)
        assert all(s.bit_count() == half for s in sets)
        return WinningFamily(n, kind, sets)
    if kind == "monotone":
        if n > MONOTONE_MAX_N:
            raise SizeLimitError(f"balanced monotone families enumerable only for n <= {MONOTONE_MAX_N}")
        return WinningFamily(n, kind, _balanced_monotone_sets(n))
    raise ValueError(f"unknown family kind {kind!r}; expected one of {KINDS}")


# ---------------------------------------------------------------------------
# Views and winning sets of strategies
# ---------------------------------------------------------------------------


def view_index(coords: Sequence[int], i: int, N: int) -> int:
    """Flat index of the view of player i for the given full tuple."""
    idx = 0
    for j, c in enumerate(coords):
        if j != i:
            idx = idx * N + c
    return idx


def _winning_count(family: WinningFamily, s: Strategy) -> int:
    """Number of winning tuples, streamed without materializing the mask."""
    N = 1 << family.n
    t = s.t
    total = N**t
    count = 0
    coords = [0] * t
    for flat in range(total):
        f = flat
        for j in range(t - 1, -1, -1):
            coords[j] = f % N
            f //= N
        ok = True
        for i in range(t):
            g = s.tables[i][view_index(coords, i, N)]
            if not (family.sets[g] >> coords[i]) & 1:
                ok = False
                break
        if ok:
            count += 1
    return count


def winning_set_of_strategy(
    family: WinningFamily, s: Strategy, mask_guard: int = DEFAULT_MASK_GUARD
) -> tuple[int, Fraction]:
    """Exact winning set of a strategy as a bit mask over B^t, plus its measure.

    Per player, bits are placed view-by-view using a cached spread of each
    winning set along the player's stride; the intersection over players is
    the winning set.
    """
    N = 1 << family.n
    t = s.t
    total = N**t
    if total > mask_guard:
        raise SizeLimitError(f"winning-set mask needs {total} bits, over the guard {mask_guard}")
    win = (1 << total) - 1
    spread_cache: dict[tuple[int, int], int] = {}
    for i in range(t):
        stride = N ** (t - 1 - i)
        correct = 0
        hi_block = N ** (t - i)
        table = s.tables[i]
        for view in range(N ** (t - 1)):
            hi, lo = divmod(view, stride)
            g = table[view]
            key = (g, i)
            pat = spread_cache.get(key)
            if pat is None:
                pat = sum(1 << (w * stride) for w in iter_bits(family.sets[g]))
                spread_cache[key] = pat
            correct |= pat << (hi * hi_block + lo)
        win &= correct
    return win, Fraction(win.bit_count(), total)


def exact_value_one_player(family: WinningFamily) -> GameValue:
    """Best single-player value: the largest set measure, lowest index on ties."""
    best = max(range(family.r), key=lambda i: (family.sets[i].bit_count(), -i))
    value = family.measure(best)
    witness = Strategy(1, family.n, ((best,),))
    return GameValue(1, family.n, family.kind, value, "exact", witness)


def r_v_distribution(family: WinningFamily, v: int) -> tuple[int, ...]:
    """Indices of the winning sets containing the point v."""
    if not 0 <= v < (1 << family.n):
        raise ValueError("point out of range")
    return tuple(i for i in range(family.r) if (family.sets[i] >> v) & 1)


def check_positive_correlation(
    family: WinningFamily, J: Sequence[int], i: int
) -> tuple[Fraction, bool]:
    """Exact Pr[i in R_v | J subseteq R_v] over uniform v, and a >= 1/2 flag.

    J empty gives the marginal.  Raises ValueError when the conditioning
    event is empty.
    """
    inter = (1 << (1 << family.n)) - 1
    for j in J:
        inter &= family.sets[j]
    denom = inter.bit_count()
    if denom == 0:
        raise ValueError("conditioning event is empty")
    prob = Fraction((inter & family.sets[i]).bit_count(), denom)
    return prob, prob >= Fraction(1, 2)


# ---------------------------------------------------------------------------
# Two-player exact solver
# ---------------------------------------------------------------------------


def best_response(
    family: WinningFamily, g2_table: Sequence[int]
) -> tuple[tuple[int, ...], Fraction]:
    """Optimal player-0 table against a fixed player-1 table, and the value.

    Player 1's table partitions B into preimages V_i; for each point x_1
    seen by player 0, the best guess maximizes the overlap of a winning set
    with the union of the V_i whose index set contains x_1.  Ties break to
    the least index.
    """
    N = 1 << family.n
    r = family.r
    if len(g2_table) != N:
        raise ValueError("player-1 table must cover all of B")
    V = [0] * r
    for x1, g in enumerate(g2_table):
        V[g] |= 1 << x1
    sets = family.sets
    total = 0
    table0 = []
    for x2 in range(N):
        U = 0
        for i in range(r):
            if (sets[i] >> x2) & 1:
                U |= V[i]
        best_j = 0
        best_c = (sets[0] & U).bit_count()
        for j in range(1, r):
            c = (sets[j] & U).bit_count()
            if c > best_c:
                best_c = c
                best_j = j
        table0.append(best_j)
        total += best_c
    return tuple(table0), Fraction(total, N * N)


def exact_value_two_players(
    family: WinningFamily, budget: int = DEFAULT_TABLE_BUDGET
) -> GameValue:
    """Exact two-player value by enumerating all player-1 tables.

    Every player-1 table (equivalently every ordered partition of B into
    preimages) is paired with its exact best response.  When r^(2^n) tables
    exceed the budget the enumeration stops early and the best value found
    is returned with mode "lower_bound".
    """
    if budget < 1:
        raise ValueError("budget must allow at least one table")
    N = 1 << family.n
    r = family.r
    exhaustive = r**N <= budget
    best_val = Fraction(-1)
    best_g2: tuple[int, ...] | None = None
    examined = 0
    for g2 in iter_product(range(r), repeat=N):
        examined += 1
        if examined > budget:
            break
        _, val = best_response(family, g2)
        if val > best_val:
            best_val = val
            best_g2 = g2
    assert best_g2 is not None
    table0, _ = best_response(family, best_g2)
    witness = Strategy(2, family.n, (table0, best_g2))
    mode = "exact" if exhaustive else "lower_bound"
    return GameValue(2, family.n, family.kind, best_val, mode, witness)


# ---------------------------------------------------------------------------
# Lower bounds for three or more players
# ---------------------------------------------------------------------------


def _best_response_table(
    family: WinningFamily, t: int, tables: list[tuple[int, ...]], i: int
) -> tuple[int, ...]:
    """Exact best response for player i holding the other tables fixed."""
    N = 1 << family.n
    r = family.r
    sets = family.sets
    views = N ** (t - 1)
    new_table = []
    coords = [0] * t
    for view in range(views):
        f = view
        others = [0] * (t - 1)
        for j in range(t - 2, -1, -1):
            others[j] = f % N
            f //= N
        # mask over x_i of "every other player guesses correctly"
        ok_mask = 0
        for x_i in range(N):
            pos = 0
            for j in range(t):
                if j == i:
                    coords[j] = x_i
                else:
                    coords[j] = others[pos]
                    pos += 1
            ok = True
            for j in range(t):
                if j == i:
                    continue
                g = tables[j][view_index(coords, j, N)]
                if not (sets[g] >> coords[j]) & 1:
                    ok = False
                    break
            if ok:
                ok_mask |= 1 << x_i
        best_j = 0
        best_c = (sets[0] & ok_mask).bit_count()
        for j in range(1, r):
            c = (sets[j] & ok_mask).bit_count()
            if c > best_c:
                best_c = c
                best_j = j
        new_table.append(best_j)
    return tuple(new_table)


def coordinate_ascent(
    family: WinningFamily, t: int, tables: Sequence[Sequence[int]], max_sweeps: int = 64
) -> tuple[Strategy, list[Fraction]]:
    """Repeatedly replace one player's table by its exact best response.

    Returns the final strategy and the value after each sweep; the history
    is non-decreasing because each replacement is an exact best response.
    """
    N = 1 << family.n
    total = N**t
    work = [tuple(tb) for tb in tables]
    history: list[Fraction] = []
    for _ in range(max_sweeps):
        changed = False
        for i in range(t):
            new_i = _best_response_table(family, t, work, i)
            if new_i != work[i]:
                work[i] = new_i
                changed = True
        strat = Strategy(t, family.n, tuple(work))
        history.append(Fraction(_winning_count(family, strat), total))
        if not changed:
            break
    return Strategy(t, family.n, tuple(work)), history


def _lift_strategy(strat: Strategy, N: int) -> list[list[int]]:
    """Embed a (t-1)-player strategy into the t-player game.

    Splitting B^t as B^(t-1) x B: the first t-1 players ignore the new last
    coordinate (the least significant view digit) and play as before; the
    new player starts on guess 0 and picks up her exact best response in
    the first ascent sweep.
    """
    t = strat.t + 1
    views = N ** (t - 1)
    tables = [[tb[view // N] for view in range(views)] for tb in strat.tables]
    tables.append([0] * views)
    return tables


def nested_lower_bound(
    family: WinningFamily, t: int, seed: int = 0, restarts: int = 4
) -> GameValue:
    """Certified lower bound for the t-player value (t >= 3).

    Start candidates: the best lower-level strategy lifted through the
    split B^t = B^(t-1) x B (exact two-player witness at the bottom), the
    all-least-index strategy, and seeded random tables.  Each start is
    improved by coordinate ascent, and the best final value is re-verified
    by an exact count of the winning tuples of its witness, so the bound
    never depends on the search having behaved.
    """
    if t < 3:
        raise ValueError("nested_lower_bound is for t >= 3; use the exact solvers below that")
    N = 1 << family.n
    views = N ** (t - 1)
    r = family.r
    total = N**t

    starts: list[list[list[int]]] = []
    # seed strategy from one level down: exact two-player witness when the
    # table space is small, a budgeted (heuristic) one otherwise
    below = exact_value_two_players(family, budget=50_000) if t == 3 else nested_lower_bound(
        family, t - 1, seed=seed, restarts=restarts
    )
    if below.witness is not None:
        starts.append(_lift_strategy(below.witness, N))
    starts.append([[0] * views for _ in range(t)])
    for k in range(1, max(1, restarts)):
        starts.append(
            [[randrange(r, seed, k, i, v) for v in range(views)] for i in range(t)]
        )

    best_val = Fraction(-1)
    best_strat: Strategy | None = None
    for tables in starts:
        strat, _ = coordinate_ascent(family, t, tables)
        val = Fraction(_winning_count(family, strat), total)
        if val > best_val:
            best_val = val
            best_strat = strat
    return GameValue(t, family.n, family.kind, best_val, "lower_bound", best_strat)

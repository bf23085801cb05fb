"""Blocker families for multi-player games, with certified verification.

A blocker is a set of point-tuples that intersects every winning set the
players can realize.  Small disjoint blockers force a quantified loss in
the game value when a player count is added, via ``lemma_bound``.

The inductive construction lives here: complementary pairs at arity 1, and
an arity lift that crosses an existing family with randomly sampled
``ell``-tuples built from ordered coordinate partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .bits import point_to_str, str_to_point
from .errors import BudgetExceededError, RetryLimitError
from .hat_game import WinningFamily
from .rng import randrange

DEFAULT_VERIFY_BUDGET = 5_000_000
DEFAULT_MAX_ATTEMPTS = 10_000

PointTuple = tuple[int, ...]


@dataclass(frozen=True)
class BlockerSchedule:
    """Size/measure schedule of the inductive construction at one level.

    k(1) = 2 and beta(1) = 1; each level multiplies k by ell = C(2k, k) and
    divides beta by 2*ell.  ``ell`` is the tuple length used to reach this
    level (None at level 1).
    """

    d: int
    k: int
    beta: Fraction
    ell: int | None


@dataclass(frozen=True)
class BlockerFamily:
    """Pairwise-disjoint point-tuple sets of a common size."""

    t: int
    n: int
    blockers: tuple[frozenset[PointTuple], ...]
    union_measure: Fraction

    def __post_init__(self):
        sizes = {len(b) for b in self.blockers}
        if len(sizes) > 1:
            raise ValueError("blockers must share a common size")
        total = sum(len(b) for b in self.blockers)
        distinct = len(set().union(*self.blockers)) if self.blockers else 0
        if total != distinct:
            raise ValueError("blockers must be pairwise disjoint")
        if self.blockers and self.union_measure != Fraction(total, (1 << self.n) ** self.t):
            raise ValueError("union measure inconsistent with contents")

    @property
    def k(self) -> int:
        return len(self.blockers[0]) if self.blockers else 0


@dataclass(frozen=True)
class TupleFamily:
    """Disjoint ell-tuples of points, one ordered coordinate partition each.

    A partition assigns every coordinate of [n] to one of 2*k_base parts
    (all parts nonempty); the tuple's members are the C(2k, k) words whose
    support is the union of exactly k_base parts.
    """

    n: int
    k_base: int
    partitions: tuple[tuple[int, ...], ...]
    tuples: tuple[frozenset[int], ...]
    union_measure: Fraction

    @property
    def ell(self) -> int:
        return comb(2 * self.k_base, self.k_base)


def blocker_schedule(d_max: int) -> list[BlockerSchedule]:
    """Exact schedule values for levels 1..d_max (arbitrary precision)."""
    if d_max < 1:
        raise ValueError("need d_max >= 1")
    out = [BlockerSchedule(1, 2, Fraction(1), None)]
    for d in range(2, d_max + 1):
        prev = out[-1]
        ell = comb(2 * prev.k, prev.k)
        out.append(BlockerSchedule(d, prev.k * ell, prev.beta / (2 * ell), ell))
    return out


def pair_blockers(n: int) -> BlockerFamily:
    """All complementary pairs {x, ~x}: the arity-1 blockers, union measure 1.

    Every coordinate set {x : x_i = 1} contains exactly one point of each
    pair, so each pair meets every single-player winning set.
    """
    if n < 1:
        raise ValueError("pair_blockers needs n >= 1")
    full = (1 << n) - 1
    blockers = tuple(
        frozenset({(x,), (full ^ x,)}) for x in range(1 << n) if x < full ^ x
    )
    return BlockerFamily(1, n, blockers, Fraction(1))


def _sample_partition(n: int, parts: int, seed: int, attempt: int) -> tuple[int, ...] | None:
    """Uniform assignment of coordinates to parts, rejected if a part is empty."""
    assign = tuple(randrange(parts, seed, attempt, c) for c in range(n))
    return assign if len(set(assign)) == parts else None


def build_ell_tuples(
    n: int,
    k_base: int,
    seed: int,
    target_measure: Fraction | None = None,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> TupleFamily:
    """Sample disjoint ell-tuples until their union reaches the target measure.

    Each attempt draws a uniform ordered partition of the n coordinates into
    2*k_base nonempty parts, forms the C(2k, k) part-union words, and accepts
    the tuple iff it avoids every previously accepted word.  The default
    target is 1/(2*ell); pass a larger value to keep accumulating tuples.
    """
    two_k = 2 * k_base
    if k_base < 1:
        raise ValueError("k_base must be >= 1")
    if n < two_k:
        raise ValueError(f"need n >= {two_k} coordinates to form nonempty parts")
    ell = comb(two_k, k_base)
    if target_measure is None:
        target_measure = Fraction(1, 2 * ell)
    if not 0 < target_measure <= 1:
        raise ValueError("target measure must lie in (0, 1]")
    space = 1 << n
    used = 0
    tuples: list[frozenset[int]] = []
    partitions: list[tuple[int, ...]] = []
    attempt = 0
    while Fraction(len(tuples) * ell, space) < target_measure:
        attempt += 1
        if attempt > max_attempts:
            raise RetryLimitError(
                f"gave up after {max_attempts} partition samples "
                f"(reached measure {Fraction(len(tuples) * ell, space)} of {target_measure})",
                attempts=attempt - 1,
            )
        assign = _sample_partition(n, two_k, seed, attempt)
        if assign is None:
            continue
        part_mask = [0] * two_k
        for c, p in enumerate(assign):
            part_mask[p] |= 1 << c
        words = [
            sum(part_mask[p] for p in subset)
            for subset in combinations(range(two_k), k_base)
        ]
        wmask = 0
        for w in words:
            wmask |= 1 << w
        if wmask & used:
            continue
        used |= wmask
        tuples.append(frozenset(words))
        partitions.append(assign)
    return TupleFamily(
        n, k_base, tuple(partitions), tuple(tuples), Fraction(len(tuples) * ell, space)
    )


def lift_blockers(base: BlockerFamily, tuples: TupleFamily) -> BlockerFamily:
    """Cross every base blocker with every tuple: arity t -> t + 1.

    Sizes multiply by ell and union measures multiply exactly.
    """
    if base.n != tuples.n:
        raise ValueError("base family and tuples must share the point space")
    blockers = tuple(
        frozenset(bt + (y,) for bt in b for y in Y)
        for b in base.blockers
        for Y in tuples.tuples
    )
    return BlockerFamily(
        base.t + 1, base.n, blockers, base.union_measure * tuples.union_measure
    )


@dataclass(frozen=True)
class VerifyResult:
    is_blocker: bool
    counterexample: dict[int, dict[PointTuple, int]] | None
    nodes: int


def verify_blocker(
    n: int,
    t: int,
    A: Iterable[PointTuple],
    family: WinningFamily,
    budget: int = DEFAULT_VERIFY_BUDGET,
) -> VerifyResult:
    """Decide whether A intersects every winning set of the t-player game.

    A winning set avoiding A exists iff guesses can be chosen on the views
    that A projects to (per player) so that every tuple of A fails for at
    least one player; all other views are irrelevant.  The search runs over
    those assignments with early pruning: a branch dies as soon as some
    tuple has all its players assigned and none wrong.  When A is not a
    blocker the first avoiding assignment (in lexicographic order) comes
    back as a partial strategy.

    Raises :class:`BudgetExceededError` when the budget runs out; the
    verdict is then unknown, never silently passed.
    """
    tuples = sorted(set(tuple(a) for a in A))
    if t < 2:
        raise ValueError("verify_blocker handles t >= 2")
    if family.n != n:
        raise ValueError("family point space does not match n")
    for a in tuples:
        if len(a) != t:
            raise ValueError(f"tuple {a} does not have arity {t}")
        if any(not 0 <= x < (1 << n) for x in a):
            raise ValueError(f"tuple {a} has points outside {n}-bit space")
    if not tuples:
        raise ValueError("empty candidate set")

    r = family.r
    sets = family.sets

    views_per_player: list[list[PointTuple]] = []
    for i in range(t):
        views_per_player.append(sorted({a[:i] + a[i + 1 :] for a in tuples}))
    # assign players with fewer views first so contradictions surface early
    player_order = sorted(range(t), key=lambda i: (len(views_per_player[i]), i))
    variables: list[tuple[int, PointTuple]] = [
        (i, view) for i in player_order for view in views_per_player[i]
    ]
    var_id = {var: k for k, var in enumerate(variables)}

    # per variable: the tuples it participates in, with the point to test
    touches: list[list[tuple[int, int]]] = [[] for _ in variables]
    for a_idx, a in enumerate(tuples):
        for i in range(t):
            touches[var_id[(i, a[:i] + a[i + 1 :])]].append((a_idx, a[i]))

    pending = [t] * len(tuples)
    failed = [False] * len(tuples)
    assignment = [0] * len(variables)
    nodes = 0

    def dfs(pos: int) -> bool:
        nonlocal nodes
        if pos == len(variables):
            return True  # every tuple failed somewhere: A is avoided
        for g in range(r):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"verification exceeded {budget} assignments; verdict unknown",
                    nodes=nodes,
                )
            newly_failed = []
            feasible = True
            for a_idx, pt in touches[pos]:
                pending[a_idx] -= 1
                if not (sets[g] >> pt) & 1 and not failed[a_idx]:
                    failed[a_idx] = True
                    newly_failed.append(a_idx)
            for a_idx, _ in touches[pos]:
                if pending[a_idx] == 0 and not failed[a_idx]:
                    feasible = False
                    break
            if feasible:
                assignment[pos] = g
                if dfs(pos + 1):
                    return True
            for a_idx, _ in touches[pos]:
                pending[a_idx] += 1
            for a_idx in newly_failed:
                failed[a_idx] = False
        return False

    if dfs(0):
        counterexample: dict[int, dict[PointTuple, int]] = {}
        for k, (i, view) in enumerate(variables):
            counterexample.setdefault(i, {})[view] = assignment[k]
        return VerifyResult(False, counterexample, nodes)
    return VerifyResult(True, None, nodes)


def lemma_bound(p_t: Fraction, k: int, beta: Fraction) -> Fraction:
    """Value bound one player up: p_t - 2^(-k) * beta / k, exactly."""
    if k < 1:
        raise ValueError("blocker size k must be >= 1")
    if not 0 <= beta <= 1:
        raise ValueError("union measure beta must lie in [0, 1]")
    return p_t - beta / (k * (1 << k))


# ---------------------------------------------------------------------------
# JSON rendering: a blocker is an array of tuples of bit-words rendered as
# binary strings (coordinate x_1 first).
# ---------------------------------------------------------------------------


def blocker_to_json(blocker: frozenset[PointTuple], n: int) -> list[list[str]]:
    return [[point_to_str(x, n) for x in tup] for tup in sorted(blocker)]


def family_to_json(fam: BlockerFamily) -> dict:
    return {
        "t": fam.t,
        "n": fam.n,
        "k": fam.k,
        "union_measure": f"{fam.union_measure.numerator}/{fam.union_measure.denominator}",
        "blockers": [blocker_to_json(b, fam.n) for b in fam.blockers],
    }


def tuples_from_json(obj: Sequence[Sequence[str]]) -> tuple[int, int, list[PointTuple]]:
    """Parse one candidate set: a JSON array of tuples of word strings.

    Returns (n, t, tuples); n comes from the word length, t from the arity.
    """
    if not obj:
        raise ValueError("candidate set is empty")
    tuples = []
    n = len(obj[0][0])
    t = len(obj[0])
    for tup in obj:
        if len(tup) != t or any(len(w) != n for w in tup):
            raise ValueError("inconsistent word lengths or arities in candidate set")
        tuples.append(tuple(str_to_point(w) for w in tup))
    return n, t, tuples

from fractions import Fraction

import pytest

from hatlab.constructions import hamming_power, kneser_hypercube
from hatlab.errors import SizeLimitError
from hatlab.graph_core import max_independent_set
from hatlab.hat_game import (
    Strategy,
    WinningFamily,
    best_response,
    check_positive_correlation,
    coordinate_ascent,
    exact_value_one_player,
    exact_value_two_players,
    nested_lower_bound,
    r_v_distribution,
    winning_family,
    winning_set_of_strategy,
)
from hatlab.rng import randrange

from oracles import (
    brute_two_player_value,
    maximal_intersecting_families,
    simulate_strategy,
)

HALF = Fraction(1, 2)


# -- families ----------------------------------------------------------------


def test_dictator_family():
    fam = winning_family("dictator", 3)
    assert fam.r == 3
    assert all(fam.measure(i) == HALF for i in range(3))
    # W_i is the set of words with coordinate i+1 equal to 1
    assert fam.sets[0] == sum(1 << w for w in range(8) if w & 1)


def test_intersecting_family_n2_structure():
    fam = winning_family("intersecting", 2)
    assert fam.r == 2
    # each family holds word 11 and exactly one of {01, 10}
    assert set(fam.sets) == {0b1010, 0b1100}


@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_intersecting_measures_and_maximality(n):
    fam = winning_family("intersecting", n)
    assert all(fam.measure(i) == HALF for i in range(fam.r))
    if n <= 3:
        assert set(fam.sets) == maximal_intersecting_families(n)


def test_monotone_n2_is_the_dictators():
    assert winning_family("monotone", 2).sets == winning_family("dictator", 2).sets


@pytest.mark.parametrize("n", (1, 2, 3, 4, 5))
def test_monotone_families_balanced_and_up_closed(n):
    fam = winning_family("monotone", n)
    half = 1 << (n - 1)
    for mask in fam.sets:
        assert mask.bit_count() == half
        for w in range(1 << n):
            if (mask >> w) & 1:
                for j in range(n):
                    assert (mask >> (w | (1 << j))) & 1


def test_every_maximal_intersecting_family_is_balanced_monotone():
    for n in (2, 3, 4):
        inter = set(winning_family("intersecting", n).sets)
        mono = set(winning_family("monotone", n).sets)
        assert inter <= mono


def test_family_guards():
    with pytest.raises(SizeLimitError):
        winning_family("intersecting", 5)
    with pytest.raises(SizeLimitError):
        winning_family("monotone", 6)
    with pytest.raises(ValueError):
        winning_family("nonsense", 2)


# -- winning sets of strategies ----------------------------------------------


def test_single_player_winning_set():
    fam = winning_family("dictator", 2)
    s = Strategy(1, 2, ((1,),))
    mask, measure = winning_set_of_strategy(fam, s)
    assert mask == fam.sets[1] and measure == HALF


def test_two_player_n1_forced():
    fam = winning_family("dictator", 1)
    s = Strategy(2, 1, ((0, 0), (0, 0)))
    mask, measure = winning_set_of_strategy(fam, s)
    assert measure == Fraction(1, 4)
    assert mask == 1 << (1 * 2 + 1)  # only the all-ones pair wins


def test_winning_set_matches_simulation_oracle():
    cases = [
        ("dictator", 2, 2, 11),
        ("dictator", 2, 3, 12),
        ("intersecting", 2, 2, 13),
        ("monotone", 3, 2, 14),
        ("dictator", 1, 4, 15),
    ]
    for kind, n, t, seed in cases:
        fam = winning_family(kind, n)
        N = 1 << n
        tables = tuple(
            tuple(randrange(fam.r, seed, i, v) for v in range(N ** (t - 1)))
            for i in range(t)
        )
        s = Strategy(t, n, tables)
        mask, measure = winning_set_of_strategy(fam, s)
        count, oracle_measure = simulate_strategy(fam, s)
        assert mask.bit_count() == count and measure == oracle_measure


def test_winning_set_guard():
    fam = winning_family("dictator", 4)
    s = Strategy(4, 4, tuple(tuple([0] * 16**3) for _ in range(4)))
    with pytest.raises(SizeLimitError):
        winning_set_of_strategy(fam, s, mask_guard=1 << 10)


@pytest.mark.parametrize("kind,n", [("dictator", 3), ("intersecting", 3), ("monotone", 4)])
def test_one_player_value_is_half(kind, n):
    assert exact_value_one_player(winning_family(kind, n)).value == HALF


# -- best response and two-player values --------------------------------------


def test_best_response_n1():
    fam = winning_family("dictator", 1)
    table, value = best_response(fam, (0, 0))
    assert value == Fraction(1, 4)


def test_best_response_matches_exhaustive_player0_tables():
    fam = winning_family("dictator", 2)
    g2 = (0, 0, 0, 0)
    _, value = best_response(fam, g2)
    best = max(
        simulate_strategy(fam, Strategy(2, 2, ((a, b, c, d), g2)))[1]
        for a in range(2)
        for b in range(2)
        for c in range(2)
        for d in range(2)
    )
    assert value == best


def test_best_response_dominates_arbitrary_tables():
    fam = winning_family("dictator", 2)
    for seed in range(5):
        g2 = tuple(randrange(2, 40, seed, v) for v in range(4))
        t0 = tuple(randrange(2, 41, seed, v) for v in range(4))
        _, value = best_response(fam, g2)
        assert value >= simulate_strategy(fam, Strategy(2, 2, (t0, g2)))[1]


def test_two_player_n1_dictator():
    assert exact_value_two_players(winning_family("dictator", 1)).value == Fraction(1, 4)


def test_two_player_matches_double_enumeration():
    fam = winning_family("dictator", 2)
    gv = exact_value_two_players(fam)
    assert gv.mode == "exact"
    assert gv.value == brute_two_player_value(fam)


def test_two_player_witness_realizes_value():
    for kind, n in (("dictator", 2), ("intersecting", 2), ("dictator", 3)):
        gv = exact_value_two_players(winning_family(kind, n))
        _, measure = winning_set_of_strategy(winning_family(kind, n), gv.witness)
        assert measure == gv.value


def test_two_player_budget_gives_lower_bound_mode():
    fam = winning_family("dictator", 2)
    gv = exact_value_two_players(fam, budget=5)
    assert gv.mode == "lower_bound"
    assert gv.value <= exact_value_two_players(fam).value


@pytest.mark.parametrize("n", (1, 2, 3))
def test_folklore_bound_dictator(n):
    assert exact_value_two_players(winning_family("dictator", n)).value <= Fraction(3, 8)


def test_value_denominator_divides_power_of_two():
    gv = exact_value_two_players(winning_family("intersecting", 2))
    assert (1 << (2 * 2 * 2)) % gv.value.denominator == 0


def test_two_player_value_equals_power_ratio_n2():
    lhs = exact_value_two_players(winning_family("intersecting", 2)).value
    rhs = max_independent_set(hamming_power(kneser_hypercube(2), 2)).alpha_bar
    assert lhs == rhs


def test_family_sandwich_two_players():
    for n in (1, 2, 3):
        vals = {
            kind: exact_value_two_players(winning_family(kind, n)).value
            for kind in ("dictator", "intersecting", "monotone")
        }
        assert vals["monotone"] >= vals["intersecting"] >= vals["dictator"]


def test_dictator_value_monotone_in_n():
    v = [exact_value_two_players(winning_family("dictator", n)).value for n in (1, 2, 3)]
    assert v[0] <= v[1] <= v[2]
    assert all(x < HALF for x in v)


# -- t >= 3 lower bounds -----------------------------------------------------


def test_nested_lower_bound_t3_n1_forced():
    gv = nested_lower_bound(winning_family("dictator", 1), 3)
    assert gv.value == Fraction(1, 8) and gv.mode == "lower_bound"


def test_nested_lower_bound_below_two_player_value():
    fam = winning_family("dictator", 2)
    lb = nested_lower_bound(fam, 3, seed=7, restarts=3)
    assert lb.value <= exact_value_two_players(fam).value
    assert lb.value > 0


def test_nested_lower_bound_witness_consistent():
    fam = winning_family("dictator", 2)
    gv = nested_lower_bound(fam, 3, seed=5, restarts=2)
    _, measure = winning_set_of_strategy(fam, gv.witness)
    assert measure == gv.value


def test_coordinate_ascent_never_decreases():
    fam = winning_family("dictator", 2)
    tables = [
        [randrange(fam.r, 99, i, v) for v in range(16)] for i in range(3)
    ]
    _, history = coordinate_ascent(fam, 3, tables)
    assert all(history[i] <= history[i + 1] for i in range(len(history) - 1))


def test_nested_lower_bound_four_players_forced():
    gv = nested_lower_bound(winning_family("dictator", 1), 4)
    assert gv.value == Fraction(1, 16)  # every guess forced, all hats must be 1


def test_nested_lower_bound_rejects_small_t():
    with pytest.raises(ValueError):
        nested_lower_bound(winning_family("dictator", 1), 2)


# -- induced index sets and correlation ---------------------------------------


def test_r_v_all_ones_and_zeros():
    fam = winning_family("dictator", 3)
    assert r_v_distribution(fam, 0b111) == (0, 1, 2)
    assert r_v_distribution(fam, 0) == ()


def test_r_v_marginals_half_intersecting():
    fam = winning_family("intersecting", 3)
    size = 1 << 3
    for i in range(fam.r):
        hits = sum(i in r_v_distribution(fam, v) for v in range(size))
        assert Fraction(hits, size) == HALF


def test_correlation_marginal_is_half():
    for kind in ("dictator", "intersecting", "monotone"):
        fam = winning_family(kind, 3)
        for i in range(fam.r):
            prob, ok = check_positive_correlation(fam, (), i)
            assert prob == HALF and ok


def test_correlation_intersecting_always_passes():
    fam = winning_family("intersecting", 3)
    idx = range(fam.r)
    for i in idx:
        for j in idx:
            for k in idx:
                prob, ok = check_positive_correlation(fam, (j, k), i)
                assert ok and prob >= HALF


def test_correlation_dictator_independent_coordinates():
    fam = winning_family("dictator", 2)
    prob, ok = check_positive_correlation(fam, (0,), 1)
    assert prob == HALF and ok


def test_correlation_empty_conditioning_event():
    fam = WinningFamily(1, "dictator", (0b10, 0b01))  # disjoint sets
    with pytest.raises(ValueError):
        check_positive_correlation(fam, (0, 1), 0)

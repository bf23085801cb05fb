from fractions import Fraction

import pytest

from hatlab.constructions import cayley_distance_graph, random_gnp, shift_graph
from hatlab.graph_core import VertexSet, enumerate_maximum_independent_sets, make_graph
from hatlab.hitting_sets import (
    covering_code_check,
    greedy_hitting,
    h_of_graph,
    min_hitting_set,
)

from oracles import brute_min_hitting

C5 = make_graph(5, [(i, (i + 1) % 5) for i in range(5)])


def vs(universe, *indices):
    return VertexSet.from_indices(universe, indices)


# -- generic engine ----------------------------------------------------------


def test_disjoint_singletons():
    res = min_hitting_set([vs(2, 0), vs(2, 1)], 2)
    assert res.h == 2 and res.exact and res.lower_bound_cert == 2


def test_single_set():
    res = min_hitting_set([vs(4, 1, 3)], 4)
    assert res.h == 1


def test_c5_maximum_sets_need_three():
    sets = enumerate_maximum_independent_sets(C5)
    res = min_hitting_set(sets, 5)
    assert res.h == 3 == brute_min_hitting([s.bits for s in sets], 5)
    assert all(s.bits & res.witness.bits for s in sets)


def test_empty_target_rejected():
    with pytest.raises(ValueError):
        min_hitting_set([VertexSet(3, 0)], 3)
    with pytest.raises(ValueError):
        min_hitting_set([], 3)


def test_matches_brute_force_on_corpus():
    for seed in range(12):
        G = random_gnp(10, 0.25 + 0.05 * (seed % 3), seed=9000 + seed)
        sets = enumerate_maximum_independent_sets(G)
        res = h_of_graph(G)
        assert res.exact
        assert res.h == brute_min_hitting([s.bits for s in sets], G.n)
        assert all(s.bits & res.witness.bits for s in sets)
        assert res.lower_bound_cert <= res.h


def test_budget_exhaustion_returns_inexact_upper_bound():
    sets = enumerate_maximum_independent_sets(C5)
    res = min_hitting_set(sets, 5, budget=2)
    assert not res.exact
    assert all(s.bits & res.witness.bits for s in sets)
    assert res.h >= min_hitting_set(sets, 5).h


# -- greedy ------------------------------------------------------------------


def test_greedy_c5_between_h_and_four():
    sets = enumerate_maximum_independent_sets(C5)
    g = greedy_hitting(sets, 5)
    assert 3 <= len(g) <= 4
    assert all(s.bits & g.bits for s in sets)


def test_greedy_single_and_nested():
    assert len(greedy_hitting([vs(5, 2, 4)], 5)) == 1
    nested = [vs(6, 1), vs(6, 1, 3), vs(6, 1, 3, 5)]
    g = greedy_hitting(nested, 6)
    assert g.bits == 0b10


# -- h of named graphs -------------------------------------------------------


@pytest.mark.parametrize("k", (1, 2, 3))
def test_shift_graph_h(k):
    res = h_of_graph(shift_graph(k))
    assert res.h == k + 1 and res.exact


def test_cayley_h_is_covering_code_number():
    res = h_of_graph(cayley_distance_graph(4, 1))
    assert res.h == 4 and res.num_targets == 16
    code = list(res.witness.indices())
    assert covering_code_check(4, 1, code)
    assert res.h >= 2  # at least 2t


def test_threshold_flag_widens_targets():
    # C5: maximum sets have size 2; with eps=1/5 the singleton-free maximal
    # sets of size >= 1 join in (all five maximal sets have size 2 already),
    # while a star gains its center singleton
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    plain = h_of_graph(star)
    widened = h_of_graph(star, threshold_eps=Fraction(1, 2))
    assert plain.num_targets == 1 and plain.h == 1
    assert widened.num_targets == 2  # {leaves} and {center}
    assert widened.h == 2


# -- covering codes ----------------------------------------------------------


def test_covering_radius_m_covers_all():
    assert covering_code_check(4, 4, [0])


def test_covering_radius_zero_single_word():
    assert not covering_code_check(4, 0, [0])


def test_covering_empty_code():
    assert not covering_code_check(3, 1, [])


def test_covering_rejects_bad_words():
    with pytest.raises(ValueError):
        covering_code_check(3, 1, [9])

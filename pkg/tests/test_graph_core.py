from fractions import Fraction

import pytest

from hatlab.errors import BudgetExceededError, CapExceededError, GraphFormatError
from hatlab.graph_core import (
    Graph,
    VertexSet,
    enumerate_maximal_independent_sets,
    enumerate_maximum_independent_sets,
    induced_subgraph,
    make_graph,
    max_independent_set,
    parse_graph_text,
    subset_alpha_table,
    write_graph_text,
)
from hatlab.constructions import kneser_hypercube, random_gnp

from oracles import (
    brute_alpha,
    brute_maximal_sets,
    brute_maximum_sets,
    is_independent,
    maximal_intersecting_families,
)

TRIANGLE = make_graph(3, [(0, 1), (1, 2), (0, 2)])
C5 = make_graph(5, [(i, (i + 1) % 5) for i in range(5)])
PATH3 = make_graph(3, [(0, 1), (1, 2)])


def corpus(count=30, max_n=13, seed=90210):
    graphs = []
    for g in range(count):
        n = 4 + g % (max_n - 3)
        p = 0.15 + 0.1 * (g % 6)
        graphs.append(random_gnp(n, p, seed=seed + g))
    return graphs


# -- construction ------------------------------------------------------------


def test_make_graph_triangle():
    assert all(TRIANGLE.degree(v) == 2 for v in range(3))


def test_make_graph_edgeless():
    G = make_graph(2, [])
    assert max_independent_set(G).alpha == 2


def test_make_graph_self_loop_excludes_vertex():
    G = make_graph(1, [(0, 0)])
    res = max_independent_set(G)
    assert res.alpha == 0 and len(res.witness) == 0


def test_make_graph_rejects_bad_index():
    with pytest.raises(ValueError):
        make_graph(2, [(0, 2)])


def test_duplicate_edges_collapse():
    G = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.n_edges == 1


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


# -- exact solver ------------------------------------------------------------


def test_alpha_triangle():
    assert max_independent_set(TRIANGLE).alpha == 1


def test_alpha_matches_brute_force_on_corpus():
    for G in corpus():
        assert max_independent_set(G).alpha == brute_alpha(G)


def test_alpha_matches_brute_force_larger():
    for n, seed in ((16, 5), (18, 6), (20, 7)):
        G = random_gnp(n, 0.25, seed=seed)
        assert max_independent_set(G).alpha == brute_alpha(G)


def test_witness_is_independent_and_loop_free():
    for G in corpus(12):
        res = max_independent_set(G)
        assert is_independent(G, res.witness.bits)
        assert len(res.witness) == res.alpha
        assert res.alpha_bar == Fraction(res.alpha, G.n)


def test_witness_deterministic():
    G = random_gnp(14, 0.3, seed=77)
    a = max_independent_set(G)
    b = max_independent_set(G)
    assert a.witness == b.witness


def test_budget_exceeded_carries_bounds():
    G = random_gnp(40, 0.2, seed=1)
    with pytest.raises(BudgetExceededError) as exc:
        max_independent_set(G, budget=20)
    assert 0 <= exc.value.lower_bound <= exc.value.upper_bound <= 40


# -- enumeration of maximum sets ---------------------------------------------


def test_enumerate_maximum_c5():
    sets = enumerate_maximum_independent_sets(C5)
    assert {vs.bits for vs in sets} == brute_maximum_sets(C5)
    assert len(sets) == 5 and all(len(vs) == 2 for vs in sets)


def test_enumerate_maximum_edgeless():
    G = make_graph(3, [])
    sets = enumerate_maximum_independent_sets(G)
    assert len(sets) == 1 and sets[0].bits == 0b111


def test_enumerate_maximum_contains_witness_on_corpus():
    for G in corpus(10):
        res = max_independent_set(G)
        sets = enumerate_maximum_independent_sets(G)
        assert {vs.bits for vs in sets} == brute_maximum_sets(G)
        assert res.witness.bits in {vs.bits for vs in sets}
        assert all(len(vs) == res.alpha for vs in sets)


def test_enumerate_maximum_cap():
    G = make_graph(12, [])  # exactly one maximum set, cap must not trigger
    assert len(enumerate_maximum_independent_sets(G, cap=1)) == 1
    H = make_graph(6, [(0, 1), (2, 3), (4, 5)])  # 8 maximum sets
    with pytest.raises(CapExceededError) as exc:
        enumerate_maximum_independent_sets(H, cap=3)
    assert exc.value.found == 4


# -- maximal sets ------------------------------------------------------------


def test_maximal_triangle():
    sets = enumerate_maximal_independent_sets(TRIANGLE)
    assert {vs.bits for vs in sets} == {0b001, 0b010, 0b100}


def test_maximal_path3():
    sets = enumerate_maximal_independent_sets(PATH3)
    assert {vs.bits for vs in sets} == {0b101, 0b010}


def test_maximal_min_size_filter():
    sets = enumerate_maximal_independent_sets(PATH3, min_size=2)
    assert {vs.bits for vs in sets} == {0b101}


def test_maximal_matches_brute_on_corpus():
    for G in corpus(10, max_n=10):
        got = {vs.bits for vs in enumerate_maximal_independent_sets(G)}
        assert got == brute_maximal_sets(G)


def test_maximal_sets_of_kneser_are_intersecting_families():
    # independent sets of the disjoint-support graph (with the all-zero
    # self-loop) are exactly the intersecting families of {0,1}^n
    for n in (2, 3):
        got = {vs.bits for vs in enumerate_maximal_independent_sets(kneser_hypercube(n))}
        assert got == maximal_intersecting_families(n)


def test_maximal_cap():
    with pytest.raises(CapExceededError):
        enumerate_maximal_independent_sets(TRIANGLE, cap=2)


# -- induced subgraphs -------------------------------------------------------


def test_induced_triangle_edge():
    H = induced_subgraph(TRIANGLE, VertexSet.from_indices(3, [0, 2]))
    assert H.n == 2 and H.has_edge(0, 1)


def test_induced_empty_sentinel():
    H = induced_subgraph(TRIANGLE, VertexSet(3, 0))
    assert H.n == 0
    assert max_independent_set(H).alpha == 0


def test_induced_kneser2_restriction():
    K2 = kneser_hypercube(2)
    H = induced_subgraph(K2, VertexSet.from_indices(4, [1, 2, 3]))
    # kept words 01, 10, 11 -> only 01 and 10 have disjoint supports
    assert H.edges() == [(0, 1)]


def test_induced_alpha_monotone():
    for G in corpus(8):
        alpha = max_independent_set(G).alpha
        for bits in (0b1011, (1 << G.n) - 1, 0b11):
            S = VertexSet(G.n, bits & ((1 << G.n) - 1))
            assert max_independent_set(induced_subgraph(G, S)).alpha <= alpha


def test_self_loops_restrict_through_induced():
    G = make_graph(3, [(0, 0), (0, 1)])
    H = induced_subgraph(G, VertexSet.from_indices(3, [0, 2]))
    assert H.has_loop(0) and not H.has_loop(1)
    assert max_independent_set(H).alpha == 1


# -- subset DP ---------------------------------------------------------------


def test_subset_alpha_table_matches_solver():
    G = random_gnp(9, 0.3, seed=12)
    table = subset_alpha_table(G)
    for mask in (0, 0b101, 0b111111111, 0b100100100):
        sub = induced_subgraph(G, VertexSet(9, mask))
        assert table[mask] == max_independent_set(sub).alpha


def test_subset_alpha_table_with_loops():
    G = make_graph(3, [(0, 0), (1, 2)])
    table = subset_alpha_table(G)
    assert table[0b111] == 1 and table[0b001] == 0


# -- text format -------------------------------------------------------------


def test_text_round_trip():
    for G in corpus(6):
        assert parse_graph_text(write_graph_text(G)) == G


def test_text_self_loop_round_trip():
    G = make_graph(2, [(0, 0), (0, 1)])
    text = write_graph_text(G)
    assert "e 0 0" in text
    assert parse_graph_text(text) == G


def test_text_labels_are_comments():
    text = write_graph_text(TRIANGLE, labels=["a", "b", "c"])
    assert "c label 1 b" in text
    assert parse_graph_text(text) == TRIANGLE


def test_text_rejects_malformed_lines():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph_text("graph 2 1\nx 0 1\n")
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_graph_text("e 0 1\n")
    with pytest.raises(GraphFormatError):
        parse_graph_text("graph 2 2\ne 0 1\n")
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph_text("graph 2 1\ne 0 5\n")

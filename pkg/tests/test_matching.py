import pytest
from hypothesis import given

import oracles as o
from conftest import graphs
from edgereg.graph import Graph, add_whiskers, complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from edgereg.matching import (
    K2_C5,
    K2_ONLY,
    Component,
    HFamily,
    HSubgraph,
    canonical_cycle,
    cycle_cover_bound_premise,
    enumerate_cycles,
    ind_match_H,
    ind_match_H_witness,
    induced_matching_number,
    is_chordless,
    is_induced_h_subgraph,
    is_maximal_H_subgraph,
    matching_number,
    min_match_H,
    min_match_H_witness,
    min_maximal_matching,
    shortest_covering_cycle,
    validate_h_subgraph,
)

C5 = cycle_graph(5)
WC5 = add_whiskers(C5)
K2 = complete_graph(2)
C5_CYCLE = HSubgraph((Component("C5", (0, 1, 2, 3, 4)),))
EDGE01 = HSubgraph((Component("K2", (0, 1)),))


def test_family():
    assert K2_C5.label() == "{K2,C5}"
    assert K2_ONLY.label() == "{K2}"
    with pytest.raises(ValueError):
        HFamily(frozenset({2}))


def test_spot_values():
    assert matching_number(C5) == 2
    assert matching_number(empty_graph(4)) == 0
    assert matching_number(WC5) == 5
    assert min_maximal_matching(C5) == 2
    assert min_maximal_matching(K2) == 1
    assert min_maximal_matching(WC5) == 3
    assert induced_matching_number(C5) == 1
    assert induced_matching_number(disjoint_union(K2, K2)) == 2
    assert [induced_matching_number(complete_graph(n)) for n in range(2, 8)] == [1] * 6
    assert ind_match_H(C5, K2_C5) == 2
    assert ind_match_H(empty_graph(3), K2_C5) == 0
    assert min_match_H(WC5, K2_C5) == 2
    assert min_match_H(K2, K2_C5) == 1
    assert min_match_H(empty_graph(3), K2_C5) == 0


def test_cycles():
    assert canonical_cycle([3, 2, 1, 0, 4]) == (0, 1, 2, 3, 4)
    assert enumerate_cycles(C5) == [(0, 1, 2, 3, 4)]
    assert len(enumerate_cycles(complete_graph(4))) == 7
    assert len(enumerate_cycles(complete_graph(4), [3])) == 4
    assert is_chordless(C5, (0, 1, 2, 3, 4))
    chorded = Graph.from_edges(5, C5.edges() + [(0, 2)])
    assert not is_chordless(chorded, (0, 1, 2, 3, 4))


def test_cover_premise():
    assert cycle_cover_bound_premise(C5, range(5))
    assert cycle_cover_bound_premise(WC5, range(5))
    assert not cycle_cover_bound_premise(disjoint_union(C5, K2), range(5))
    with pytest.raises(ValueError):
        cycle_cover_bound_premise(C5, [0, 2, 4])


def test_shortest_covering_cycle():
    assert shortest_covering_cycle(C5) == (0, 1, 2, 3, 4)
    assert shortest_covering_cycle(path_graph(4)) is None
    cyc = shortest_covering_cycle(complete_graph(5))
    assert len(cyc) == 4  # any 4 vertices of K5 cover every edge


def test_subgraph_predicates():
    assert is_maximal_H_subgraph(K2, EDGE01)
    assert not is_maximal_H_subgraph(C5, EDGE01)
    assert is_maximal_H_subgraph(WC5, C5_CYCLE)
    assert is_induced_h_subgraph(WC5, C5_CYCLE)
    assert is_induced_h_subgraph(C5, EDGE01)
    assert not is_induced_h_subgraph(C5, HSubgraph((Component("K2", (0, 1)), Component("K2", (2, 3)))))
    with pytest.raises(ValueError):
        validate_h_subgraph(C5, HSubgraph((Component("K2", (0, 2)),)))
    with pytest.raises(ValueError):
        validate_h_subgraph(C5, HSubgraph((Component("K2", (0, 1)), Component("K2", (1, 2)))))
    with pytest.raises(ValueError):
        validate_h_subgraph(C5, C5_CYCLE, HFamily(frozenset({3})))


# oracle cross-checks on random graphs

@given(graphs())
def test_classical_numbers_oracle(g):
    h = o.to_nx(g)
    assert matching_number(g) == o.matching_number(h)
    assert induced_matching_number(g) == o.induced_matching_number(h)
    assert min_maximal_matching(g) == o.min_maximal_matching(h)


@given(graphs(max_n=7))
def test_h_numbers_oracle(g):
    h = o.to_nx(g)
    assert ind_match_H(g, K2_C5) == o.ind_match_H(h, (5,))
    assert min_match_H(g, K2_C5) == o.min_match_H(h, (5,))


@given(graphs(max_n=6))
def test_other_families_oracle(g):
    h = o.to_nx(g)
    for lengths in [(3,), (4,), (3, 5), (3, 4, 5, 6)]:
        fam = HFamily(frozenset(lengths))
        assert ind_match_H(g, fam) == o.ind_match_H(h, lengths)
        assert min_match_H(g, fam) == o.min_match_H(h, lengths)


@given(graphs())
def test_k2_family_reduces_to_classical(g):
    assert ind_match_H(g, K2_ONLY) == induced_matching_number(g)
    assert min_match_H(g, K2_ONLY) == min_maximal_matching(g)


@given(graphs())
def test_chain_of_numbers(g):
    assert induced_matching_number(g) <= ind_match_H(g) <= min_match_H(g) <= min_maximal_matching(g) <= matching_number(g)


@given(graphs())
def test_witnesses_certify_values(g):
    val, w = ind_match_H_witness(g)
    assert w.match == val
    assert is_induced_h_subgraph(g, w)
    val, w = min_match_H_witness(g)
    assert w.match == val
    assert is_maximal_H_subgraph(g, w)


@given(graphs(max_n=4), graphs(max_n=4))
def test_additive_over_disjoint_union(a, b):
    u = disjoint_union(a, b)
    for f in (matching_number, induced_matching_number, min_maximal_matching, ind_match_H, min_match_H):
        assert f(u) == f(a) + f(b)


def test_whiskered_cycle_gap():
    # odd cycles with whiskers: the cycle counts floor(k/2), a maximal matching needs one more edge
    w = add_whiskers(cycle_graph(5))
    assert (min_match_H(w), min_maximal_matching(w)) == (2, 3)


def test_h_numbers_exhaustive_n6(small_graphs):
    for g in small_graphs:
        h = o.to_nx(g)
        assert ind_match_H(g) == o.ind_match_H(h), g
        assert min_match_H(g) == o.min_match_H(h), g


def test_gallai_identities_n7():
    # alpha + vertex cover number = n; matching + edge cover number = n without isolated vertices
    import networkx as nx
    from edgereg.graph import independence_number, isolated_vertices
    from edgereg.harness.enumerate import enumerate_graphs_upto
    for g in enumerate_graphs_upto(7):
        h = o.to_nx(g)
        assert independence_number(g) + _vertex_cover_number(h) == g.n
        if not isolated_vertices(g):
            assert matching_number(g) + len(nx.min_edge_cover(h)) == g.n


def _vertex_cover_number(h):
    from itertools import combinations
    nodes = list(h.nodes)
    for k in range(len(nodes) + 1):
        if any(all(u in c or v in c for u, v in h.edges) for c in combinations(nodes, k)):
            return k


@given(graphs(max_n=8))
def test_classical_sanity(g):
    m = matching_number(g)
    mm = min_maximal_matching(g)
    assert induced_matching_number(g) <= m
    assert mm <= m <= 2 * mm

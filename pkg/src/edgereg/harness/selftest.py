"""Fixed example values, checked by ``edgereg selftest``."""

from __future__ import annotations

from typing import Callable, NamedTuple

from edgereg.graph import (
    Graph,
    add_whiskers,
    closed_neighborhood,
    complete_graph,
    connected_components,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    independence_number,
    induced_subgraph,
    is_independent,
    is_unmixed,
    is_vertex_cover,
    mask_of,
    path_graph,
    paw_graph,
    star_graph,
)
from edgereg.harness.enumerate import canonical_key, enumerate_graphs
from edgereg.harness.graph6 import emit_graph6, parse_graph6
from edgereg.harness.theorems import RunConfig, verify_graph
from edgereg.homology import (
    betti_table,
    is_cohen_macaulay,
    is_doubly_cohen_macaulay,
    is_gorenstein,
    reduced_homology_ranks,
    regularity,
)
from edgereg.matching import (
    K2_C5,
    K2_ONLY,
    Component,
    HSubgraph,
    cycle_cover_bound_premise,
    ind_match_H,
    induced_matching_number,
    is_induced_h_subgraph,
    is_maximal_H_subgraph,
    matching_number,
    min_match_H,
    min_maximal_matching,
)
from edgereg.simplicial import (
    SimplicialComplex,
    deletion,
    f_vector,
    h_vector,
    hilbert_numerator,
    independence_complex,
    join,
    link,
)
from edgereg.structure import (
    basic_five_cycles,
    girth,
    is_basic_cycle,
    is_in_class_PC,
    is_paw_free,
    pawfree_structure_applies,
    pendant_edges,
    pendant_vertices,
)


class Check(NamedTuple):
    label: str
    actual: Callable[[], object]
    expected: object


def _same(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)


def _dc(g: Graph) -> SimplicialComplex:
    return independence_complex(g)


C5 = cycle_graph(5)
WC5 = add_whiskers(C5)
K2 = complete_graph(2)


def _c5_with_spur() -> Graph:
    # a 5-cycle with one pendant vertex attached at vertex 0
    return Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(0, 5)])


def _num(h):
    return h.coefficients, h.d


def _all_small_graphs(limit=5):
    for n in range(1, limit + 1):
        yield from enumerate_graphs(n)


def checks(field: int = 2) -> list[Check]:
    cfg = RunConfig(max_n=10, field=field)
    c5_report = verify_graph(C5, cfg)
    k1_report = verify_graph(complete_graph(1), cfg)
    wc5_report = verify_graph(WC5, cfg)
    one_cycle = HSubgraph((Component("C5", (0, 1, 2, 3, 4)),))
    one_edge = HSubgraph((Component("K2", (0, 1)),))
    k3_c5 = disjoint_union(complete_graph(3), C5)
    return [
        # graphs
        Check("C5 restricted to all vertices is C5", lambda: _same(induced_subgraph(C5, 0b11111)[0], C5), True),
        Check("C5 on three consecutive vertices is P3",
              lambda: _same(induced_subgraph(C5, 0b111)[0], path_graph(3)), True),
        Check("paw on its triangle is K3", lambda: _same(induced_subgraph(paw_graph(), 0b1110)[0], complete_graph(3)), True),
        Check("C5 minus a vertex is P4", lambda: _same(delete_vertices(C5, 1), path_graph(4)), True),
        Check("G minus nothing is G", lambda: delete_vertices(C5, 0) == C5, True),
        Check("K4 minus a vertex is K3", lambda: _same(delete_vertices(complete_graph(4), 1), complete_graph(3)), True),
        Check("N[isolated vertex]", lambda: closed_neighborhood(empty_graph(1), 0), 0b1),
        Check("N[center of K1,3]", lambda: closed_neighborhood(star_graph(3), 0), 0b1111),
        Check("N[v1] in C5", lambda: closed_neighborhood(C5, 0), mask_of([4, 0, 1])),
        Check("components of 2K2", lambda: [bin(c).count("1") for c in connected_components(disjoint_union(K2, K2))], [2, 2]),
        Check("components of C5", lambda: len(connected_components(C5)), 1),
        Check("components of empty(3)", lambda: len(connected_components(empty_graph(3))), 3),
        Check("{v1,v3} independent in C5", lambda: is_independent(C5, mask_of([0, 2])), True),
        Check("{v1,v2} independent in C5", lambda: is_independent(C5, mask_of([0, 1])), False),
        Check("V(C5) - {v1,v3} is a vertex cover", lambda: is_vertex_cover(C5, 0b11111 & ~mask_of([0, 2])), True),
        Check("alpha(C5)", lambda: independence_number(C5), 2),
        Check("alpha(K6)", lambda: independence_number(complete_graph(6)), 1),
        Check("alpha(empty(4))", lambda: independence_number(empty_graph(4)), 4),
        Check("C5 unmixed", lambda: is_unmixed(C5), True),
        Check("P4 unmixed", lambda: is_unmixed(path_graph(4)), True),
        Check("K1,3 unmixed", lambda: is_unmixed(star_graph(3)), False),
        Check("W(K1) is K2", lambda: _same(add_whiskers(complete_graph(1)), K2), True),
        Check("W(C5) size", lambda: (WC5.n, WC5.num_edges), (10, 10)),
        Check("W(K2) is P4", lambda: _same(add_whiskers(K2), path_graph(4)), True),
        Check("K1 + K2 size", lambda: (lambda u: (u.n, u.num_edges))(disjoint_union(complete_graph(1), K2)), (3, 1)),
        Check("C5 + C5 size", lambda: (lambda u: (u.n, u.num_edges, len(connected_components(u))))(disjoint_union(C5, C5)),
              (10, 10, 2)),
        Check("G + empty(0) is G", lambda: disjoint_union(C5, empty_graph(0)) == C5, True),
        # matching numbers
        Check("match(C5)", lambda: matching_number(C5), 2),
        Check("match(empty(4))", lambda: matching_number(empty_graph(4)), 0),
        Check("match(W(C5))", lambda: matching_number(WC5), 5),
        Check("min-match(C5)", lambda: min_maximal_matching(C5), 2),
        Check("min-match(K2)", lambda: min_maximal_matching(K2), 1),
        Check("min-match(W(C5))", lambda: min_maximal_matching(WC5), 3),
        Check("ind-match(C5)", lambda: induced_matching_number(C5), 1),
        Check("ind-match(2K2)", lambda: induced_matching_number(disjoint_union(K2, K2)), 2),
        Check("ind-match(K_n), n = 2..7", lambda: [induced_matching_number(complete_graph(n)) for n in range(2, 8)], [1] * 6),
        Check("ind-match{K2,C5}(C5)", lambda: ind_match_H(C5, K2_C5), 2),
        Check("ind-match{K2} = ind-match on graphs n <= 5",
              lambda: all(ind_match_H(g, K2_ONLY) == induced_matching_number(g) for g in _all_small_graphs()), True),
        Check("ind-match{K2,C5}(empty(3))", lambda: ind_match_H(empty_graph(3), K2_C5), 0),
        Check("min-match{K2,C5}(W(C5))", lambda: min_match_H(WC5, K2_C5), 2),
        Check("min-match{K2} = min-match on graphs n <= 5",
              lambda: all(min_match_H(g, K2_ONLY) == min_maximal_matching(g) for g in _all_small_graphs()), True),
        Check("min-match{K2,C5}(K2)", lambda: min_match_H(K2, K2_C5), 1),
        Check("edge of K2 is maximal", lambda: is_maximal_H_subgraph(K2, one_edge), True),
        Check("edge of C5 is maximal", lambda: is_maximal_H_subgraph(C5, one_edge), False),
        Check("5-cycle of W(C5) is maximal", lambda: is_maximal_H_subgraph(WC5, one_cycle), True),
        Check("5-cycle of W(C5) is induced", lambda: is_induced_h_subgraph(WC5, one_cycle), True),
        Check("cover premise: C5 with its cycle", lambda: cycle_cover_bound_premise(C5, range(5)), True),
        Check("cover premise: W(C5) with its central cycle", lambda: cycle_cover_bound_premise(WC5, range(5)), True),
        Check("cover premise: C5 + K2 with the cycle", lambda: cycle_cover_bound_premise(disjoint_union(C5, K2), range(5)),
              False),
        # complexes
        Check("facets of Delta(C5)", lambda: sorted(_dc(C5).facet_lists()), [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]),
        Check("Delta(K4) facets", lambda: _dc(complete_graph(4)).facet_lists(), [[0], [1], [2], [3]]),
        Check("Delta(empty(3)) is the simplex", lambda: _dc(empty_graph(3)) == SimplicialComplex.simplex(3), True),
        Check("link of a vertex of the triangle boundary",
              lambda: link(SimplicialComplex.boundary_of_simplex(3), 0).facet_lists(), [[1], [2]]),
        Check("deletion from the simplex",
              lambda: deletion(SimplicialComplex.simplex(4), 3).facet_lists(), [[0, 1, 2]]),
        Check("link of v1 in Delta(C5)", lambda: link(_dc(C5), 0).facet_lists(), [[2], [3]]),
        Check("point join point", lambda: join(SimplicialComplex.simplex(1), SimplicialComplex.simplex(1)).facet_lists(),
              [[0, 1]]),
        Check("Delta(G1 + G2) = Delta(G1) * Delta(G2) on graphs up to 3+3 vertices",
              lambda: all(_dc(disjoint_union(a, b)) == join(_dc(a), _dc(b))
                          for a in _all_small_graphs(3) for b in _all_small_graphs(3)), True),
        Check("c join the empty complex", lambda: join(_dc(C5), SimplicialComplex.empty(0)) == _dc(C5), True),
        Check("f-vector of the 2-simplex", lambda: f_vector(SimplicialComplex.simplex(3)), (3, 3, 1)),
        Check("f-vector of Delta(C5)", lambda: f_vector(_dc(C5)), (5, 5)),
        Check("f-vector of a point", lambda: f_vector(SimplicialComplex.simplex(1)), (1,)),
        Check("h-vector of Delta(C5)", lambda: h_vector(_dc(C5)), (1, 3, 1)),
        Check("h-vector of the 3-simplex", lambda: h_vector(SimplicialComplex.simplex(4)), (1, 0, 0, 0, 0)),
        Check("h-vector of Delta(K3)", lambda: h_vector(_dc(complete_graph(3))), (1, 2)),
        Check("Hilbert numerator of Delta(C5)", lambda: _num(hilbert_numerator(_dc(C5))), ((1, 3, 1), 2)),
        Check("Hilbert numerator of the 3-simplex", lambda: _num(hilbert_numerator(SimplicialComplex.simplex(3))),
              ((1, 0, 0, 0), 3)),
        Check("Hilbert numerator of Delta(K2)", lambda: _num(hilbert_numerator(_dc(K2))), ((1, 1), 1)),
        # homology
        Check("homology of the simplex", lambda: reduced_homology_ranks(SimplicialComplex.simplex(4), field),
              [0, 0, 0, 0, 0]),
        Check("homology of Delta(C5)", lambda: reduced_homology_ranks(_dc(C5), field), [0, 0, 1]),
        Check("homology of two points", lambda: reduced_homology_ranks(_dc(K2), field), [0, 1]),
        Check("reg Delta(K_n), n = 2..7", lambda: [regularity(_dc(complete_graph(n)), field) for n in range(2, 8)], [1] * 6),
        Check("reg Delta(C5)", lambda: regularity(_dc(C5), field), 2),
        Check("reg of the simplex", lambda: regularity(_dc(empty_graph(4)), field), 0),
        Check("Betti table of Delta(K2)", lambda: betti_table(_dc(K2), field).betti, {(0, 0): 1, (1, 2): 1}),
        Check("reg from the Betti table of Delta(C5)", lambda: betti_table(_dc(C5), field).regularity, 2),
        Check("Betti table of the simplex", lambda: betti_table(SimplicialComplex.simplex(3), field).betti, {(0, 0): 1}),
        Check("Delta(C5) CM", lambda: is_cohen_macaulay(_dc(C5), field), True),
        Check("Delta(K_n) CM, n = 1..6", lambda: [is_cohen_macaulay(_dc(complete_graph(n)), field) for n in range(1, 7)],
              [True] * 6),
        Check("Delta(C4) CM", lambda: is_cohen_macaulay(_dc(cycle_graph(4)), field), False),
        Check("Delta(C5) 2CM", lambda: is_doubly_cohen_macaulay(_dc(C5), field), True),
        Check("Delta(K_n) 2CM, n = 2..6",
              lambda: [is_doubly_cohen_macaulay(_dc(complete_graph(n)), field) for n in range(2, 7)], [True] * 5),
        Check("Delta(P3) 2CM", lambda: is_doubly_cohen_macaulay(_dc(path_graph(3)), field), False),
        Check("Delta(K2) Gorenstein", lambda: is_gorenstein(_dc(K2), field), True),
        Check("Delta(C5) Gorenstein", lambda: is_gorenstein(_dc(C5), field), True),
        Check("Delta(K_n) Gorenstein, n = 3..6", lambda: [is_gorenstein(_dc(complete_graph(n)), field) for n in range(3, 7)],
              [False] * 4),
        # structure
        Check("girth(C5)", lambda: girth(C5), 5),
        Check("girth(paw)", lambda: girth(paw_graph()), 3),
        Check("girth(tree)", lambda: girth(star_graph(3)), float("inf")),
        Check("pendant vertices of W(C5)", lambda: pendant_vertices(WC5), (1 << 10) - 1),
        Check("pendant vertices of C5", lambda: pendant_vertices(C5), 0),
        Check("pendant edges of K2", lambda: pendant_edges(K2), [(0, 1)]),
        Check("C5 cycle basic", lambda: is_basic_cycle(C5, (0, 1, 2, 3, 4)), True),
        Check("central cycle of W(C5) basic", lambda: is_basic_cycle(WC5, (0, 1, 2, 3, 4)), False),
        Check("C5 with one degree-3 vertex basic", lambda: basic_five_cycles(_c5_with_spur()), [(0, 1, 2, 3, 4)]),
        Check("C5 in PC", lambda: is_in_class_PC(C5) is not None, True),
        Check("W(G) in PC with no cycles for graphs n <= 4",
              lambda: all((c := is_in_class_PC(add_whiskers(g))) is not None and not c.basic_cycles
                          for g in _all_small_graphs(4)), True),
        Check("K3 in PC", lambda: is_in_class_PC(complete_graph(3)) is not None, False),
        Check("C5 paw-free", lambda: is_paw_free(C5), True),
        Check("K_n paw-free, n = 1..6", lambda: [is_paw_free(complete_graph(n)) for n in range(1, 7)], [True] * 6),
        Check("paw paw-free", lambda: is_paw_free(paw_graph()), False),
        Check("K3 + C5 structure premise", lambda: pawfree_structure_applies(k3_c5), True),
        Check("C5 structure premise", lambda: pawfree_structure_applies(C5), True),
        Check("P4 structure premise", lambda: pawfree_structure_applies(path_graph(4)), False),
        # formats and enumeration
        Check("graph6 round trip of D?{", lambda: emit_graph6(parse_graph6("D?{")), "D?{"),
        Check("graph6 @ is K1", lambda: parse_graph6("@") == complete_graph(1), True),
        Check("graph6 A_ is K2", lambda: parse_graph6("A_") == K2, True),
        Check("graph counts n = 3, 4, 5", lambda: [sum(1 for _ in enumerate_graphs(n)) for n in (3, 4, 5)], [4, 11, 34]),
        # per-graph reports
        Check("C5 report", lambda: tuple(c5_report.invariants[k] for k in
                                         ("reg", "ind_match_k2c5", "min_match_k2c5", "cm", "cm2", "gorenstein", "pc"))
              + (c5_report.failures,), (2, 2, 2, True, True, True, True, [])),
        Check("K1 report", lambda: tuple(k1_report.invariants[k] for k in
                                         ("match", "min_match", "ind_match", "ind_match_k2c5", "min_match_k2c5",
                                          "reg", "gorenstein")) + (k1_report.failures,),
              (0, 0, 0, 0, 0, 0, True, [])),
        Check("W(C5) report", lambda: (wc5_report.invariants["min_match_k2c5"], wc5_report.invariants["min_match"],
                                       wc5_report.verdict("T2").passed), (2, 3, True)),
        Check("upper bound with family {K2,C3,C5} on graphs n <= 5",
              lambda: all(verify_graph(g, RunConfig(max_n=5, field=field, cycles=(3, 5))).verdict("T5").passed
                          for g in _all_small_graphs()), True),
    ]


def run_selftest(field: int = 2, out=None) -> int:
    """Run every check, print one line each, and return the number of failures."""
    failures = 0
    for chk in checks(field):
        try:
            got = chk.actual()
            ok = got == chk.expected
        except Exception as exc:  # a crash counts as a failed check
            got, ok = f"{type(exc).__name__}: {exc}", False
        failures += not ok
        if out is not None:
            line = f"{'PASS' if ok else 'FAIL'}  {chk.label}"
            if not ok:
                line += f"  (expected {chk.expected!r}, got {got!r})"
            out.write(line + "\n")
    return failures

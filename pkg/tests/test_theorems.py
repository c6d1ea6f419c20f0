from collections import Counter

import pytest

from edgereg.graph import add_whiskers, complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from edgereg.harness.enumerate import enumerate_graphs, enumerate_graphs_upto
from edgereg.harness.library import library
from edgereg.harness.theorems import (
    MAX_SWEEP_N,
    THEOREMS,
    RunConfig,
    admitted_cycle_lengths,
    check_join,
    verify_complex,
    verify_graph,
)
from edgereg.simplicial import SimplicialComplex

CFG = RunConfig(max_n=10)

# per n: (CM graphs, PC graphs, paw-free graphs, regularity distribution), from the slow oracles
FROZEN = {
    1: (1, 0, 1, {0: 1}),
    2: (2, 1, 2, {0: 1, 1: 1}),
    3: (3, 0, 4, {0: 1, 1: 3}),
    4: (6, 2, 10, {0: 1, 1: 9, 2: 1}),
    5: (12, 2, 22, {0: 1, 1: 26, 2: 7}),
    6: (36, 4, 57, {0: 1, 1: 93, 2: 61, 3: 1}),
}


def test_registry():
    assert list(THEOREMS) == [f"T{i}" for i in range(1, 16)]


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(max_n=MAX_SWEEP_N + 1)
    with pytest.raises(ValueError):
        RunConfig(field=4)
    with pytest.raises(ValueError):
        RunConfig(cycles=(2,))
    with pytest.raises(ValueError):
        RunConfig(pc_mode="loose")
    with pytest.raises(ValueError):
        RunConfig(jobs=0)
    assert RunConfig(cycles=(5, 3, 5)).cycles == (3, 5)


def test_size_cap():
    with pytest.raises(ValueError, match="cap"):
        verify_graph(cycle_graph(8), RunConfig(max_n=7))


def test_c5_report():
    r = verify_graph(cycle_graph(5), CFG)
    inv = r.invariants
    assert (inv["reg"], inv["ind_match_k2c5"], inv["min_match_k2c5"]) == (2, 2, 2)
    assert inv["cm"] and inv["cm2"] and inv["gorenstein"] and inv["pc"]
    assert r.failures == []
    assert r.verdict("T6").applicable and r.verdict("T11").passed


def test_k1_report():
    inv = verify_graph(complete_graph(1), CFG).invariants
    assert [inv[k] for k in ("match", "min_match", "ind_match", "ind_match_k2c5", "min_match_k2c5", "reg")] == [0] * 6
    assert inv["gorenstein"] and not inv["pc"]


def test_whiskered_c5_report():
    r = verify_graph(add_whiskers(cycle_graph(5)), CFG)
    assert (r.invariants["min_match_k2c5"], r.invariants["min_match"]) == (2, 3)
    assert r.verdict("T1").passed and r.verdict("T2").passed


def test_report_json_key_order():
    r = verify_graph(path_graph(3), CFG, index=4, name="p3")
    js = r.to_json()
    assert list(js)[:6] == ["index", "name", "graph6", "n", "m", "field"]
    assert list(js)[-1] == "verdicts"
    assert [v["id"] for v in js["verdicts"]] == list(THEOREMS)


def test_disconnected_join_check():
    r = verify_graph(disjoint_union(cycle_graph(5), complete_graph(2)), CFG)
    assert r.verdict("T10").applicable and r.verdict("T10").passed
    assert r.invariants["cm2"]


def test_admitted_lengths():
    assert admitted_cycle_lengths((3, 4, 5, 6, 7), 2) == (3, 5)
    assert admitted_cycle_lengths((3, 4, 5, 6, 7), 3) == (3, 5)


def test_other_families():
    cfg = RunConfig(max_n=6, cycles=(3, 4, 5))
    for g in enumerate_graphs_upto(6):
        r = verify_graph(g, cfg)
        assert r.failures == [], r.invariants["graph6"]
        assert r.invariants["admitted_family"] == "{K2,C3,C5}"
    cfg = RunConfig(max_n=5, cycles=(3, 5))
    assert all(verify_graph(g, cfg).verdict("T5").passed for g in enumerate_graphs_upto(5))


def test_frozen_distributions():
    for n, (cm, pc, pawfree, regs) in FROZEN.items():
        reports = [verify_graph(g, CFG).invariants for g in enumerate_graphs(n)]
        assert sum(r["cm"] for r in reports) == cm
        assert sum(r["pc"] for r in reports) == pc
        assert sum(r["paw_free"] for r in reports) == pawfree
        assert dict(sorted(Counter(r["reg"] for r in reports).items())) == regs


def test_verify_complex_library():
    for i, entry in enumerate(library()):
        r = verify_complex(entry.complex, 2, name=entry.name, index=i)
        assert (r.invariants["cm"], r.invariants["cm2"], r.invariants["gorenstein"]) == entry.expected(2)
        assert r.failures == []


def test_check_join():
    pt = SimplicialComplex.simplex(1)
    s0 = SimplicialComplex.from_facets(2, [[0], [1]])
    assert check_join(s0, s0).passed
    assert check_join(pt, s0).passed


def test_edgeless_graph_report():
    r = verify_graph(empty_graph(3), CFG)
    assert r.invariants["reg"] == 0 and r.invariants["girth"] is None
    assert r.failures == []

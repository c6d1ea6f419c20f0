"""Per-graph invariant records and the registry of theorem checks.

Every check reads the same invariant record that is reported, so a
hypothesis and its conclusion always come from one computation.  A failed
check is recorded in the report; nothing here raises on mathematical
content.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from edgereg.graph import Graph, connected_components, cycle_graph, independence_number, induced_subgraph, is_connected
from edgereg.homology import (
    PrimeField,
    is_cohen_macaulay,
    is_doubly_cohen_macaulay,
    is_gorenstein,
    regularity,
)
from edgereg.harness.graph6 import emit_graph6
from edgereg.matching import (
    K2_C5,
    HFamily,
    cycle_cover_bound_premise,
    ind_match_H_witness,
    induced_matching_number,
    matching_number,
    min_match_H_witness,
    min_maximal_matching,
    shortest_covering_cycle,
)
from edgereg.simplicial import SimplicialComplex, f_vector, h_vector, independence_complex, join
from edgereg.structure import (
    PC_MODES,
    components_complete_or_c5,
    components_in_k1_k2_c5,
    girth,
    is_complete,
    is_cycle,
    is_in_class_PC,
    is_paw_free,
    pawfree_structure_applies,
    validate_pc_certificate,
)

MAX_SWEEP_N = 10

THEOREMS: dict[str, str] = {
    "T1": "ind-match <= reg <= min-match",
    "T2": "ind-match <= ind-match{K2,C5} <= reg <= min-match{K2,C5} <= min-match",
    "T3": "ind-match_H <= reg for members with reg = match",
    "T4": "reg <= floor(k/2) for a k-cycle whose vertices cover all edges",
    "T5": "reg <= min-match_H for cycle families",
    "T6": "class PC => reg = ind-match{K2,C5}",
    "T7": "Cohen-Macaulay and girth >= 5 => reg = ind-match{K2,C5}",
    "T8": "doubly Cohen-Macaulay => every h_i >= 1",
    "T9": "doubly Cohen-Macaulay => reg = dim + 1",
    "T10": "join is doubly Cohen-Macaulay <=> both factors are",
    "T11": "paw-free: (2CM and reg = ind-match{K2,C5}) <=> components complete (>= 2) or C5",
    "T12": "connected paw-free 2CM, not C5 or complete => ind-match{K2,C5} + 1 <= reg",
    "T13": "paw-free: (Gorenstein and reg = ind-match{K2,C5}) <=> components in {K1, K2, C5}",
    "T14": "girth >= 5: Gorenstein <=> components in {K1, K2, C5}",
    "T15": "paw-free, no isolated vertex, alpha = ind-match{K2,C5} => components complete or C5",
}


@dataclass(frozen=True)
class RunConfig:
    max_n: int = 7
    min_n: int = 1
    field: int = 2
    cycles: tuple[int, ...] = (5,)
    input: str | None = None
    input_format: str = "auto"
    output_format: str = "jsonl"
    jobs: int = 1
    pc_mode: str = "existential"

    def __post_init__(self):
        if not 0 <= self.max_n <= MAX_SWEEP_N:
            raise ValueError(f"max_n must be at most {MAX_SWEEP_N}; the Hochster sweep costs 2^n homology computations")
        PrimeField(self.field)
        HFamily(frozenset(self.cycles))
        object.__setattr__(self, "cycles", tuple(sorted(set(self.cycles))))
        if self.pc_mode not in PC_MODES:
            raise ValueError(f"pc_mode must be one of {PC_MODES}")
        if self.output_format not in ("jsonl", "csv"):
            raise ValueError("output_format must be 'jsonl' or 'csv'")
        if self.input_format not in ("auto", "graph6", "edges"):
            raise ValueError("input_format must be 'auto', 'graph6' or 'edges'")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    @property
    def family(self) -> HFamily:
        return HFamily(frozenset(self.cycles))


class Verdict(NamedTuple):
    id: str
    applicable: bool
    passed: bool | None

    def to_json(self) -> dict:
        return {"id": self.id, "applicable": self.applicable, "passed": self.passed}


@dataclass
class TheoremReport:
    invariants: dict
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [v.id for v in self.verdicts if v.applicable and not v.passed]

    def verdict(self, tid: str) -> Verdict:
        for v in self.verdicts:
            if v.id == tid:
                return v
        raise KeyError(tid)

    def to_json(self) -> dict:
        return {**self.invariants, "verdicts": [v.to_json() for v in self.verdicts]}


@lru_cache(maxsize=None)
def admitted_cycle_lengths(lengths: tuple[int, ...], p: int = 2) -> tuple[int, ...]:
    """Cycle lengths ``k`` with ``reg(C_k) = floor(k/2)``, checked by computation."""
    return tuple(k for k in lengths if regularity(independence_complex(cycle_graph(k)), p) == k // 2)


def _check(tid: str, applicable: bool, ok) -> Verdict:
    return Verdict(tid, bool(applicable), bool(ok) if applicable else None)


def verify_graph(g: Graph, cfg: RunConfig = RunConfig(), index: int | None = None, name: str | None = None) -> TheoremReport:
    if g.n > cfg.max_n:
        raise ValueError(f"graph has {g.n} vertices, above the configured cap max_n={cfg.max_n}")
    p = cfg.field
    family = cfg.family
    cx = independence_complex(g)

    alpha = independence_number(g)
    gr = girth(g)
    match = matching_number(g)
    minmm = min_maximal_matching(g)
    indm = induced_matching_number(g)
    ind_h, ind_w = ind_match_H_witness(g, K2_C5)
    min_h, min_w = min_match_H_witness(g, K2_C5)
    if family == K2_C5:
        ind_f, min_f = ind_h, min_h
    else:
        ind_f = ind_match_H_witness(g, family)[0]
        min_f = min_match_H_witness(g, family)[0]
    admitted = HFamily(frozenset(admitted_cycle_lengths(cfg.cycles, p)))
    ind_adm = ind_f if admitted == family else (ind_h if admitted == K2_C5 else ind_match_H_witness(g, admitted)[0])

    reg = regularity(cx, p)
    dim1 = cx.krull_dim
    hv = h_vector(cx)
    cm = is_cohen_macaulay(cx, p)
    cm2 = is_doubly_cohen_macaulay(cx, p) if cm else False
    gor = is_gorenstein(cx, p)
    cert = is_in_class_PC(g, cfg.pc_mode)
    pawfree = is_paw_free(g)
    connected = is_connected(g)
    comps = connected_components(g)
    comp_graphs = [induced_subgraph(g, c)[0] for c in comps]
    complete_or_c5 = components_complete_or_c5(g, min_clique=2)
    k1_k2_c5 = components_in_k1_k2_c5(g)
    cover_cycle = shortest_covering_cycle(g)

    inv = {
        "index": index,
        "name": name,
        "graph6": emit_graph6(g),
        "n": g.n,
        "m": g.num_edges,
        "field": p,
        "family": family.label(),
        "alpha": alpha,
        "girth": None if math.isinf(gr) else int(gr),
        "match": match,
        "min_match": minmm,
        "ind_match": indm,
        "ind_match_k2c5": ind_h,
        "min_match_k2c5": min_h,
        "ind_match_family": ind_f,
        "min_match_family": min_f,
        "admitted_family": admitted.label(),
        "ind_match_admitted": ind_adm,
        "reg": reg,
        "dim_plus_1": dim1,
        "f_vector": list(f_vector(cx)),
        "h_vector": list(hv),
        "cm": cm,
        "cm2": cm2,
        "gorenstein": gor,
        "pc": cert is not None,
        "paw_free": pawfree,
        "connected": connected,
        "components": len(comps),
        "components_complete_or_c5": complete_or_c5,
        "components_k1_k2_c5": k1_k2_c5,
        "shortest_covering_cycle": None if cover_cycle is None else list(cover_cycle),
        "witness_ind_match_k2c5": ind_w.to_json(),
        "witness_min_match_k2c5": min_w.to_json(),
        "pc_certificate": None if cert is None else cert.to_json(),
    }

    v = []
    v.append(_check("T1", True, indm <= reg <= minmm))
    v.append(_check("T2", True, indm <= ind_h <= reg <= min_h <= minmm))
    v.append(_check("T3", True, ind_adm <= reg))
    if cover_cycle is not None:
        premise = cycle_cover_bound_premise(g, cover_cycle)
        v.append(_check("T4", premise, reg <= len(cover_cycle) // 2))
    else:
        v.append(_check("T4", False, None))
    v.append(_check("T5", True, reg <= min_f))
    v.append(_check("T6", cert is not None, reg == ind_h and (cert is None or validate_pc_certificate(g, cert))))
    v.append(_check("T7", cm and gr >= 5, reg == ind_h))
    v.append(_check("T8", cm2, all(h >= 1 for h in hv)))
    v.append(_check("T9", cm2, reg == dim1))
    if len(comps) >= 2:
        parts = [is_doubly_cohen_macaulay(independence_complex(h), p) for h in comp_graphs]
        v.append(_check("T10", True, cm2 == all(parts)))
    else:
        v.append(_check("T10", False, None))
    v.append(_check("T11", pawfree, (cm2 and reg == ind_h) == complete_or_c5))
    t12 = connected and pawfree and cm2 and not is_cycle(g, 5) and not is_complete(g)
    v.append(_check("T12", t12, ind_h + 1 <= reg))
    v.append(_check("T13", pawfree, (gor and reg == ind_h) == k1_k2_c5))
    v.append(_check("T14", gr >= 5, gor == k1_k2_c5))
    t15 = pawfree_structure_applies(g, alpha, ind_h)
    v.append(_check("T15", t15, complete_or_c5 if t15 else None))
    return TheoremReport(inv, v)


def verify_complex(c: SimplicialComplex, field: int = 2, name: str | None = None, index: int | None = None) -> TheoremReport:
    """Invariants of a directly given complex, with the checks that apply to complexes."""
    cx = c
    reg = regularity(cx, field)
    hv = h_vector(cx)
    cm = is_cohen_macaulay(cx, field)
    cm2 = is_doubly_cohen_macaulay(cx, field) if cm else False
    gor = is_gorenstein(cx, field)
    inv = {
        "index": index,
        "name": name,
        "n": cx.n,
        "facets": cx.facet_lists(),
        "field": field,
        "reg": reg,
        "dim_plus_1": cx.krull_dim,
        "f_vector": list(f_vector(cx)),
        "h_vector": list(hv),
        "cm": cm,
        "cm2": cm2,
        "gorenstein": gor,
    }
    return TheoremReport(inv, [
        _check("T8", cm2, all(h >= 1 for h in hv)),
        _check("T9", cm2, reg == cx.krull_dim),
    ])


def check_join(c1: SimplicialComplex, c2: SimplicialComplex, field: int = 2) -> Verdict:
    """Join rule for doubly Cohen-Macaulay complexes on one pair."""
    both = is_doubly_cohen_macaulay(c1, field) and is_doubly_cohen_macaulay(c2, field)
    return _check("T10", True, is_doubly_cohen_macaulay(join(c1, c2), field) == both)

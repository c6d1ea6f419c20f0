"""Structural graph predicates: girth, pendant edges, basic 5-cycles,
membership in the class PC, and paw-freeness."""

from __future__ import annotations

import math
from dataclasses import dataclass

from edgereg.graph import (
    Edge,
    Graph,
    connected_components,
    independence_number,
    induced_subgraph,
    isolated_vertices,
    iter_bits,
    mask_of,
    popcount,
)
from edgereg.matching import K2_C5, enumerate_cycles, ind_match_H

PC_MODES = ("existential", "strict")


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                if 2 * dist[u] + 1 >= best:
                    break
                for w in iter_bits(adj[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def pendant_edges(g: Graph) -> list[Edge]:
    return [(u, v) for u, v in g.edges() if g.degree(u) == 1 or g.degree(v) == 1]


def pendant_vertices(g: Graph) -> int:
    """Vertices incident to a pendant edge."""
    return mask_of(x for e in pendant_edges(g) for x in e)


def is_basic_cycle(g: Graph, cycle) -> bool:
    k = len(cycle)
    high = [g.degree(v) >= 3 for v in cycle]
    return not any(high[i] and high[(i + 1) % k] for i in range(k))


def basic_five_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Basic 5-cycles in canonical (least rotation/reflection) form."""
    return [c for c in enumerate_cycles(g, [5]) if is_basic_cycle(g, c)]


def basic_cycle_vertices(g: Graph) -> int:
    """The set C(G) of vertices lying on basic 5-cycles."""
    return mask_of(v for c in basic_five_cycles(g) for v in c)


@dataclass(frozen=True)
class PCCertificate:
    pendant_pairs: tuple[Edge, ...]
    basic_cycles: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"pendant_pairs": [list(e) for e in self.pendant_pairs],
                "basic_cycles": [list(c) for c in self.basic_cycles]}


def _exact_cover(target: int, cycles: list[tuple[int, ...]]) -> list[tuple[int, ...]] | None:
    masks = [(mask_of(c), c) for c in cycles]

    def search(left: int, chosen: list):
        if not left:
            return list(chosen)
        v = (left & -left).bit_length() - 1
        for m, c in masks:
            if m >> v & 1 and m & left == m:
                chosen.append(c)
                found = search(left & ~m, chosen)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return search(target, [])


def is_in_class_PC(g: Graph, mode: str = "existential") -> PCCertificate | None:
    """Certificate of membership in the class PC, or ``None``.

    ``mode="existential"`` asks for some vertex-disjoint family of basic
    5-cycles covering C(G) exactly; ``mode="strict"`` requires all basic
    5-cycles of ``g`` to be pairwise disjoint.
    """
    if mode not in PC_MODES:
        raise ValueError(f"unknown PC mode {mode!r}; expected one of {PC_MODES}")
    pend = pendant_edges(g)
    p_set = 0
    for u, v in pend:
        if p_set >> u & 1 or p_set >> v & 1:
            return None  # pendant edges share a vertex: not a matching
        p_set |= 1 << u | 1 << v
    cycles = basic_five_cycles(g)
    c_set = mask_of(v for c in cycles for v in c)
    if p_set & c_set or p_set | c_set != g.vertex_mask:
        return None
    if mode == "strict":
        seen = 0
        for c in cycles:
            m = mask_of(c)
            if m & seen:
                return None
            seen |= m
        chosen = cycles
    else:
        chosen = _exact_cover(c_set, cycles)
        if chosen is None:
            return None
    return PCCertificate(tuple(pend), tuple(chosen))


def validate_pc_certificate(g: Graph, cert: PCCertificate) -> bool:
    """Re-check the three defining conditions of PC against a certificate."""
    deg = [g.degree(v) for v in range(g.n)]
    p_set = 0
    for u, v in cert.pendant_pairs:
        if not g.has_edge(u, v) or min(deg[u], deg[v]) != 1:
            return False
        if p_set & (1 << u | 1 << v):
            return False
        p_set |= 1 << u | 1 << v
    # every pendant edge of g must be among the pairs
    for v in range(g.n):
        if deg[v] == 1 and not p_set >> v & 1:
            return False
    c_set = 0
    for cyc in cert.basic_cycles:
        if len(cyc) != 5 or len(set(cyc)) != 5:
            return False
        if not all(g.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5)):
            return False
        if any(deg[cyc[i]] >= 3 and deg[cyc[(i + 1) % 5]] >= 3 for i in range(5)):
            return False
        m = mask_of(cyc)
        if m & c_set:
            return False
        c_set |= m
    if c_set != basic_cycle_vertices(g):
        return False
    return not p_set & c_set and p_set | c_set == g.vertex_mask


def is_paw_free(g: Graph) -> bool:
    """No induced triangle-plus-pendant: scan triangles for a vertex seeing exactly one corner."""
    adj = g.adj
    for x in range(g.n):
        for y in iter_bits(adj[x] >> (x + 1) << (x + 1)):
            for z in iter_bits(adj[x] & adj[y] >> (y + 1) << (y + 1)):
                tri = 1 << x | 1 << y | 1 << z
                for v in iter_bits(g.vertex_mask & ~tri):
                    if popcount(adj[v] & tri) == 1:
                        return False
    return True


def is_complete(g: Graph) -> bool:
    return all(popcount(a) == g.n - 1 for a in g.adj)


def is_cycle(g: Graph, k: int | None = None) -> bool:
    if g.n < 3 or (k is not None and g.n != k):
        return False
    return all(popcount(a) == 2 for a in g.adj) and len(connected_components(g)) == 1


def component_graphs(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, comp)[0] for comp in connected_components(g)]


def components_complete_or_c5(g: Graph, min_clique: int = 1) -> bool:
    return all((is_complete(h) and h.n >= min_clique) or is_cycle(h, 5) for h in component_graphs(g))


def components_in_k1_k2_c5(g: Graph) -> bool:
    return all(h.n <= 2 or is_cycle(h, 5) for h in component_graphs(g))


def pawfree_structure_applies(g: Graph, alpha: int | None = None, indmatch: int | None = None) -> bool:
    """Hypotheses of the paw-free structure check: paw-free, no isolated vertex, alpha = ind-match{K2,C5}."""
    if g.n == 0 or isolated_vertices(g) or not is_paw_free(g):
        return False
    alpha = independence_number(g) if alpha is None else alpha
    indmatch = ind_match_H(g, K2_C5) if indmatch is None else indmatch
    return alpha == indmatch


def check_pawfree_structure(g: Graph) -> bool:
    """Every component is complete or a 5-cycle; only for graphs meeting the hypotheses above."""
    if not pawfree_structure_applies(g):
        raise ValueError("graph must be paw-free, without isolated vertices, "
                         "and have independence number equal to its induced {K2,C5}-matching number")
    return components_complete_or_c5(g)

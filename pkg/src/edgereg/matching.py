"""Matching numbers of graphs, including the H-matching numbers for
families H made of K2 and cycles.

An *H-subgraph* is a vertex-disjoint union of components, each a single
edge or a cycle of one of the family's lengths.  Its matching number is the
sum of the component matching numbers (1 per edge, ``k // 2`` per
``k``-cycle).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from edgereg.graph import (
    Graph,
    is_vertex_cover,
    iter_bits,
    mask_of,
    neighborhood_of_set,
    popcount,
)


@dataclass(frozen=True)
class HFamily:
    """K2 together with cycles of the given lengths."""

    cycle_lengths: frozenset[int] = field(default_factory=lambda: frozenset({5}))

    def __post_init__(self):
        lengths = frozenset(self.cycle_lengths)
        object.__setattr__(self, "cycle_lengths", lengths)
        bad = sorted(k for k in lengths if k < 3)
        if bad:
            raise ValueError(f"cycle lengths must be at least 3, got {bad}")

    @property
    def includes_k2(self) -> bool:
        return True

    @classmethod
    def of(cls, *lengths: int) -> HFamily:
        return cls(frozenset(lengths))

    def label(self) -> str:
        return "{" + ",".join(["K2"] + [f"C{k}" for k in sorted(self.cycle_lengths)]) + "}"


K2_ONLY = HFamily(frozenset())
K2_C5 = HFamily(frozenset({5}))


class Component(NamedTuple):
    kind: str  # "K2" or "C<k>"
    vertices: tuple[int, ...]

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    @property
    def match(self) -> int:
        return 1 if self.kind == "K2" else len(self.vertices) // 2


@dataclass(frozen=True)
class HSubgraph:
    components: tuple[Component, ...] = ()

    @property
    def match(self) -> int:
        return sum(c.match for c in self.components)

    @property
    def vertex_mask(self) -> int:
        m = 0
        for c in self.components:
            m |= c.mask
        return m

    def to_json(self) -> list:
        return [[c.kind, list(c.vertices)] for c in self.components]


def _edge_component(u: int, v: int) -> Component:
    return Component("K2", (min(u, v), max(u, v)))


def _cycle_component(cycle: Sequence[int]) -> Component:
    return Component(f"C{len(cycle)}", tuple(cycle))


# -- cycles -----------------------------------------------------------------

def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Least rotation/reflection of a cyclic vertex sequence."""
    k = len(seq)
    i = seq.index(min(seq))
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    rev = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, rev)


def enumerate_cycles(g: Graph, lengths: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """All cycles of ``g`` (as subgraphs), each once, in canonical form.

    ``lengths`` restricts the output to cycles of those lengths.  Results are
    sorted by length, then lexicographically.
    """
    wanted = None if lengths is None else set(lengths)
    max_len = g.n if wanted is None else min(max(wanted, default=0), g.n)
    adj = g.adj
    out = []

    def dfs(start: int, path: list[int], used: int):
        last = path[-1]
        k = len(path)
        if k >= 3 and adj[last] >> start & 1 and path[1] < last:
            if wanted is None or k in wanted:
                out.append(tuple(path))
        if k == max_len:
            return
        for w in iter_bits(adj[last] & ~used & ~((2 << start) - 1)):
            path.append(w)
            dfs(start, path, used | 1 << w)
            path.pop()

    for s in range(g.n):
        dfs(s, [s], 1 << s)
    out.sort(key=lambda c: (len(c), c))
    return out


def is_chordless(g: Graph, cycle: Sequence[int]) -> bool:
    m = mask_of(cycle)
    return sum(popcount(g.adj[v] & m) for v in cycle) == 2 * len(cycle)


def _check_cycle(g: Graph, cycle: Sequence[int]):
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise ValueError(f"{list(cycle)} is not a list of at least 3 distinct vertices")
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"{list(cycle)} does not trace a cycle: {u}-{v} is not an edge")


def cycle_cover_bound_premise(g: Graph, cycle_vertices: Sequence[int]) -> bool:
    """Whether the vertices of the given cycle of ``g`` cover every edge."""
    _check_cycle(g, cycle_vertices)
    return is_vertex_cover(g, mask_of(cycle_vertices))


def _spanning_cycle(g: Graph, w: int) -> tuple[int, ...] | None:
    """A cycle through every vertex of ``w`` using edges of ``g``, if any."""
    adj = g.adj
    if any(popcount(adj[v] & w) < 2 for v in iter_bits(w)):
        return None
    start = (w & -w).bit_length() - 1
    size = popcount(w)
    path = [start]

    def dfs(last: int, used: int):
        if len(path) == size:
            return adj[last] >> start & 1
        for nxt in iter_bits(adj[last] & w & ~used):
            path.append(nxt)
            if dfs(nxt, used | 1 << nxt):
                return True
            path.pop()
        return False

    return canonical_cycle(path) if dfs(start, 1 << start) else None


def shortest_covering_cycle(g: Graph) -> tuple[int, ...] | None:
    """A shortest cycle of ``g`` whose vertex set is a vertex cover, or ``None``."""
    if g.n < 3:
        return None
    for w in sorted(range(1 << g.n), key=lambda m: (popcount(m), m)):
        if popcount(w) < 3 or not is_vertex_cover(g, w):
            continue
        cyc = _spanning_cycle(g, w)
        if cyc is not None:
            return cyc
    return None


# -- classical matching numbers ---------------------------------------------

def matching_number(g: Graph) -> int:
    adj = g.adj
    best = 0

    def search(avail: int, size: int):
        nonlocal best
        live = 0
        for v in iter_bits(avail):
            if adj[v] & avail:
                live |= 1 << v
        if size + popcount(live) // 2 <= best:
            return
        if not live:
            best = size
            return
        v = (live & -live).bit_length() - 1
        for u in iter_bits(adj[v] & live):
            search(live & ~(1 << v | 1 << u), size + 1)
        search(live & ~(1 << v), size)

    search(g.vertex_mask, 0)
    return best


def induced_matching_number(g: Graph) -> int:
    """Largest set of edges no two of which are joined by an edge of ``g``."""
    adj = g.adj
    best = 0

    def search(avail: int, size: int):
        nonlocal best
        live = 0
        for v in iter_bits(avail):
            if adj[v] & avail:
                live |= 1 << v
        if size + popcount(live) // 2 <= best:
            return
        if not live:
            best = size
            return
        v = (live & -live).bit_length() - 1
        for u in iter_bits(adj[v] & live):
            search(live & ~(adj[v] | adj[u]), size + 1)
        search(live & ~(1 << v), size)

    search(g.vertex_mask, 0)
    return best


def min_maximal_matching(g: Graph) -> int:
    """Fewest edges in a matching that meets every edge of ``g``."""
    adj = g.adj
    best = g.n // 2 + 1

    def search(used: int, blocked: int, size: int):
        nonlocal best
        if size >= best:
            return
        for u in range(g.n):
            if used >> u & 1:
                continue
            free_nbrs = adj[u] & ~used
            if free_nbrs:
                break
        else:
            best = size
            return
        v = (free_nbrs & -free_nbrs).bit_length() - 1
        # the edge uv is uncovered: match u, or leave u unmatched and match v
        if not blocked >> u & 1:
            for w in iter_bits(adj[u] & ~used & ~blocked):
                search(used | 1 << u | 1 << w, blocked, size + 1)
        if not blocked >> v & 1:
            for w in iter_bits(adj[v] & ~used & ~blocked & ~(1 << u)):
                search(used | 1 << v | 1 << w, blocked | 1 << u, size + 1)

    search(0, 0, 0)
    return best if g.num_edges else 0


# -- H-matching numbers -----------------------------------------------------

def _induced_candidates(g: Graph, family: HFamily) -> list[list[Component]]:
    """Per vertex, the components that contain it: edges and chordless cycles."""
    by_vertex: list[list[Component]] = [[] for _ in range(g.n)]
    for u, v in g.edges():
        c = _edge_component(u, v)
        by_vertex[u].append(c)
        by_vertex[v].append(c)
    if family.cycle_lengths:
        for cyc in enumerate_cycles(g, family.cycle_lengths):
            if is_chordless(g, cyc):
                c = _cycle_component(cyc)
                for v in cyc:
                    by_vertex[v].append(c)
    return by_vertex


def ind_match_H_witness(g: Graph, family: HFamily = K2_C5) -> tuple[int, HSubgraph]:
    """Largest matching number of an induced H-subgraph, with a witness.

    Chosen components must be pairwise disjoint and joined by no edge, and
    every cycle must be chordless; together that makes their union induced.
    """
    adj = g.adj
    by_vertex = _induced_candidates(g, family)
    best = 0
    best_pick: list[Component] = []
    pick: list[Component] = []

    def search(avail: int, size: int):
        nonlocal best, best_pick
        live = 0
        for v in iter_bits(avail):
            if adj[v] & avail:
                live |= 1 << v
        # every component spends at least two vertices per unit of match
        if size + popcount(live) // 2 <= best:
            return
        if not live:
            best, best_pick = size, list(pick)
            return
        v = (live & -live).bit_length() - 1
        for c in by_vertex[v]:
            cm = c.mask
            if cm & ~live:
                continue
            pick.append(c)
            search(live & ~neighborhood_of_set(g, cm), size + c.match)
            pick.pop()
        search(live & ~(1 << v), size)

    search(g.vertex_mask, 0)
    return best, HSubgraph(tuple(sorted(best_pick, key=lambda c: c.vertices)))


def ind_match_H(g: Graph, family: HFamily = K2_C5) -> int:
    return ind_match_H_witness(g, family)[0]


def _subgraph_candidates(g: Graph, family: HFamily) -> list[list[Component]]:
    by_vertex: list[list[Component]] = [[] for _ in range(g.n)]
    for u, v in g.edges():
        c = _edge_component(u, v)
        by_vertex[u].append(c)
        by_vertex[v].append(c)
    if family.cycle_lengths:
        for cyc in enumerate_cycles(g, family.cycle_lengths):
            c = _cycle_component(cyc)
            for v in cyc:
                by_vertex[v].append(c)
    return by_vertex


def min_match_H_witness(g: Graph, family: HFamily = K2_C5) -> tuple[int, HSubgraph]:
    """Smallest matching number of a maximal H-subgraph, with a witness.

    Since K2 belongs to the family, an H-subgraph is maximal exactly when
    its vertex set is a vertex cover.  Cycles here need not be chordless.
    """
    if not g.num_edges:
        return 0, HSubgraph()
    adj = g.adj
    by_vertex = _subgraph_candidates(g, family)
    # most edges of a matching one unit of match can cover
    ratio = max([2] + [k / (k // 2) for k in family.cycle_lengths])
    best = g.n + 1
    best_pick: list[Component] = []
    pick: list[Component] = []

    def uncovered_matching(used: int) -> tuple[int, int, int]:
        """Greedy matching size among uncovered edges, and one uncovered edge."""
        free = ~used & g.vertex_mask
        size = 0
        first = None
        seen = 0
        for u in iter_bits(free):
            if seen >> u & 1:
                continue
            nb = adj[u] & free & ~seen
            if nb:
                w = (nb & -nb).bit_length() - 1
                if first is None:
                    first = (u, w)
                seen |= 1 << u | 1 << w
                size += 1
        if first is None:
            return 0, -1, -1
        return size, first[0], first[1]

    def search(used: int, blocked: int, size: int):
        nonlocal best, best_pick
        m, u, v = uncovered_matching(used)
        if m == 0:
            if size < best:
                best, best_pick = size, list(pick)
            return
        if size + -(-m // ratio) >= best:
            return
        # the edge uv is uncovered: put u in a component, or bar u and use v
        for x, bar in ((u, 0), (v, 1 << u)):
            if blocked >> x & 1:
                continue
            for c in by_vertex[x]:
                cm = c.mask
                if cm & (used | blocked | bar):
                    continue
                pick.append(c)
                search(used | cm, blocked | bar, size + c.match)
                pick.pop()

    search(0, 0, 0)
    return best, HSubgraph(tuple(sorted(best_pick, key=lambda c: c.vertices)))


def min_match_H(g: Graph, family: HFamily = K2_C5) -> int:
    return min_match_H_witness(g, family)[0]


# -- witness validation -----------------------------------------------------

def validate_h_subgraph(g: Graph, s: HSubgraph, family: HFamily | None = None):
    """Raise ``ValueError`` unless ``s`` is an H-subgraph of ``g``."""
    seen = 0
    for c in s.components:
        if c.mask & seen:
            raise ValueError(f"component {c} overlaps an earlier component")
        seen |= c.mask
        if c.kind == "K2":
            if len(c.vertices) != 2 or not g.has_edge(*c.vertices):
                raise ValueError(f"{c} is not an edge of the graph")
        else:
            if c.kind != f"C{len(c.vertices)}":
                raise ValueError(f"{c} has a kind that does not match its length")
            _check_cycle(g, c.vertices)
            if family is not None and len(c.vertices) not in family.cycle_lengths:
                raise ValueError(f"{c} is not a member of the family {family.label()}")


def h_subgraph_edges(s: HSubgraph) -> set[tuple[int, int]]:
    out = set()
    for c in s.components:
        vs = c.vertices
        if c.kind == "K2":
            out.add((min(vs), max(vs)))
        else:
            for i in range(len(vs)):
                a, b = vs[i], vs[(i + 1) % len(vs)]
                out.add((min(a, b), max(a, b)))
    return out


def is_induced_h_subgraph(g: Graph, s: HSubgraph) -> bool:
    validate_h_subgraph(g, s)
    m = s.vertex_mask
    inside = {(u, v) for u, v in g.edges() if m >> u & 1 and m >> v & 1}
    return inside == h_subgraph_edges(s)


def is_maximal_H_subgraph(g: Graph, s: HSubgraph) -> bool:
    """True iff no edge of ``g`` avoids the vertices of ``s``."""
    validate_h_subgraph(g, s)
    return is_vertex_cover(g, s.vertex_mask)

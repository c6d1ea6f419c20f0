"""Simple undirected graphs on at most 32 vertices.

Vertex sets are plain ``int`` bitmasks (bit ``i`` set means vertex ``i`` is
in the set) so every set operation is a word operation.  A :class:`Graph`
stores one neighbourhood mask per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"graph must have between 0 and {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency list length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbour outside range({self.n})")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def has_edge_within(self, w: int) -> bool:
        """True if some edge has both endpoints in ``w``."""
        return any(self.adj[v] & w for v in iter_bits(w))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def paw_graph() -> Graph:
    # v=0, x=1, y=2, z=3; edges xy, yz, xz, vx
    return Graph.from_edges(4, [(1, 2), (2, 3), (1, 3), (0, 1)])


# -- elementary operations --------------------------------------------------

def induced_subgraph(g: Graph, w: int) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``w``, relabelled ``0..|w|-1`` in increasing order.

    Returns the graph and the relabelling map ``new index -> old index``.
    """
    old = list(iter_bits(w & g.vertex_mask))
    pos = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in iter_bits(g.adj[v] & w):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(old), tuple(adj)), old


def delete_vertices(g: Graph, u: int) -> Graph:
    return induced_subgraph(g, g.vertex_mask & ~u)[0]


def closed_neighborhood(g: Graph, v: int) -> int:
    return g.adj[v] | 1 << v


def neighborhood_of_set(g: Graph, s: int) -> int:
    """Closed neighbourhood of a vertex set."""
    out = s
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the components, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_independent(g: Graph, a: int) -> bool:
    return not any(g.adj[v] & a for v in iter_bits(a))


def is_vertex_cover(g: Graph, c: int) -> bool:
    return is_independent(g, g.vertex_mask & ~c)


def isolated_vertices(g: Graph) -> int:
    return mask_of(v for v in range(g.n) if not g.adj[v])


def independence_number(g: Graph) -> int:
    """Size of a largest independent set (exact branch and bound)."""
    adj = g.adj

    def solve(cand: int) -> int:
        # vertices of degree <= 1 inside cand are always safe to take
        best = 0
        while cand:
            for v in iter_bits(cand):
                if popcount(adj[v] & cand) <= 1:
                    best += 1
                    cand &= ~(adj[v] | 1 << v)
                    break
            else:
                break
        if not cand:
            return best
        v = max(iter_bits(cand), key=lambda x: popcount(adj[x] & cand))
        with_v = 1 + solve(cand & ~(adj[v] | 1 << v))
        if with_v >= popcount(cand):
            return best + with_v
        return best + max(with_v, solve(cand & ~(1 << v)))

    return solve(g.vertex_mask)


def maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets, sorted by mask value."""
    adj = g.adj
    out: list[int] = []

    def extend(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: popcount(p & (adj[u] | 1 << u)))
        # a maximal set containing r holds the pivot or one of its neighbours
        for v in iter_bits(p & (adj[pivot] | 1 << pivot)):
            closed = adj[v] | 1 << v
            extend(r | 1 << v, p & ~closed, x & ~closed)
            p &= ~(1 << v)
            x |= 1 << v

    extend(0, g.vertex_mask, 0)
    return sorted(out)


def is_unmixed(g: Graph) -> bool:
    sizes = {popcount(s) for s in maximal_independent_sets(g)}
    return len(sizes) <= 1


def add_whiskers(g: Graph) -> Graph:
    """Attach a pendant vertex ``n + i`` to every vertex ``i``."""
    n = g.n
    return Graph.from_edges(2 * n, g.edges() + [(i, n + i) for i in range(n)])


def disjoint_union(g1: Graph, *rest: Graph) -> Graph:
    adj = list(g1.adj)
    for g in rest:
        shift = len(adj)
        adj.extend(row << shift for row in g.adj)
    return Graph(len(adj), tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))

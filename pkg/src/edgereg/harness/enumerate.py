"""Canonical forms and isomorphism-free enumeration of small graphs.

The canonical form of a graph is the lexicographically least upper-triangle
adjacency string (graph6 column order) over all vertex orderings.  It is
found by a level-wise search: the string is the concatenation of one column
per position, so only orderings that keep the prefix minimal survive each
level.  Vertices with equal neighbourhoods apart from each other are
interchangeable by an automorphism, so only one of them is branched on.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

from edgereg.graph import Graph, iter_bits, relabel

MAX_ENUMERATE_N = 8


def _twin_classes(g: Graph) -> list[int]:
    """``rep[v]`` is the smallest vertex interchangeable with ``v``."""
    rep = list(range(g.n))
    for v in range(g.n):
        for u in range(v):
            if rep[u] == u and g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                rep[v] = u
                break
    return rep


def canonical_order(g: Graph) -> tuple[tuple[int, ...], int]:
    """A vertex ordering achieving the least adjacency string, and that string as an int."""
    n = g.n
    adj = g.adj
    rep = _twin_classes(g)
    states: list[tuple[tuple[int, ...], int]] = [((), 0)]
    key = 0
    for j in range(n):
        best_col = None
        nxt: list[tuple[tuple[int, ...], int]] = []
        for order, placed in states:
            tried = set()
            for v in range(n):
                if placed >> v & 1 or rep[v] in tried:
                    continue
                tried.add(rep[v])
                row = adj[v]
                col = 0
                for u in order:
                    col = col << 1 | (row >> u & 1)
                if best_col is None or col < best_col:
                    best_col = col
                    nxt = [(order + (v,), placed | 1 << v)]
                elif col == best_col:
                    nxt.append((order + (v,), placed | 1 << v))
        states = nxt
        key = key << j | best_col
    return states[0][0], key


def canonical_key(g: Graph) -> int:
    return canonical_order(g)[1]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)[0]
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return relabel(g, perm)


def canonical_key_bruteforce(g: Graph) -> int:
    """The same key by scanning every permutation."""
    best = None
    for order in permutations(range(g.n)):
        key = 0
        for j in range(1, g.n):
            row = g.adj[order[j]]
            for i in range(j):
                key = key << 1 | (row >> order[i] & 1)
        if best is None or key < best:
            best = key
    return 0 if best is None else best


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[int, Graph] = {}
    full = (1 << (n - 1)) - 1
    for parent in _graphs_on(n - 1):
        for nbrs in range(full + 1):
            adj = list(parent.adj) + [nbrs]
            for u in iter_bits(nbrs):
                adj[u] |= 1 << (n - 1)
            g = Graph(n, tuple(adj))
            order, key = canonical_order(g)
            if key not in seen:
                perm = [0] * n
                for pos, v in enumerate(order):
                    perm[v] = pos
                seen[key] = relabel(g, perm)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on exactly ``n`` vertices."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > MAX_ENUMERATE_N:
        raise ValueError(f"the built-in enumerator stops at n={MAX_ENUMERATE_N}; "
                         "generate larger graphs externally (e.g. with nauty's geng) and pass a graph6 file")
    yield from _graphs_on(n)


def enumerate_graphs_upto(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n)

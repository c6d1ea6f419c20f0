"""graph6 (short form, n <= 62) and edge-list readers and writers."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from edgereg.graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("only the short graph6 form (n <= 62) is supported")
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the printable range 63..126", pos)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, found {len(body)}",
                          1 + min(len(body), need))
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> (5 - t) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_edge_lists(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs written as ``n m`` followed by ``m`` lines ``u v`` (0-based).

    Several graphs may follow each other; blank lines and ``#`` comments are
    skipped.
    """
    tokens: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if text:
            tokens.append((lineno, text.split()))
    k = 0
    while k < len(tokens):
        lineno, head = tokens[k]
        if len(head) != 2:
            raise ValueError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}")
        n, m = int(head[0]), int(head[1])
        if k + m >= len(tokens):
            raise ValueError(f"line {lineno}: header promises {m} edges but the input ends early")
        edges = []
        for lineno_e, pair in tokens[k + 1:k + 1 + m]:
            if len(pair) != 2:
                raise ValueError(f"line {lineno_e}: expected 'u v', got {' '.join(pair)!r}")
            u, v = int(pair[0]), int(pair[1])
            if (u, v) in edges or (v, u) in edges:
                raise ValueError(f"line {lineno_e}: repeated edge {u} {v}")
            edges.append((u, v))
        try:
            yield Graph.from_edges(n, edges)
        except ValueError as exc:
            raise ValueError(f"graph starting at line {lineno}: {exc}") from None
        k += 1 + m

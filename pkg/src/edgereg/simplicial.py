"""Simplicial complexes stored by their facets.

Faces are vertex bitmasks.  The *void* complex has no faces at all; the
*empty* complex has exactly one face, the empty set.  They behave
differently under homology and the distinction is kept explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from edgereg.graph import Graph, iter_bits, mask_of, maximal_independent_sets, popcount


def _antichain(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError(f"facet {list(iter_bits(f))} uses a vertex outside range({self.n})")
        object.__setattr__(self, "facets", _antichain(self.facets))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Sequence[int]]) -> SimplicialComplex:
        return cls(n, tuple(mask_of(f) for f in facets))

    @classmethod
    def void(cls, n: int = 0) -> SimplicialComplex:
        return cls(n, ())

    @classmethod
    def empty(cls, n: int = 0) -> SimplicialComplex:
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, ((1 << n) - 1,))

    @classmethod
    def boundary_of_simplex(cls, n: int) -> SimplicialComplex:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def vertices(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def dim(self) -> int:
        """Dimension; ``-1`` for the empty complex.  Void complexes are rejected."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    @property
    def krull_dim(self) -> int:
        return self.dim + 1

    @property
    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    @cached_property
    def faces(self) -> tuple[int, ...]:
        """All faces, sorted by size then mask value."""
        out: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                out.add(sub)
                if not sub:
                    break
                sub = (sub - 1) & f
        return tuple(sorted(out, key=lambda m: (popcount(m), m)))

    @cached_property
    def face_set(self) -> frozenset[int]:
        return frozenset(self.faces)

    def __contains__(self, face: int) -> bool:
        return face in self.face_set

    def facet_lists(self) -> list[list[int]]:
        return [list(iter_bits(f)) for f in self.facets]

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={self.facet_lists()})"


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, tuple(maximal_independent_sets(g)))


def _check_vertex(c: SimplicialComplex, v: int):
    if not 0 <= v < c.n:
        raise ValueError(f"vertex {v} outside range({c.n})")


def link(c: SimplicialComplex, v: int) -> SimplicialComplex:
    _check_vertex(c, v)
    return link_of_face(c, 1 << v)


def link_of_face(c: SimplicialComplex, face: int) -> SimplicialComplex:
    """``{G : G and face disjoint, G | face in c}``; void if ``face`` is not a face."""
    return SimplicialComplex(c.n, tuple(f & ~face for f in c.facets if f & face == face))


def deletion(c: SimplicialComplex, v: int) -> SimplicialComplex:
    _check_vertex(c, v)
    return SimplicialComplex(c.n, tuple(f & ~(1 << v) for f in c.facets))


def restriction(c: SimplicialComplex, w: int) -> SimplicialComplex:
    """Induced subcomplex on the vertex set ``w``."""
    if c.is_void:
        return c
    return SimplicialComplex(c.n, tuple(f & w for f in c.facets))


def join(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    """Join, with the vertices of ``c2`` shifted past those of ``c1``."""
    shift = c1.n
    return SimplicialComplex(c1.n + c2.n, tuple(f1 | f2 << shift for f1 in c1.facets for f2 in c2.facets))


def core(c: SimplicialComplex) -> tuple[SimplicialComplex, int]:
    """Restriction to the vertices lying outside some facet, and the cone points removed."""
    if c.is_void:
        return c, 0
    cone = c.vertices
    for f in c.facets:
        cone &= f
    return restriction(c, c.vertices & ~cone), cone


# -- face numbers -----------------------------------------------------------

def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """``(f_0, ..., f_{d-1})``; ``f_{-1} = 1`` is left implicit."""
    if c.is_void:
        raise ValueError("the f-vector of the void complex is undefined")
    counts = [0] * (c.dim + 2)
    for face in c.faces:
        counts[popcount(face)] += 1
    return tuple(counts[1:])


def h_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """Coefficients of ``sum_i f_{i-1} (t-1)^(d-i)`` read from ``t^d`` downwards."""
    f = (1,) + f_vector(c)
    d = len(f) - 1
    poly = [0] * (d + 1)  # poly[k] is the coefficient of t^(d-k)
    for i, fi in enumerate(f):
        e = d - i
        for j in range(e + 1):
            poly[i + j] += fi * comb(e, j) * (-1) ** j
    return tuple(poly)


@dataclass(frozen=True)
class HilbertNumerator:
    """``(c_0 + c_1 z + ... + c_d z^d) / (1 - z)^d``."""

    coefficients: tuple[int, ...]
    d: int

    def series(self, upto: int) -> list[int]:
        """Power-series coefficients of the rational function through ``z^upto``."""
        if self.d == 0:
            denom = [1] + [0] * upto
        else:
            denom = [comb(t + self.d - 1, self.d - 1) for t in range(upto + 1)]
        out = [0] * (upto + 1)
        for i, ci in enumerate(self.coefficients):
            for t in range(i, upto + 1):
                out[t] += ci * denom[t - i]
        return out

    def __str__(self):
        terms = []
        for i, ci in enumerate(self.coefficients):
            if ci:
                coef = "" if ci == 1 and i else str(ci)
                terms.append(coef if i == 0 else f"{coef}z" if i == 1 else f"{coef}z^{i}")
        num = " + ".join(terms) or "0"
        return f"({num})/(1-z)^{self.d}"


def hilbert_numerator(c: SimplicialComplex) -> HilbertNumerator:
    h = h_vector(c)
    return HilbertNumerator(h, len(h) - 1)


def hilbert_function(c: SimplicialComplex, degree: int) -> int:
    """Number of degree-``degree`` monomials whose support is a face.

    A face with ``k >= 1`` vertices supports ``comb(degree - 1, k - 1)``
    monomials of that degree with exactly that support.
    """
    if degree == 0:
        return 1
    return sum(comb(degree - 1, popcount(f) - 1) for f in c.faces if f)


def hilbert_function_bruteforce(c: SimplicialComplex, degree: int) -> int:
    """Same count by listing every monomial on ``c.n`` variables; small inputs only."""
    faces = c.face_set
    count = 0
    for mono in combinations_with_replacement(range(c.n), degree):
        if mask_of(mono) in faces:
            count += 1
    return count

"""Reduced simplicial homology over a prime field and the ring-theoretic
invariants of Stanley-Reisner rings computed from it.

* Betti numbers and regularity by Hochster's formula
  ``beta_{i,j} = sum_{|W| = j} dim H~_{j-i-1}(Delta|_W)``.
* Cohen-Macaulayness by Reisner's criterion.
* Gorenstein property by Stanley's criterion on the core.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from edgereg.graph import iter_bits, popcount
from edgereg.simplicial import SimplicialComplex, core, deletion


@dataclass(frozen=True)
class PrimeField:
    p: int = 2

    def __post_init__(self):
        p = self.p
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")

    def __str__(self):
        return f"F{self.p}"


F2 = PrimeField(2)


def as_field(f: PrimeField | int | None) -> PrimeField:
    if f is None:
        return F2
    if isinstance(f, PrimeField):
        return f
    return PrimeField(int(f))


# -- linear algebra ---------------------------------------------------------

def rank_gf2(rows: Sequence[int]) -> int:
    """Rank over F2 of a matrix whose rows are packed into ints."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            pivot = basis.get(top)
            if pivot is None:
                basis[top] = row
                break
            row ^= pivot
    return len(basis)


def rank_mod_p(rows: Sequence[dict[int, int]], p: int) -> int:
    """Rank over F_p of a sparse matrix given as ``{column: entry}`` rows."""
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], p - 2, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                r += 1
                break
            factor = row[col]
            for c, v in piv.items():
                nv = (row.get(c, 0) - factor * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return r


# -- chain complexes --------------------------------------------------------

def _group_by_size(faces) -> list[list[int]]:
    by_size: list[list[int]] = []
    for f in faces:
        k = popcount(f)
        while len(by_size) <= k:
            by_size.append([])
        by_size[k].append(f)
    return by_size


def boundary_ranks(by_size: list[list[int]], p: int) -> list[int]:
    """``ranks[k]`` is the rank of the boundary map from size-``k`` faces to size-``k-1`` faces."""
    ranks = [0] * (len(by_size) + 1)
    for k in range(1, len(by_size)):
        index = {f: i for i, f in enumerate(by_size[k - 1])}
        if p == 2:
            rows = []
            for f in by_size[k]:
                row = 0
                for v in iter_bits(f):
                    row |= 1 << index[f ^ (1 << v)]
                rows.append(row)
            ranks[k] = rank_gf2(rows)
        else:
            rows = []
            for f in by_size[k]:
                row = {}
                for sign_pos, v in enumerate(iter_bits(f)):
                    row[index[f ^ (1 << v)]] = -1 if sign_pos & 1 else 1
                rows.append(row)
            ranks[k] = rank_mod_p(rows, p)
    return ranks


def _homology_from_faces(faces, p: int) -> list[int]:
    by_size = _group_by_size(faces)
    if not by_size:
        return []
    ranks = boundary_ranks(by_size, p)
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(len(by_size))]


def boundary_matrix(c: SimplicialComplex, size: int, field: PrimeField | int | None = None) -> list[list[int]]:
    """Dense boundary matrix from faces with ``size`` vertices to faces with ``size - 1``.

    Rows index the smaller faces, columns the larger ones, both in the order
    of ``c.faces``.
    """
    p = as_field(field).p
    by_size = _group_by_size(c.faces)
    src = by_size[size] if size < len(by_size) else []
    dst = by_size[size - 1] if 0 < size <= len(by_size) else []
    index = {f: i for i, f in enumerate(dst)}
    mat = [[0] * len(src) for _ in dst]
    for j, f in enumerate(src):
        for pos, v in enumerate(iter_bits(f)):
            mat[index[f ^ (1 << v)]][j] = (-1) ** pos % p
    return mat


def reduced_homology_ranks(c: SimplicialComplex, field: PrimeField | int | None = None) -> list[int]:
    """Ranks of reduced homology, ``result[d + 1] = dim H~_d`` for ``-1 <= d <= dim c``."""
    if c.is_void:
        raise ValueError("reduced homology of the void complex is not used here")
    return _homology_from_faces(c.faces, as_field(field).p)


def _restricted_faces(faces: Sequence[int], w: int) -> list[int]:
    outside = ~w
    return [f for f in faces if not f & outside]


# -- Hochster's formula -----------------------------------------------------

def regularity(c: SimplicialComplex, field: PrimeField | int | None = None, stop_at: int | None = None) -> int:
    """Regularity of the Stanley-Reisner ring, ``max d + 1`` over nonzero ``H~_d(c|_W)``.

    The value never exceeds ``dim c + 1`` and the sweep stops once that is
    reached.  ``stop_at`` lowers the stopping point; the result is then only
    ``min(reg, stop_at)``, so leave it unset when checking upper bounds.
    """
    if c.is_void:
        raise ValueError("regularity of the void complex is undefined")
    p = as_field(field).p
    cap = c.dim + 1 if stop_at is None else min(stop_at, c.dim + 1)
    faces = c.faces
    best = 0
    # H~_d needs at least d + 2 vertices, so once |W| <= best + 1 nothing can improve
    for w in sorted(range(1 << c.n), key=lambda m: -popcount(m)):
        if popcount(w) <= best + 1:
            break
        sub = _restricted_faces(faces, w)
        ranks = _homology_from_faces(sub, p)
        for k in range(len(ranks) - 1, best, -1):
            if ranks[k]:
                best = k
                break
        if best >= cap:
            return cap
    return best


@dataclass(frozen=True)
class BettiTable:
    betti: dict[tuple[int, int], int]
    field: PrimeField = field(default=F2)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.betti.get(key, 0)

    @property
    def regularity(self) -> int:
        return max((j - i for (i, j), b in self.betti.items() if b), default=0)

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), b in self.betti.items() if b), default=0)

    def rows(self) -> list[list[int]]:
        """Macaulay2-style display: ``rows()[r][i] = beta_{i, i + r}``."""
        reg, pd = self.regularity, self.projective_dimension
        return [[self[i, i + r] for i in range(pd + 1)] for r in range(reg + 1)]


def betti_table(c: SimplicialComplex, field: PrimeField | int | None = None) -> BettiTable:
    f = as_field(field)
    if c.is_void:
        raise ValueError("Betti numbers of the void complex are undefined")
    faces = c.faces
    table: dict[tuple[int, int], int] = {}
    for w in range(1 << c.n):
        j = popcount(w)
        ranks = _homology_from_faces(_restricted_faces(faces, w), f.p)
        for k, r in enumerate(ranks):
            if r:
                # ranks[k] is H~_{k-1}, and k - 1 = j - i - 1
                key = (j - k, j)
                table[key] = table.get(key, 0) + r
    return BettiTable(dict(sorted(table.items())), f)


# -- Cohen-Macaulay, doubly Cohen-Macaulay, Gorenstein ----------------------

def _link_faces(faces: Sequence[int], face: int) -> list[int]:
    return [g ^ face for g in faces if g & face == face]


def is_cohen_macaulay(c: SimplicialComplex, field: PrimeField | int | None = None) -> bool:
    """Reisner: ``H~_i(lk F) = 0`` for every face ``F`` and every ``i < dim lk F``."""
    if c.is_void:
        raise ValueError("Cohen-Macaulayness of the void complex is undefined")
    if not c.is_pure:
        return False
    p = as_field(field).p
    d = c.dim
    faces = c.faces
    for face in faces:
        # links of dimension <= 0 are nonempty point sets in a pure complex
        if popcount(face) >= d:
            break
        ranks = _homology_from_faces(_link_faces(faces, face), p)
        if any(ranks[:-1]):
            return False
    return True


def is_doubly_cohen_macaulay(c: SimplicialComplex, field: PrimeField | int | None = None) -> bool:
    f = as_field(field)
    if not is_cohen_macaulay(c, f):
        return False
    d = c.dim
    for v in iter_bits(c.vertices):
        dv = deletion(c, v)
        if dv.dim != d or not is_cohen_macaulay(dv, f):
            return False
    return True


def is_homology_sphere(c: SimplicialComplex, field: PrimeField | int | None = None) -> bool:
    """Every link (the complex itself included) has the homology of a sphere of its dimension."""
    if c.is_void:
        return False
    p = as_field(field).p
    faces = c.faces
    for face in faces:
        ranks = _homology_from_faces(_link_faces(faces, face), p)
        if ranks[-1] != 1 or any(ranks[:-1]):
            return False
    return True


def is_gorenstein(c: SimplicialComplex, field: PrimeField | int | None = None) -> bool:
    """Stanley: ``c`` is Gorenstein iff its core is a homology sphere."""
    if c.is_void:
        raise ValueError("Gorenstein property of the void complex is undefined")
    return is_homology_sphere(core(c)[0], field)

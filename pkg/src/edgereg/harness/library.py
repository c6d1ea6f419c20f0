"""Hand-entered simplicial complexes with known Cohen-Macaulay, doubly
Cohen-Macaulay and Gorenstein status.

Labels are over F2.  ``field_overrides`` records the entries whose status
changes in odd characteristic (the 6-vertex real projective plane).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from edgereg.simplicial import SimplicialComplex


@dataclass(frozen=True)
class LibraryComplex:
    name: str
    complex: SimplicialComplex
    cm: bool
    cm2: bool
    gorenstein: bool
    field_overrides: dict[int, tuple[bool, bool, bool]] = field(default_factory=dict)

    def expected(self, p: int = 2) -> tuple[bool, bool, bool]:
        return self.field_overrides.get(p, (self.cm, self.cm2, self.gorenstein))


def _c(n, facets):
    return SimplicialComplex.from_facets(n, facets)


def _octahedron():
    return _c(6, [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)])


def _icosahedron():
    top, bottom = 0, 11
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        facets += [[top, up[i], up[j]], [bottom, lo[i], lo[j]],
                   [up[i], up[j], lo[i]], [up[j], lo[i], lo[j]]]
    return _c(12, facets)


def _suspended_pentagon():
    ring = [[i, (i + 1) % 5] for i in range(5)]
    return _c(7, [e + [5] for e in ring] + [e + [6] for e in ring])


def _rp2():
    # hemi-icosahedron, the minimal triangulation of the real projective plane
    facets = [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
              [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]]
    return _c(6, [[v - 1 for v in f] for f in facets])


def _mobius_torus():
    facets = []
    for i in range(7):
        facets.append([i, (i + 1) % 7, (i + 3) % 7])
        facets.append([i, (i + 2) % 7, (i + 3) % 7])
    return _c(7, facets)


def _cycle_complex(k):
    return _c(k, [[i, (i + 1) % k] for i in range(k)])


def _annulus():
    # band of six triangles between an outer and an inner 3-vertex ring
    outer, inner = [0, 1, 2], [3, 4, 5]
    facets = []
    for i in range(3):
        j = (i + 1) % 3
        facets += [[outer[i], outer[j], inner[i]], [outer[j], inner[i], inner[j]]]
    return _c(6, facets)


def library() -> list[LibraryComplex]:
    L = LibraryComplex
    return [
        L("empty complex", SimplicialComplex.empty(0), True, True, True),
        L("point", _c(1, [[0]]), True, False, True),
        L("two points (0-sphere)", _c(2, [[0], [1]]), True, True, True),
        L("three points", _c(3, [[0], [1], [2]]), True, True, False),
        L("edge", _c(2, [[0, 1]]), True, False, True),
        L("tetrahedron (full 3-simplex)", SimplicialComplex.simplex(4), True, False, True),
        L("triangle boundary (circle)", SimplicialComplex.boundary_of_simplex(3), True, True, True),
        L("square (circle)", _cycle_complex(4), True, True, True),
        L("pentagon (circle)", _cycle_complex(5), True, True, True),
        L("tetrahedron boundary (2-sphere)", SimplicialComplex.boundary_of_simplex(4), True, True, True),
        L("octahedron boundary (2-sphere)", _octahedron(), True, True, True),
        L("icosahedron boundary (2-sphere)", _icosahedron(), True, True, True),
        L("suspended pentagon (2-sphere)", _suspended_pentagon(), True, True, True),
        L("3-sphere: square join triangle boundary",
          _c(7, [[a, (a + 1) % 4, 4 + b, 4 + (b + 1) % 3] for a in range(4) for b in range(3)]),
          True, True, True),
        L("complete graph K4 as a 1-complex", _c(4, [[i, j] for i in range(4) for j in range(i + 1, 4)]),
          True, True, False),
        L("2-skeleton of the 4-simplex",
          _c(5, [[i, j, k] for i in range(5) for j in range(i + 1, 5) for k in range(j + 1, 5)]),
          True, True, False),
        L("pentagon with a chord as a 1-complex", _c(5, [[i, (i + 1) % 5] for i in range(5)] + [[0, 2]]),
          True, True, False),
        L("path with three edges", _c(4, [[0, 1], [1, 2], [2, 3]]), True, False, False),
        L("path with two edges (cone over 0-sphere)", _c(3, [[0, 1], [1, 2]]), True, False, True),
        L("two triangles sharing an edge (edge join 0-sphere)", _c(4, [[0, 1, 2], [1, 2, 3]]), True, False, True),
        L("subdivided triangle (cone over a circle)", _c(4, [[0, 1, 3], [1, 2, 3], [0, 2, 3]]), True, False, True),
        L("cone over a pentagon", _c(6, [[i, (i + 1) % 5, 5] for i in range(5)]), True, False, True),
        # non-Cohen-Macaulay controls
        L("two disjoint edges", _c(4, [[0, 1], [2, 3]]), False, False, False),
        L("triangle with a dangling edge (not pure)", _c(4, [[0, 1, 2], [2, 3]]), False, False, False),
        L("bowtie (two triangles at a vertex)", _c(5, [[0, 1, 2], [0, 3, 4]]), False, False, False),
        L("two disjoint triangles", _c(6, [[0, 1, 2], [3, 4, 5]]), False, False, False),
        L("Moebius strip", _c(5, [[i, (i + 1) % 5, (i + 2) % 5] for i in range(5)]), False, False, False),
        L("annulus", _annulus(), False, False, False),
        L("7-vertex torus", _mobius_torus(), False, False, False),
        L("6-vertex real projective plane", _rp2(), False, False, False,
          field_overrides={3: (True, False, False), 5: (True, False, False)}),
    ]

import pytest
from hypothesis import given

import oracles as o
from conftest import graphs
from edgereg.graph import complete_graph, cycle_graph, disjoint_union, empty_graph, iter_bits
from edgereg.harness.library import library
from edgereg.simplicial import (
    SimplicialComplex,
    core,
    deletion,
    f_vector,
    h_vector,
    hilbert_function,
    hilbert_function_bruteforce,
    hilbert_numerator,
    independence_complex,
    join,
    link,
    link_of_face,
    restriction,
)

S = SimplicialComplex
C5 = cycle_graph(5)


def test_normalisation():
    c = S.from_facets(4, [[0, 1], [0], [1, 2], [0, 1]])
    assert c.facet_lists() == [[0, 1], [1, 2]]
    with pytest.raises(ValueError):
        S.from_facets(2, [[0, 2]])


def test_void_versus_empty():
    assert S.void().is_void
    assert not S.empty().is_void
    assert S.empty().dim == -1
    assert S.empty().faces == (0,)
    with pytest.raises(ValueError):
        S.void().dim


def test_faces_and_dims():
    tri = S.simplex(3)
    assert len(tri.faces) == 8
    assert tri.dim == 2 and tri.krull_dim == 3
    assert not S.from_facets(3, [[0, 1], [2]]).is_pure
    assert 0b011 in tri


def test_independence_complex_examples():
    assert sorted(independence_complex(C5).facet_lists()) == [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
    assert independence_complex(complete_graph(4)).facet_lists() == [[0], [1], [2], [3]]
    assert independence_complex(empty_graph(3)) == S.simplex(3)
    assert independence_complex(empty_graph(0)) == S.empty(0)


def test_link_deletion_restriction():
    assert link(S.boundary_of_simplex(3), 0).facet_lists() == [[1], [2]]
    assert deletion(S.simplex(4), 3).facet_lists() == [[0, 1, 2]]
    assert link(independence_complex(C5), 0).facet_lists() == [[2], [3]]
    assert link_of_face(S.simplex(3), 0b011).facet_lists() == [[2]]
    assert restriction(independence_complex(C5), 0b00111).facet_lists() == [[1], [0, 2]]
    with pytest.raises(ValueError):
        link(independence_complex(C5), 7)


def test_join():
    pt = S.simplex(1)
    assert join(pt, pt).facet_lists() == [[0, 1]]
    c = independence_complex(C5)
    assert join(c, S.empty(0)) == c
    assert join(c, S.void(0)).is_void


def test_core():
    cone = S.from_facets(3, [[0, 2], [1, 2]])
    cc, cone_mask = core(cone)
    assert cone_mask == 0b100
    assert cc.facet_lists() == [[0], [1]]
    assert core(S.simplex(3))[0] == S.empty(3)


def test_vectors_spot_values():
    assert f_vector(S.simplex(3)) == (3, 3, 1)
    assert f_vector(independence_complex(C5)) == (5, 5)
    assert f_vector(S.simplex(1)) == (1,)
    assert h_vector(independence_complex(C5)) == (1, 3, 1)
    assert h_vector(S.simplex(4)) == (1, 0, 0, 0, 0)
    assert h_vector(independence_complex(complete_graph(3))) == (1, 2)
    assert h_vector(S.empty()) == (1,)


def test_hilbert_numerator_spot_values():
    num = hilbert_numerator(independence_complex(C5))
    assert (num.coefficients, num.d) == ((1, 3, 1), 2)
    assert str(num) == "(1 + 3z + z^2)/(1-z)^2"
    assert hilbert_numerator(S.simplex(3)).series(3) == [1, 3, 6, 10]
    k2 = hilbert_numerator(independence_complex(complete_graph(2)))
    assert (k2.coefficients, k2.d) == ((1, 1), 1)
    assert k2.series(4) == [1, 2, 2, 2, 2]


@given(graphs(max_n=6), graphs(max_n=4))
def test_join_matches_disjoint_union(a, b):
    assert independence_complex(disjoint_union(a, b)) == join(independence_complex(a), independence_complex(b))


@given(graphs(max_n=7))
def test_faces_match_oracle(g):
    ours = {frozenset(iter_bits(f)) for f in independence_complex(g).faces}
    assert ours == set(o.independent_sets(o.to_nx(g)))


@given(graphs(max_n=6))
def test_hilbert_three_ways(g):
    c = independence_complex(g)
    upto = 2 * c.krull_dim + 1
    series = hilbert_numerator(c).series(upto)
    assert series == [hilbert_function(c, t) for t in range(upto + 1)]
    faces = [frozenset(iter_bits(f)) for f in c.faces]
    assert series == o.standard_monomial_counts(c.n, faces, upto)
    assert series == o.monomial_counts_dp(c.n, faces, upto)


def test_hilbert_bruteforce_library():
    for entry in library():
        c = entry.complex
        if c.n > 7:
            continue
        d = c.krull_dim
        series = hilbert_numerator(c).series(2 * d)
        assert series == [hilbert_function_bruteforce(c, t) for t in range(2 * d + 1)], entry.name


def test_f_vector_sums_to_face_count():
    for entry in library():
        assert sum(f_vector(entry.complex)) + 1 == len(entry.complex.faces)


def _vector_identities(c):
    f, h = f_vector(c), h_vector(c)
    d = c.krull_dim
    assert sum(h) == (f[-1] if f else 1)
    if d >= 1:
        assert h[1] == f[0] - d


@given(graphs(max_n=8))
def test_h_vector_identities(g):
    _vector_identities(independence_complex(g))


def test_h_vector_identities_library():
    for entry in library():
        if entry.complex.n:
            _vector_identities(entry.complex)


def test_dimension_is_alpha_minus_one():
    from edgereg.graph import independence_number
    from edgereg.harness.enumerate import enumerate_graphs_upto
    for g in enumerate_graphs_upto(7):
        assert independence_complex(g).dim == independence_number(g) - 1


def _relabel_complex(c, perm):
    return SimplicialComplex.from_facets(c.n, [[perm[v] for v in iter_bits(f)] for f in c.facets])


@given(graphs(max_n=3), graphs(max_n=3), graphs(max_n=3))
def test_join_algebra(a, b, c):
    x, y, z = (independence_complex(t) for t in (a, b, c))
    assert join(join(x, y), z) == join(x, join(y, z))
    # commutativity: move the block of y in front of x
    perm = list(range(y.n, y.n + x.n)) + list(range(y.n))
    assert _relabel_complex(join(x, y), perm) == join(y, x)
    assert join(x, y).dim == x.dim + y.dim + 1

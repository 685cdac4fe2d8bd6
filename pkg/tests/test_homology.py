import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balanced_betti import GF2, QQ, FieldSpec, boundary_matrix, from_facets, matrix_rank, reduced_homology_dims
from balanced_betti.generators import cross_polytope_boundary, stacked_cross_polytopal
from oracles import rank_exact

RP2 = [
    [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
    [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
]
TORUS = [sorted({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7)] + [
    sorted({i, (i + 2) % 7, (i + 3) % 7}) for i in range(7)
]


def test_field_parsing():
    assert FieldSpec.parse("gf2") == GF2
    assert FieldSpec.parse("QQ") == QQ
    assert FieldSpec.parse("gf32003").p == 32003
    for bad in ("gf4", "gf65537", "reals"):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_boundary_squares_to_zero():
    cx = cross_polytope_boundary(3)
    for j in (1, 2):
        upper = boundary_matrix(cx, j, QQ).to_dense()
        lower = boundary_matrix(cx, j - 1, QQ).to_dense()
        prod = [[sum(lower[r][k] * upper[k][c] for k in range(len(upper))) for c in range(len(upper[0]))]
                for r in range(len(lower))]
        assert all(v == 0 for row in prod for v in row)


def test_boundary_matrix_shapes():
    cx = cross_polytope_boundary(3)
    assert boundary_matrix(cx, 0).shape == (1, 6)
    assert boundary_matrix(cx, 2).shape == (12, 8)
    assert boundary_matrix(cx, 5).shape == (0, 0)


def test_projective_plane_depends_on_field():
    rp2 = from_facets(6, RP2)
    assert reduced_homology_dims(rp2, GF2) == [0, 0, 1, 1]
    assert reduced_homology_dims(rp2, QQ) == [0, 0, 0, 0]
    assert reduced_homology_dims(rp2, FieldSpec(3)) == [0, 0, 0, 0]


def test_torus_homology():
    torus = from_facets(7, TORUS)
    for fld in (GF2, QQ, FieldSpec(32003)):
        assert reduced_homology_dims(torus, fld) == [0, 0, 2, 1]


def test_sphere_homology():
    cx = stacked_cross_polytopal(4, 3)
    for fld in (GF2, QQ, FieldSpec(7)):
        assert reduced_homology_dims(cx, fld) == [0, 0, 0, 0, 1]


def test_empty_complex_homology():
    assert reduced_homology_dims(from_facets(0, [[]]), GF2) == [1]


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6)
)


@settings(max_examples=150, deadline=None)
@given(matrices, st.sampled_from([None, 2, 3, 7, 32003]))
def test_rank_matches_naive_elimination(M, p):
    assert matrix_rank(M, FieldSpec(p)) == rank_exact(M, p)

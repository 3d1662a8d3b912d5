import numpy as np
import pytest

from a5deform.chevalley import (act_gl, automorphism, build_L, build_sl6, center, parse_label,
                                quotient_by_center)
from a5deform.field_linalg import FieldError, Matrix, field, matmul, random_invertible


def commutator(X, Y, F):
    return matmul(X, Y, F) ^ matmul(Y, X, F)


@pytest.mark.parametrize("e", [1, 2])
def test_table_matches_matrix_commutators(e):
    A = build_sl6(e)
    F = A.F
    for i in range(A.dim):
        for j in range(A.dim):
            Xi = A.to_matrix(A.basis_vector(i))
            Xj = A.to_matrix(A.basis_vector(j))
            assert np.array_equal(A.from_matrix(commutator(Xi, Xj, F)), A.table[i, j])


def test_quotient_table_matches_matrix_commutators_mod_identity():
    L = build_L(1)
    F = L.F
    for i in range(L.dim):
        for j in range(L.dim):
            C = commutator(L.to_matrix(L.basis_vector(i)), L.to_matrix(L.basis_vector(j)), F)
            assert np.array_equal(L.from_matrix(C), L.table[i, j])


def test_dimensions_and_centre():
    A, L = build_sl6(1), build_L(1)
    assert A.dim == 35 and L.dim == 34
    z = center(A)
    assert len(z) == 1
    assert [A.labels[i] for i in np.nonzero(z[0])[0]] == ["H1", "H3", "H5"]
    assert center(L) == []
    assert A.is_lie() and L.is_lie()


def test_centre_over_larger_field():
    A = build_sl6(2)
    z = center(A)
    assert len(z) == 1 and set(np.nonzero(z[0])[0]) == {0, 2, 4}


def test_example_brackets():
    A, L = build_sl6(1), build_L(1)
    e56, e65 = L.basis_vector("E+5-6"), L.basis_vector("E+6-5")
    assert np.array_equal(L.bracket(e56, e65), L.element({"H1": 1, "H3": 1}))
    assert np.array_equal(A.bracket(A.basis_vector("E+5-6"), A.basis_vector("E+6-5")),
                          A.basis_vector("H5"))
    assert np.array_equal(L.bracket(L.basis_vector("E+1-2"), L.basis_vector("E+2-3")),
                          L.basis_vector("E+1-3"))
    assert not L.bracket(L.basis_vector("E+1-2"), L.basis_vector("E+3-4")).any()
    # [H1, E+1-2] = 2 E+1-2 = 0 in characteristic 2
    assert not L.bracket(L.basis_vector("H1"), L.basis_vector("E+1-2")).any()
    assert np.array_equal(L.bracket(L.basis_vector("H2"), L.basis_vector("E+1-2")),
                          L.basis_vector("E+1-2"))


def test_products_index():
    L = build_L(1)
    pairs, by_target = L.products()
    i, j = L.index("E+1-2"), L.index("E+2-3")
    assert pairs[(i, j)] == {L.index("E+1-3"): 1}
    assert (i, j, 1) in by_target[L.index("E+1-3")]
    sc = L.structure_constants()
    assert sc[("E+5-6", "E+6-5")] == {"H1": 1, "H3": 1}


@pytest.mark.parametrize("e", [1, 2])
def test_automorphism_properties(e):
    L = build_L(e)
    F = L.F
    rng = np.random.default_rng(e)
    for _ in range(5):
        g = random_invertible(6, rng, F)
        h = random_invertible(6, rng, F)
        Ag = automorphism(g, L)
        # preserves the bracket
        x = rng.integers(0, F.order, L.dim, dtype=np.uint8)
        y = rng.integers(0, F.order, L.dim, dtype=np.uint8)
        lhs = matmul(Ag, L.bracket(x, y)[:, None], F)[:, 0]
        rhs = L.bracket(matmul(Ag, x[:, None], F)[:, 0], matmul(Ag, y[:, None], F)[:, 0])
        assert np.array_equal(lhs, rhs)
        # homomorphism GL(6) -> Aut(L)
        assert np.array_equal(automorphism(g @ h, L), matmul(Ag, automorphism(h, L), F))
        assert np.array_equal(act_gl(g, x, L), matmul(Ag, x[:, None], F)[:, 0])
    # scalars act trivially
    c = F.generator() if F.order > 2 else 1
    assert np.array_equal(automorphism(Matrix(np.eye(6, dtype=np.uint8) * c, F), L),
                          np.eye(L.dim, dtype=np.uint8))


def test_automorphism_rejects_singular():
    with pytest.raises(FieldError):
        automorphism(Matrix.zeros(6, 6), build_L(1))
    with pytest.raises(ValueError):
        automorphism(Matrix.identity(5), build_L(1))


def test_from_matrix_rejects_trace():
    L = build_L(1)
    M = np.zeros((6, 6), dtype=np.uint8)
    M[0, 0] = 1
    with pytest.raises(FieldError):
        L.from_matrix(M)


def test_labels():
    assert parse_label("H3") == ("H", 3)
    assert parse_label("E+1-6") == ("E", 1, 6)
    for bad in ["H6", "E+1-1", "E1-2", "X"]:
        with pytest.raises(ValueError):
            parse_label(bad)
    with pytest.raises(KeyError):
        build_L(1).index("H5")


def test_quotient_requires_sl6():
    with pytest.raises(ValueError):
        quotient_by_center(build_L(1))

import numpy as np
import pytest

from a5deform.chevalley import LieAlgebra, build_L, build_sl6
from a5deform.deform import build_type_ii, build_type_iii, specialize
from a5deform.field_linalg import random_invertible
from a5deform.simplicity import is_ideal, is_simple, smallest_ideal_containing, transport

L = build_L(1)


def test_L_is_simple():
    rep = is_simple(L, seed=0)
    assert rep.verdict == "simple"
    cert = rep.certificate
    assert cert["kernel_vectors_generate"]
    for k in cert["kernel"]:
        assert len(smallest_ideal_containing(L, k)) == L.dim


def test_deformations_simple_at_t1():
    for f in (build_type_ii(), build_type_iii()):
        rep = is_simple(specialize(f, 1), seed=0)
        assert rep.verdict == "simple"


def test_sl6_has_the_centre_as_ideal():
    A = build_sl6(1)
    rep = is_simple(A, seed=0)
    assert rep.verdict == "proper ideal found"
    assert 0 < len(rep.witness) < A.dim and is_ideal(A, rep.witness)
    # the centre is an ideal generated by a single vector
    z = A.element({"H1": 1, "H3": 1, "H5": 1})
    assert len(smallest_ideal_containing(A, z)) == 1


def test_determinism():
    a = is_simple(L, seed=5)
    b = is_simple(L, seed=5)
    assert a.to_json(L) == b.to_json(L)


def test_invariant_under_change_of_basis():
    rng = np.random.default_rng(0)
    A = build_sl6(1)
    for k in range(20):
        P = random_invertible(L.dim, rng, L.F)
        assert is_simple(transport(L, P), seed=k).verdict == "simple"
        Q = random_invertible(A.dim, rng, A.F)
        assert is_simple(transport(A, Q), seed=k).verdict == "proper ideal found"


def test_abelian_algebra():
    ab = LieAlgebra(np.zeros((3, 3, 3), dtype=np.uint8), ["x", "y", "z"])
    rep = is_simple(ab, seed=0)
    assert rep.verdict == "proper ideal found"
    assert len(rep.witness) == 1


def test_direct_sum_has_ideal():
    # L + L as a 68-dim algebra: each summand is an ideal
    n = L.dim
    T = np.zeros((2 * n,) * 3, dtype=np.uint8)
    T[:n, :n, :n] = L.table
    T[n:, n:, n:] = L.table
    S = LieAlgebra(T, [f"a{i}" for i in range(n)] + [f"b{i}" for i in range(n)])
    rep = is_simple(S, seed=0)
    assert rep.verdict == "proper ideal found" and is_ideal(S, rep.witness)


def test_gf4_specialization_simple():
    f = build_type_iii(2)
    rep = is_simple(specialize(f, f.alg.F.generator()), seed=0)
    assert rep.verdict == "simple"


def test_inconclusive_when_no_trials():
    assert is_simple(L, trials=0).verdict == "inconclusive"


def test_report_json():
    doc = is_simple(L, seed=0).to_json(L)
    assert doc["verdict"] == "simple" and doc["certificate"]["kernel"]
    with pytest.raises(ValueError):
        smallest_ideal_containing(L, np.zeros(L.dim, dtype=np.uint8))

import numpy as np
import pytest

from a5deform import trivector as tv
from a5deform.chevalley import build_L
from a5deform.cochain import act as act_cochain
from a5deform.cohomology import classes_equal
from a5deform.deform import psi1, psi2
from a5deform.field_linalg import Matrix, det, field, random_invertible, rank as mat_rank

L = build_L(1)


def random_trivector(rng, F):
    return tv.Trivector.from_vector(rng.integers(0, F.order, 20, dtype=np.uint8), F)


def test_canonical_ranks_and_classes():
    ranks = [tv.rank(tv.canonical(t)) for t in tv.TAGS]
    assert ranks == [0, 3, 5, 6, 6]
    assert [tv.classify(tv.canonical(t)) for t in tv.TAGS] == ["I", "II", "III", "RANK6", "RANK6"]


def test_rank_invariant_under_gl6():
    rng = np.random.default_rng(0)
    for _ in range(100):
        g = random_invertible(6, rng, field(1))
        for tag in tv.TAGS:
            w = tv.act(g, tv.canonical(tag))
            assert tv.rank(w) == tv.rank(tv.canonical(tag))


@pytest.mark.parametrize("e", [2, 4])
def test_rank_invariant_over_extensions(e):
    F = field(e)
    rng = np.random.default_rng(e)
    for _ in range(10):
        g = random_invertible(6, rng, F)
        for tag in tv.TAGS:
            assert tv.rank(tv.act(g, tv.canonical(tag, F))) == tv.rank(tv.canonical(tag))


def test_rank_bounded_by_support():
    # w built inside Lambda^3 U has rank at most dim U
    rng = np.random.default_rng(1)
    F = field(1)
    for k in (3, 4, 5):
        for _ in range(20):
            U = rng.integers(0, 2, (6, k), dtype=np.uint8)
            w = tv.Trivector({}, F)
            for _ in range(4):
                cols = U @ rng.integers(0, 2, (k, 3)) % 2
                w = w + tv.decomposable(Matrix(cols.astype(np.uint8)))
            assert tv.rank(w) <= k
            assert tv.rank(w) in (0, 3, 5, 6)


def test_decomposable_has_rank_three():
    rng = np.random.default_rng(2)
    for _ in range(20):
        u = Matrix(rng.integers(0, 2, (6, 3), dtype=np.uint8))
        d = tv.decomposable(u)
        if mat_rank(u) == 3:
            assert tv.rank(d) == 3
        else:
            assert d.is_zero()


def test_act_is_a_group_action():
    rng = np.random.default_rng(3)
    F = field(2)
    for _ in range(5):
        g, h = random_invertible(6, rng, F), random_invertible(6, rng, F)
        w = random_trivector(rng, F)
        assert tv.act(g @ h, w) == tv.act(g, tv.act(h, w))


def test_cocycle_correspondence_examples():
    assert tv.to_cocycle(tv.canonical("II"), L) == psi1(L)
    assert tv.to_cocycle(tv.canonical("III"), L) == psi1(L) + psi2(L)
    assert tv.to_cocycle(tv.canonical("I"), L).is_zero()


@pytest.mark.parametrize("e", [1, 2])
def test_roundtrip_and_additivity(e):
    F = field(e)
    alg = build_L(e)
    rng = np.random.default_rng(10 + e)
    for _ in range(100 if e == 1 else 10):
        w, v = random_trivector(rng, F), random_trivector(rng, F)
        assert tv.from_class(tv.to_cocycle(w, alg)) == w
        assert tv.to_cocycle(w + v, alg) == tv.to_cocycle(w, alg) + tv.to_cocycle(v, alg)


def test_frobenius_twist_on_coefficients():
    F = field(2)
    alg = build_L(2)
    a = F.generator()
    w = tv.Trivector({(1, 2, 3): a}, F)
    assert tv.to_cocycle(w, alg) == psi1(alg).scale(F.mul(a, a))


def test_class_level_equivariance_gf2():
    rng = np.random.default_rng(4)
    for _ in range(20):
        g = random_invertible(6, rng, field(1))
        w = random_trivector(rng, field(1))
        assert classes_equal(act_cochain(g, tv.to_cocycle(w, L)), tv.to_cocycle(tv.act(g, w), L), check=False)


@pytest.mark.parametrize("e", [2, 4])
def test_twisted_equivariance_over_extensions(e):
    # on classes: g . to_cocycle(w) = det(g)^{-1} to_cocycle(g . w)
    F = field(e)
    alg = build_L(e)
    rng = np.random.default_rng(20 + e)
    nontrivial = 0
    for _ in range(4):
        g = random_invertible(6, rng, F)
        w = random_trivector(rng, F)
        lhs = act_cochain(g, tv.to_cocycle(w, alg))
        rhs = tv.to_cocycle(tv.act(g, w), alg)
        dinv = F.inv(det(g))
        assert classes_equal(lhs, rhs.scale(dinv), check=False)
        if dinv != 1:
            nontrivial += 1
            assert not classes_equal(lhs, rhs, check=False)
    assert nontrivial


def test_from_class_ignores_coboundaries_and_rejects_non_cocycles():
    from a5deform.cochain import Cochain, differential
    c = Cochain(L, 1, {(5,): {6: 1}, (9,): {2: 1}})
    z = psi1(L) + differential(c)
    assert tv.from_class(z) == tv.canonical("II")
    with pytest.raises(ValueError):
        tv.from_class(Cochain(L, 2, {(4, 5): {6: 1}}))


def test_split_diagnostic():
    split = tv.split_rank6(tv.canonical("V"))
    assert split is not None
    u, v = split
    assert tv.decomposable(u) + tv.decomposable(v) == tv.canonical("V")
    assert tv.split_rank6(tv.canonical("IV")) is None
    assert tv.split_rank6(tv.canonical("III")) is None


def test_trivector_validation():
    with pytest.raises(ValueError):
        tv.Trivector({(2, 1, 3): 1})
    with pytest.raises(ValueError):
        tv.Trivector({(1, 2, 7): 1})
    with pytest.raises(ValueError):
        tv.Trivector({(1, 2, 3): 2})
    with pytest.raises(ValueError):
        tv.canonical("VI")
    with pytest.raises(ValueError):
        tv.act(Matrix.zeros(6, 6), tv.canonical("II"))

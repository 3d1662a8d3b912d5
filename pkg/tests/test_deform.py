import numpy as np
import pytest

from a5deform import trivector as tv
from a5deform.chevalley import build_L
from a5deform.cochain import Cochain, bracket_cochain, cbracket, cup, differential
from a5deform.deform import (DeformationError, DeformedBracket, build_type_ii, build_type_iii,
                             is_lie, jacobi_coefficients, jacobi_status, obstruction_status, phi_cochain,
                             psi1, psi2, specialize)

L = build_L(1)


def brute_jacobi_violations(alg, sample, rng):
    """Count basis triples (from a random sample) where the Jacobi identity fails."""
    bad = 0
    for _ in range(sample):
        i, j, k = rng.choice(alg.dim, 3, replace=False)
        x, y, z = (alg.basis_vector(a) for a in (i, j, k))
        s = (alg.bracket(alg.bracket(x, y), z) ^ alg.bracket(alg.bracket(y, z), x)
             ^ alg.bracket(alg.bracket(z, x), y))
        bad += bool(s.any())
    return bad


def test_type_ii_is_lie():
    f = build_type_ii()
    assert f.degree == 1
    assert all(c.is_zero() for c in jacobi_coefficients(f).values())
    assert jacobi_status(f) == {0: 0, 1: 0, 2: 0}


def test_type_iii_is_lie():
    f = build_type_iii()
    assert f.degree == 2
    assert jacobi_status(f) == {0: 0, 1: 0, 2: 0, 3: 0, 4: 0}
    assert f.term(2) == phi_cochain(L)


def test_coefficients_two_ways():
    # t^1: d(b1); t^2: [b0, b2] + b1 cup b1 = d(b2) + b1 cup b1
    rng = np.random.default_rng(0)
    b0 = bracket_cochain(L)
    for _ in range(50):
        entries = {}
        for _ in range(4):
            T = tuple(sorted(rng.choice(L.dim, 2, replace=False).tolist()))
            entries.setdefault(T, {})[int(rng.integers(L.dim))] = 1
        c = Cochain(L, 2, entries)
        f = DeformedBracket(L, [c])
        co = jacobi_coefficients(f)
        assert co[0].is_zero() and co[1] == differential(c) and co[2] == cup(c, c)
        assert cup(b0, c) + cup(c, b0) == differential(c)
    p = psi1(L) + psi2(L)
    f = DeformedBracket(L, [p, phi_cochain(L)])
    co = jacobi_coefficients(f)
    assert co[2] == differential(phi_cochain(L)) + cup(p, p)
    assert co[3] == cbracket(p, phi_cochain(L))
    assert co[4] == cup(phi_cochain(L), phi_cochain(L))


def test_corrupted_phi_breaks_jacobi():
    phi = phi_cochain(L)
    args = sorted(phi.entries)[0]
    broken = Cochain(L, 2, {a: v for a, v in phi.entries.items() if a != args})
    f = DeformedBracket(L, [psi1(L) + psi2(L), broken])
    status = jacobi_status(f)
    assert status[2] > 0
    assert not is_lie(f)
    with pytest.raises(DeformationError):
        specialize(f, 1)
    # without phi the t^2 coefficient is exactly [psi1, psi2]
    f0 = DeformedBracket(L, [psi1(L) + psi2(L)])
    assert jacobi_coefficients(f0)[2] == cbracket(psi1(L), psi2(L))


@pytest.mark.parametrize("builder", [build_type_ii, build_type_iii])
def test_specializations_are_lie(builder):
    f = builder()
    A0 = specialize(f, 0)
    assert np.array_equal(A0.table, L.table)
    A1 = specialize(f, 1)
    assert A1.is_lie()
    assert brute_jacobi_violations(A1, 300, np.random.default_rng(1)) == 0
    assert not np.array_equal(A1.table, L.table)


def test_specialize_over_gf4_generator():
    f = build_type_iii(2)
    g = f.alg.F.generator()
    A = specialize(f, g)
    assert A.is_lie()
    with pytest.raises(ValueError):
        specialize(f, 4)


def test_specialized_table_values():
    f = build_type_ii()
    A1 = specialize(f, 1)
    p = psi1(L)
    args, v = next(iter(sorted(p.entries.items())))
    want = L.table[args].copy()
    for m, c in v.items():
        want[m] ^= c
    assert np.array_equal(A1.table[args], want)


def test_obstruction_reports():
    r2 = obstruction_status(tv.to_cocycle(tv.canonical("II"), L))
    assert r2.obstruction_vanishes_identically and r2.is_coboundary
    r3 = obstruction_status(tv.to_cocycle(tv.canonical("III"), L))
    assert not r3.obstruction_vanishes_identically and r3.is_coboundary
    assert differential(r3.witness) == cup(psi1(L) + psi2(L), psi1(L) + psi2(L))
    # phi itself is one witness
    assert differential(phi_cochain(L)) == cup(psi1(L) + psi2(L), psi1(L) + psi2(L))
    assert r3.obstruction_entries == len(cbracket(psi1(L), psi2(L)))
    assert set(r3.to_json()) == {"obstruction_vanishes_identically", "is_coboundary",
                                 "obstruction_entries", "witness"}


def test_obstruction_requires_cocycle():
    with pytest.raises(ValueError):
        obstruction_status(Cochain(L, 2, {(4, 5): {6: 1}}))


def test_deformed_bracket_validation():
    with pytest.raises(ValueError):
        DeformedBracket(L, [Cochain(L, 1)])
    f = DeformedBracket(L, [psi1(L), Cochain.zero(L, 2)])
    assert f.degree == 1
    assert f.term(5).is_zero()

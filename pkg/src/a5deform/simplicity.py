"""Simplicity via irreducibility of the adjoint module (Norton's test).

Ideals are exactly the submodules of the adjoint module.  Norton's
criterion: if theta in the enveloping algebra is singular, every nonzero
vector of ker(theta) generates the module, and some nonzero vector of
ker(theta^T) generates the dual module, then the module is irreducible.
A failed spin produces an explicit proper submodule instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .chevalley import LieAlgebra
from .field_linalg import Echelon, Matrix, kernel_basis, matmul

MAX_WORD = 4
WORDS_PER_ELEMENT = 6
WITNESS_PROBES = 2


@dataclass
class SimplicityReport:
    verdict: str  # "simple" | "proper ideal found" | "inconclusive"
    seed: int
    trials_used: int
    witness: list = field(default_factory=list)
    certificate: dict | None = None

    def to_json(self, alg: LieAlgebra | None = None) -> dict:
        from .field_linalg import to_hex

        def vec(v):
            if alg is None:
                return [to_hex(c) for c in v]
            return {alg.labels[i]: to_hex(c) for i, c in enumerate(v) if c}

        cert = None
        if self.certificate:
            cert = {k: v for k, v in self.certificate.items() if k not in ("kernel", "dual_kernel")}
            cert["kernel"] = [vec(v) for v in self.certificate["kernel"]]
            cert["dual_kernel"] = vec(self.certificate["dual_kernel"])
        return {
            "verdict": self.verdict,
            "seed": self.seed,
            "trials_used": self.trials_used,
            "witness": [vec(v) for v in self.witness],
            "witness_dim": len(self.witness),
            "certificate": cert,
        }


def spin(v, gens, F, n: int) -> Echelon:
    """Smallest subspace containing v and stable under every matrix in gens."""
    ech = Echelon(n, F)
    stack = np.concatenate(gens, axis=0) if gens else np.zeros((0, n), dtype=np.uint8)
    queue = []
    if ech.add(v):
        queue.append(np.asarray(v, dtype=np.uint8))
    while queue and ech.dim < n:
        u = queue.pop()
        images = matmul(stack, u[:, None], F)[:, 0].reshape(len(gens), n)
        for img in images:
            if img.any() and ech.add(img):
                queue.append(img)
    return ech


def smallest_ideal_containing(alg: LieAlgebra, v) -> list[np.ndarray]:
    v = np.asarray(v, dtype=np.uint8)
    if not v.any():
        raise ValueError("the zero vector generates the zero ideal")
    return spin(v, alg.ad_matrices(), alg.F, alg.dim).basis()


def is_ideal(alg: LieAlgebra, basis) -> bool:
    ech = Echelon(alg.dim, alg.F)
    for b in basis:
        ech.add(b)
    for b in basis:
        for M in alg.ad_matrices():
            if (matmul(M, np.asarray(b)[:, None], alg.F)[:, 0]) not in ech:
                return False
    return True


def _random_element(gens, F, rng, n):
    theta = np.zeros((n, n), dtype=np.uint8)
    for _ in range(WORDS_PER_ELEMENT):
        length = int(rng.integers(1, MAX_WORD + 1))
        word = np.eye(n, dtype=np.uint8)
        for _ in range(length):
            word = matmul(gens[int(rng.integers(len(gens)))], word, F)
        c = int(rng.integers(1, F.order))
        theta ^= F.mul_table[c][word]
    return theta


def _kernel_vectors(basis, F):
    """All kernel vectors up to scalars (only called for small kernels)."""
    if len(basis) == 1:
        return [basis[0]]
    out = []
    B = np.array(basis, dtype=np.uint8)
    for coeffs in product(range(F.order), repeat=len(basis)):
        nz = [c for c in coeffs if c]
        if not nz or nz[0] != 1:
            continue
        out.append(matmul(np.array([coeffs], dtype=np.uint8), B, F)[0])
    return out


def _annihilator(F, n, basis) -> list[np.ndarray]:
    return kernel_basis(Matrix(np.array(basis, dtype=np.uint8), F))


def is_simple(alg: LieAlgebra, trials: int = 64, seed: int = 0, max_nullity: int = 3) -> SimplicityReport:
    if alg.dim < 2:
        raise ValueError("simplicity test needs dim >= 2")
    F, n = alg.F, alg.dim
    gens = alg.ad_matrices()
    gens_t = [g.T.copy() for g in gens]
    rng = np.random.default_rng(seed)
    scalars = list(range(F.order)) if F.order <= 4 else [0, 1]
    for trial in range(1, trials + 1):
        theta = _random_element(gens, F, rng, n)
        for lam in scalars:
            th = theta.copy()
            if lam:
                th[np.arange(n), np.arange(n)] ^= lam
            ker = kernel_basis(Matrix(th, F))
            if not ker:
                continue
            if len(ker) > max_nullity or F.order ** len(ker) > 64:
                # too large to certify, but a random kernel vector may still expose an ideal
                for _ in range(WITNESS_PROBES):
                    c = rng.integers(0, F.order, len(ker), dtype=np.uint8)
                    v = matmul(c[None, :], np.array(ker, dtype=np.uint8), F)[0]
                    if v.any():
                        sub = spin(v, gens, F, n)
                        if sub.dim < n:
                            return _witness_report(alg, sub.basis(), seed, trial)
                continue
            for v in _kernel_vectors(ker, F):
                sub = spin(v, gens, F, n)
                if sub.dim < n:
                    return _witness_report(alg, sub.basis(), seed, trial)
            w = kernel_basis(Matrix(th.T.copy(), F))[0]
            dual = spin(w, gens_t, F, n)
            if dual.dim < n:
                return _witness_report(alg, _annihilator(F, n, dual.basis()), seed, trial)
            cert = {"trial": trial, "lambda": lam, "nullity": len(ker),
                    "kernel": [np.asarray(k) for k in ker], "dual_kernel": w,
                    "kernel_vectors_generate": all(
                        len(smallest_ideal_containing(alg, k)) == n for k in _kernel_vectors(ker, F))}
            if not cert["kernel_vectors_generate"]:
                raise AssertionError("certificate failed re-check")
            return SimplicityReport("simple", seed, trial, certificate=cert)
    return SimplicityReport("inconclusive", seed, trials)


def _witness_report(alg, basis, seed, trial) -> SimplicityReport:
    if not 0 < len(basis) < alg.dim or not is_ideal(alg, basis):
        raise AssertionError("witness is not a proper ideal")
    return SimplicityReport("proper ideal found", seed, trial, witness=basis)


def transport(alg: LieAlgebra, P) -> LieAlgebra:
    """Same algebra written in the basis given by the columns of invertible P."""
    from .field_linalg import inverse
    F = alg.F
    P = P.a if isinstance(P, Matrix) else np.asarray(P, dtype=np.uint8)
    Pi = inverse(Matrix(P, F)).a
    n = alg.dim
    T = alg.table
    # T'[a, b] = P^{-1} [P e_a, P e_b]
    X = matmul(P.T.copy(), T.reshape(n, n * n), F).reshape(n, n, n)           # [a, j, k]
    X = matmul(P.T.copy(), X.transpose(1, 0, 2).reshape(n, n * n), F).reshape(n, n, n)  # [b, a, k]
    X = X.transpose(1, 0, 2).reshape(n * n, n)
    X = matmul(X, Pi.T.copy(), F).reshape(n, n, n)
    return LieAlgebra(X, [f"b{i}" for i in range(n)], None, F, name=f"{alg.name} (new basis)")

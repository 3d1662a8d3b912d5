"""Polynomial deformations f_t = b0 + t b1 + t^2 b2 + ... of L and their Jacobiators.

The Jacobiator of f_t is J(x, y, z) = f(f(x, y), z) + cyclic, whose t^d
coefficient is sum_{i+j=d} b_i cup b_j.  f_t is a Lie bracket over K[t]
exactly when every coefficient vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rootsys
from .chevalley import LieAlgebra, build_L
from .cochain import Cochain, bracket_cochain, cup, differential
from .cohomology import basis_cocycle, is_coboundary, require_cocycle

R = rootsys.root

PSI1_WEIGHT = rootsys.h2_weight_of_triple((1, 2, 3))  # e1+e2+e3-e4-e5-e6
PSI2_WEIGHT = rootsys.h2_weight_of_triple((1, 4, 5))  # e1-e2-e3+e4+e5-e6

# [{args}, value] with roots eps_i - eps_j written R(i, j)
PHI_SETS = [
    ([R(5, 1), R(6, 5)], R(1, 6)),
    ([R(5, 1), R(6, 1)], R(5, 6)),
    ([R(6, 1), R(6, 5)], R(1, 5)),
    ([R(6, 4), R(4, 1)], R(1, 6)),
    ([R(4, 1), R(6, 1)], R(4, 6)),
    ([R(6, 1), R(6, 4)], R(1, 4)),
]


class DeformationError(RuntimeError):
    pass


class DeformedBracket:
    """b0 + t b1 + ... + t^m bm with b0 the bracket of ``alg``."""

    def __init__(self, alg: LieAlgebra, higher, name: str = ""):
        self.alg = alg
        self.name = name
        higher = list(higher)
        for c in higher:
            if c.degree != 2 or c.alg.dim != alg.dim:
                raise ValueError("deformation terms must be 2-cochains on the same algebra")
        while higher and higher[-1].is_zero():
            higher.pop()
        self.terms = [bracket_cochain(alg)] + higher

    @property
    def degree(self) -> int:
        return len(self.terms) - 1

    def term(self, i: int) -> Cochain:
        return self.terms[i] if i < len(self.terms) else Cochain.zero(self.alg, 2)

    def __eq__(self, other) -> bool:
        return isinstance(other, DeformedBracket) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"DeformedBracket({self.name or '?'}, t-degree {self.degree})"


def jacobi_coefficients(f: DeformedBracket) -> dict[int, Cochain]:
    """t-degree -> coefficient of the Jacobiator, for degrees 0..2m."""
    out = {}
    m = f.degree
    for d in range(2 * m + 1):
        acc = Cochain.zero(f.alg, 3)
        for i in range(max(0, d - m), min(d, m) + 1):
            acc = acc + cup(f.terms[i], f.terms[d - i])
        out[d] = acc
    return out


def jacobi_status(f: DeformedBracket) -> dict[int, int]:
    """t-degree -> number of nonzero entries in the Jacobiator coefficient."""
    return {d: len(c) for d, c in jacobi_coefficients(f).items()}


def is_lie(f: DeformedBracket) -> bool:
    return all(c.is_zero() for c in jacobi_coefficients(f).values())


def phi_cochain(alg: LieAlgebra) -> Cochain:
    """The six-set 2-cochain of weight 2(eps_1 - eps_6) with d(phi) = [psi1, psi2]."""
    return Cochain.from_sets(alg, PHI_SETS)


def psi1(alg: LieAlgebra) -> Cochain:
    return basis_cocycle(PSI1_WEIGHT, alg)


def psi2(alg: LieAlgebra) -> Cochain:
    return basis_cocycle(PSI2_WEIGHT, alg)


def _verified(f: DeformedBracket) -> DeformedBracket:
    bad = {d: len(c) for d, c in jacobi_coefficients(f).items() if not c.is_zero()}
    if bad:
        raise DeformationError(f"{f.name}: Jacobiator nonzero at t-degrees {bad}")
    return f


def build_type_ii(e: int = 1, alg: LieAlgebra | None = None) -> DeformedBracket:
    """[ , ] + t psi_{e1+e2+e3-e4-e5-e6}."""
    alg = alg or build_L(e)
    return _verified(DeformedBracket(alg, [psi1(alg)], name="A5bar(II)"))


def build_type_iii(e: int = 1, alg: LieAlgebra | None = None) -> DeformedBracket:
    """[ , ] + t (psi1 + psi2) + t^2 phi."""
    alg = alg or build_L(e)
    return _verified(DeformedBracket(alg, [psi1(alg) + psi2(alg), phi_cochain(alg)], name="A5bar(III)"))


@dataclass
class ObstructionReport:
    obstruction_vanishes_identically: bool
    is_coboundary: bool
    witness: Cochain | None
    obstruction_entries: int

    def to_json(self) -> dict:
        from .jsonio import cochain_to_json
        return {
            "obstruction_vanishes_identically": self.obstruction_vanishes_identically,
            "is_coboundary": self.is_coboundary,
            "obstruction_entries": self.obstruction_entries,
            "witness": cochain_to_json(self.witness) if self.witness is not None else None,
        }


def obstruction_status(psi: Cochain) -> ObstructionReport:
    """First obstruction psi cup psi: zero, exact, or neither."""
    require_cocycle(psi)
    ob = cup(psi, psi)
    if ob.is_zero():
        return ObstructionReport(True, True, Cochain.zero(psi.alg, 2), 0)
    w = is_coboundary(ob)
    return ObstructionReport(False, w is not None, w, len(ob))


def specialize(f: DeformedBracket, t0: int, check: bool = True) -> LieAlgebra:
    """The algebra with bracket sum t0^i b_i over the field of f."""
    F = f.alg.F
    if not 0 <= t0 < F.order:
        raise ValueError(f"t0 = {t0:x} is not an element of GF(2^{F.e})")
    if check and not is_lie(f):
        raise DeformationError("Jacobiator does not vanish; specialisation need not be a Lie algebra")
    T = np.zeros((f.alg.dim,) * 3, dtype=np.uint8)
    p = 1
    for b in f.terms:
        if p:
            T ^= F.mul_table[p][b.to_dense()]
        p = F.mul(p, t0)
    return LieAlgebra(T, f.alg.labels, f.alg.weights, F, realization=None,
                      name=f"{f.name or 'deformation'} at t={t0:x}")

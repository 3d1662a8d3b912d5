"""Second adjoint cohomology of L, computed one weight block at a time.

The differential preserves the Z^6 weight grading, so Z^2, B^2 and
coboundary membership in C^3 are all decided block by block.  No block has
more than a few hundred columns.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import rootsys
from .chevalley import LieAlgebra
from .cochain import Cochain, differential
from .field_linalg import Matrix, rank, solve

THREADS_ENV = "A5DEFORM_THREADS"


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=8)
def cochain_basis_by_weight(alg: LieAlgebra, k: int) -> dict:
    """Weight -> list of basis cochains (args, out) of C^k, k in {0, 1, 2}."""
    if k not in (0, 1, 2):
        raise ValueError("basis enumeration only for degrees 0..2")
    wts = alg.weights
    out: dict = {}
    for args in combinations(range(alg.dim), k):
        s = rootsys.add(*(wts[a] for a in args)) if args else rootsys.ZERO
        for m in range(alg.dim):
            out.setdefault(rootsys.sub(wts[m], s), []).append((args, m))
    return out


def _column_images(alg: LieAlgebra, k: int, mu) -> list[dict]:
    cols = []
    for args, m in cochain_basis_by_weight(alg, k).get(tuple(mu), []):
        dc = differential(Cochain(alg, k, {args: {m: 1}}), "sparse")
        cols.append({(S, o): c for S, o, c in dc.terms()})
    return cols


def _block_matrix(alg: LieAlgebra, cols: list[dict], extra_rows=()):
    rows = {}
    for col in cols:
        for key in col:
            rows.setdefault(key, len(rows))
    for key in extra_rows:
        rows.setdefault(key, len(rows))
    M = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for j, col in enumerate(cols):
        for key, c in col.items():
            M[rows[key], j] = c
    return Matrix(M, alg.F), rows


def block_rank(alg: LieAlgebra, k: int, mu) -> int:
    """Rank of d: C^k_mu -> C^{k+1}_mu."""
    cols = _column_images(alg, k, mu)
    if not cols:
        return 0
    M, _ = _block_matrix(alg, cols)
    return rank(M) if M.rows else 0


@dataclass
class WeightBlock:
    weight: rootsys.Weight
    dim_c2: int
    dim_z2: int
    dim_b2: int

    @property
    def dim_h2(self) -> int:
        return self.dim_z2 - self.dim_b2


@dataclass
class H2Summary:
    blocks: dict = field(default_factory=dict)
    cocycles: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(b.dim_h2 for b in self.blocks.values())

    def h2_weights(self) -> list:
        return sorted((w for w, b in self.blocks.items() if b.dim_h2), reverse=True)

    def to_json(self) -> dict:
        return {
            "dim_h2": self.total,
            "weights": [
                {"weight": list(w), "dim_c2": b.dim_c2, "dim_z2": b.dim_z2,
                 "dim_b2": b.dim_b2, "dim_h2": b.dim_h2}
                for w, b in sorted(self.blocks.items(), reverse=True) if b.dim_h2
            ],
            "blocks_examined": len(self.blocks),
        }


def weight_block(alg: LieAlgebra, mu) -> WeightBlock:
    mu = tuple(mu)
    c2 = len(cochain_basis_by_weight(alg, 2).get(mu, []))
    z2 = c2 - block_rank(alg, 2, mu)
    b2 = block_rank(alg, 1, mu)
    return WeightBlock(mu, c2, z2, b2)


def h2_summary(alg: LieAlgebra, weights=None) -> H2Summary:
    """Per-weight dimensions of Z^2, B^2, H^2 and the basis cocycles.

    With ``weights`` given only those blocks are computed.
    """
    if weights is None:
        weights = sorted(cochain_basis_by_weight(alg, 2))
    weights = [tuple(w) for w in weights]
    with ThreadPoolExecutor(_threads()) as ex:
        blocks = list(ex.map(lambda w: weight_block(alg, w), weights))
    summary = H2Summary({b.weight: b for b in blocks})
    for w in summary.h2_weights():
        if rootsys.is_h2_weight(w):
            summary.cocycles[w] = basis_cocycle(w, alg)
    return summary


@lru_cache(maxsize=64)
def _basis_cocycle(mu, alg: LieAlgebra) -> Cochain:
    terms = []
    rs = sorted(rootsys.roots())
    for a, b in combinations(rs, 2):
        # a = -gamma, b = -delta; value E_{-gamma-delta+mu}
        v = rootsys.add(a, b, mu)
        if rootsys.is_root(v):
            terms.append(([_idx(alg, a), _idx(alg, b)], _idx(alg, v), 1))
    return Cochain.from_terms(alg, 2, terms)


def _idx(alg, w) -> int:
    i, j = rootsys.root_indices(w)
    return alg.index(f"E+{i}-{j}")


def basis_cocycle(mu, alg: LieAlgebra) -> Cochain:
    """psi_mu: (E_{-gamma}, E_{-delta}) -> E_{-gamma-delta+mu} over all root pairs."""
    mu = tuple(mu)
    if not rootsys.is_h2_weight(mu):
        raise ValueError(f"{mu} is not one of the 20 H^2 weights")
    return _basis_cocycle(mu, alg)


def solve_coboundary(c: Cochain) -> Cochain | None:
    """Some b with d(b) = c, or None.  Solved independently per weight block."""
    if c.degree not in (1, 2, 3):
        raise ValueError("coboundary solving for target degree 1..3")
    alg = c.alg
    k = c.degree - 1
    basis = cochain_basis_by_weight(alg, k)
    result = Cochain.zero(alg, k)
    for mu, part in sorted(c.weight_components().items()):
        cols = _column_images(alg, k, mu)
        target = {(S, m): x for S, m, x in part.terms()}
        M, rows = _block_matrix(alg, cols, target)
        if not cols:
            return None
        rhs = np.zeros(M.rows, dtype=np.uint8)
        for key, x in target.items():
            rhs[rows[key]] = x
        x = solve(M, rhs)
        if x is None:
            return None
        blk = basis[mu]
        result = result + Cochain.from_terms(
            alg, k, [(blk[j][0], blk[j][1], int(x[j])) for j in np.nonzero(x)[0]])
    return result


def is_coboundary(c: Cochain) -> Cochain | None:
    """Witness phi' with d(phi') = c for a 3-cochain c, or None."""
    if c.degree != 3:
        raise ValueError("is_coboundary expects a 3-cochain")
    return solve_coboundary(c)


class NotACocycle(ValueError):
    pass


def require_cocycle(c: Cochain):
    if not differential(c).is_zero():
        raise NotACocycle("cochain is not a cocycle")


def classes_equal(a: Cochain, b: Cochain, check: bool = True) -> bool:
    """True iff a + b lies in the image of d on C^1."""
    if a.degree != 2 or b.degree != 2:
        raise ValueError("classes_equal compares 2-cocycles")
    if check:
        require_cocycle(a)
        require_cocycle(b)
    return solve_coboundary(a + b) is not None

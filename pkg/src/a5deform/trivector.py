"""Trivectors of a 6-dimensional space and their link with H^2(L, L).

A trivector is stored as {(i, j, k): coeff} over 1-indexed increasing
triples.  Its rank is the dimension of the smallest U with w in
Lambda^3 U, computed as the span of all double contractions.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from . import rootsys
from .chevalley import LieAlgebra, build_L
from .cochain import Cochain
from .cohomology import basis_cocycle, require_cocycle
from .field_linalg import GF, Matrix, det, field, rank as mat_rank, Echelon

TRIPLES = list(combinations(range(1, 7), 3))
TAGS = ("I", "II", "III", "IV", "V")


class Trivector:
    def __init__(self, coeffs=None, F: GF | int = 1):
        self.F = F if isinstance(F, GF) else field(F)
        clean = {}
        for t, c in (coeffs or {}).items():
            t = tuple(int(i) for i in t)
            if len(t) != 3 or not all(1 <= i <= 6 for i in t) or not t[0] < t[1] < t[2]:
                raise ValueError(f"bad triple {t}")
            if not 0 <= c < self.F.order:
                raise ValueError(f"coefficient {c} out of range")
            if c:
                clean[t] = int(c)
        self.coeffs = clean

    def __eq__(self, other) -> bool:
        return isinstance(other, Trivector) and self.F is other.F and self.coeffs == other.coeffs

    def __add__(self, other: Trivector) -> Trivector:
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = out.get(t, 0) ^ c
        return Trivector(out, self.F)

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self) -> np.ndarray:
        return np.array([self.coeffs.get(t, 0) for t in TRIPLES], dtype=np.uint8)

    @classmethod
    def from_vector(cls, v, F=1) -> Trivector:
        return cls({t: int(c) for t, c in zip(TRIPLES, v) if c}, F)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Trivector(0)"
        terms = []
        for t, c in sorted(self.coeffs.items()):
            mono = "e{}e{}e{}".format(*t)
            terms.append(mono if c == 1 else f"{c:x}*{mono}")
        return "Trivector(" + " + ".join(terms) + ")"


def canonical(tag: str, F: GF | int = 1) -> Trivector:
    forms = {
        "I": [],
        "II": [(1, 2, 3)],
        "III": [(1, 2, 3), (1, 4, 5)],
        # e1 e5 e6 + e2 e6 e4 + e3 e4 e5
        "IV": [(1, 5, 6), (2, 4, 6), (3, 4, 5)],
        "V": [(1, 2, 3), (4, 5, 6)],
    }
    if tag not in forms:
        raise ValueError(f"unknown orbit tag {tag!r}")
    return Trivector({t: 1 for t in forms[tag]}, F)


def contractions(w: Trivector) -> np.ndarray:
    """Rows: iota_a iota_b w for a < b, as vectors in V."""
    rows = []
    for a, b in combinations(range(1, 7), 2):
        v = np.zeros(6, dtype=np.uint8)
        for c in range(1, 7):
            if c not in (a, b):
                v[c - 1] = w.coeffs.get(tuple(sorted((a, b, c))), 0)
        rows.append(v)
    return np.array(rows, dtype=np.uint8)


def rank(w: Trivector) -> int:
    if w.is_zero():
        return 0
    return mat_rank(Matrix(contractions(w), w.F))


class TrivectorStructureError(RuntimeError):
    pass


def classify(w: Trivector) -> str:
    """I, II, III, or RANK6 (orbits IV and V are not separated)."""
    r = rank(w)
    if r == 0:
        return "I"
    if r == 3:
        return "II"
    if r == 5:
        return "III"
    if r == 6:
        return "RANK6"
    raise TrivectorStructureError(f"impossible trivector rank {r}")


def wedge3_matrix(g) -> Matrix:
    """20x20 matrix of Lambda^3 g on the basis TRIPLES."""
    g = g if isinstance(g, Matrix) else Matrix(g)
    a = g.a
    out = np.zeros((20, 20), dtype=np.uint8)
    for r, S in enumerate(TRIPLES):
        for c, T in enumerate(TRIPLES):
            minor = a[np.ix_([i - 1 for i in S], [j - 1 for j in T])]
            out[r, c] = det(Matrix(minor, g.F))
    return Matrix(out, g.F)


def act(g, w: Trivector) -> Trivector:
    """g . (e_i ^ e_j ^ e_k) = g e_i ^ g e_j ^ g e_k."""
    g = g if isinstance(g, Matrix) else Matrix(g, w.F)
    if g.F is not w.F:
        raise ValueError("field mismatch")
    if mat_rank(g) != 6:
        raise ValueError("g is singular")
    return Trivector.from_vector(wedge3_matrix(g) @ w.vector(), w.F)


def decomposable(u) -> Trivector:
    """u1 ^ u2 ^ u3 for the columns of a 6x3 matrix u."""
    u = u if isinstance(u, Matrix) else Matrix(u)
    coeffs = {}
    for T in TRIPLES:
        coeffs[T] = det(Matrix(u.a[[i - 1 for i in T], :], u.F))
    return Trivector(coeffs, u.F)


def to_cocycle(w: Trivector, alg: LieAlgebra | None = None) -> Cochain:
    """sum c_T e_T  ->  sum c_T^2 psi_{mu(T)} (coefficients twisted by Frobenius)."""
    alg = alg or build_L(w.F.e)
    if alg.F is not w.F:
        raise ValueError("field mismatch between trivector and algebra")
    out = Cochain.zero(alg, 2)
    for T, c in sorted(w.coeffs.items()):
        psi = basis_cocycle(rootsys.h2_weight_of_triple(T), alg)
        out = out + psi.scale(w.F.frobenius(c))
    return out


def from_class(z: Cochain, check: bool = True) -> Trivector:
    """Trivector of the class of a 2-cocycle (inverse of to_cocycle on classes).

    Components at the 20 H^2 weights are read off against psi_mu; all other
    weight components are coboundaries and are ignored.
    """
    if z.degree != 2:
        raise ValueError("from_class expects a 2-cochain")
    if check:
        require_cocycle(z)
    F = z.F
    coeffs = {}
    for mu, part in z.weight_components().items():
        if not rootsys.is_h2_weight(mu):
            continue
        psi = basis_cocycle(mu, z.alg)
        args, v = next(iter(sorted(psi.entries.items())))
        (m, _), = v.items()
        c = part.value(*args).get(m, 0)
        if part != psi.scale(c):
            raise ValueError(f"component at weight {mu} is not a multiple of psi_mu")
        if c:
            coeffs[rootsys.triple_of_h2_weight(mu)] = F.sqrt(c)
    return Trivector(coeffs, F)


def split_rank6(w: Trivector, rng=None, samples: int = 20000):
    """Diagnostic: try to write w = u1^u2^u3 + v1^v2^v3 with complementary spans.

    Over GF(2) all 1395 decomposable trivectors are enumerated, so a None
    answer is definitive for GF(2)-rational splittings.  Over larger fields
    random 3-dimensional subspaces are sampled.  Carries no claim about
    orbits over the algebraic closure.
    """
    F = w.F
    if rank(w) != 6:
        return None
    if F.e == 1:
        decs = {}
        for u in _subspaces_gf2():
            d = decomposable(u)
            decs[tuple(d.vector())] = u
        wv = w.vector()
        for key, u in decs.items():
            rest = tuple(np.array(key, dtype=np.uint8) ^ wv)
            if rest in decs:
                v = decs[rest]
                if mat_rank(Matrix(np.hstack([u.a, v.a]), F)) == 6:
                    return u, v
        return None
    rng = rng or np.random.default_rng(0)
    for _ in range(samples):
        u = Matrix(rng.integers(0, F.order, size=(6, 3), dtype=np.uint8), F)
        if mat_rank(u) != 3:
            continue
        rest = w + decomposable(u)
        if rank(rest) == 3:
            return u, _support_basis(rest)
    return None


def _support_basis(w: Trivector) -> Matrix:
    ech = Echelon(6, w.F)
    for row in contractions(w):
        ech.add(row)
    return Matrix(np.array(ech.basis()).T, w.F)


_SUBSPACES = None


def _subspaces_gf2() -> list[Matrix]:
    global _SUBSPACES
    if _SUBSPACES is None:
        from .field_linalg import rref
        seen = {}
        for bits in combinations(range(1, 64), 3):
            u = np.array([[(b >> i) & 1 for b in bits] for i in range(6)], dtype=np.uint8)
            m = Matrix(u, 1)
            if mat_rank(m) != 3:
                continue
            R, _ = rref(m.transpose())
            seen.setdefault(R.tobytes(), m)
        _SUBSPACES = list(seen.values())
    return _SUBSPACES

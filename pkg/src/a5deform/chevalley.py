"""sl(6) in the Chevalley basis over GF(2^e), its centre, and the quotient L.

Basis order for ``A = sl(6)``: H1..H5 (the coroots H_{alpha_i}), then the
30 root vectors E_{eps_i - eps_j} in lexicographic order of (i, j).  The
quotient ``L = A/Z`` keeps H1..H4 and the same root vectors.

Labels: ``"H3"`` for H_{alpha_3} (or its class in L), ``"E+1-2"`` for
E_{eps_1 - eps_2}.
"""
from __future__ import annotations

import re
from functools import lru_cache

import numpy as np

from . import rootsys
from .field_linalg import GF, Echelon, FieldError, Matrix, field, inverse, kernel_basis, matmul

ROOT_PAIRS = [(i, j) for i in range(1, 7) for j in range(1, 7) if i != j]
_LABEL_RE = re.compile(r"^(?:H([1-5])|E\+([1-6])-([1-6]))$")


def root_label(i: int, j: int) -> str:
    return f"E+{i}-{j}"


def parse_label(label: str):
    """('H', i) or ('E', i, j)."""
    m = _LABEL_RE.match(label)
    if not m:
        raise ValueError(f"bad basis label {label!r}")
    if m.group(1):
        return ("H", int(m.group(1)))
    i, j = int(m.group(2)), int(m.group(3))
    if i == j:
        raise ValueError(f"bad basis label {label!r}")
    return ("E", i, j)


class LieAlgebra:
    """Finite-dimensional algebra given by a dense structure-constant table.

    ``table[i, j]`` is the coordinate vector of [b_i, b_j].  The table is
    alternating.  ``realization`` is ``"sl6"``, ``"sl6/Z"`` or ``None`` and
    decides whether the GL(6) conjugation action is available.
    """

    def __init__(self, table, labels, weights=None, F: GF | int = 1, realization=None, name=""):
        self.F = F if isinstance(F, GF) else field(F)
        t = np.array(table, dtype=np.uint8)
        n = len(labels)
        if t.shape != (n, n, n):
            raise ValueError(f"table shape {t.shape} does not match dim {n}")
        t.setflags(write=False)
        self.table = t
        self.labels = list(labels)
        self.weights = [tuple(w) for w in weights] if weights is not None else [rootsys.ZERO] * n
        self.realization = realization
        self.name = name
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._ad = None
        self._products = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no basis vector {label!r} in {self.name or 'algebra'}") from None

    def basis_vector(self, i) -> np.ndarray:
        if isinstance(i, str):
            i = self.index(i)
        v = np.zeros(self.dim, dtype=np.uint8)
        v[i] = 1
        return v

    def element(self, coeffs: dict) -> np.ndarray:
        """Vector from {label or index: coefficient}."""
        v = np.zeros(self.dim, dtype=np.uint8)
        for k, c in coeffs.items():
            v[self.index(k) if isinstance(k, str) else k] ^= c
        return v

    def is_cartan(self, i: int) -> bool:
        return self.labels[i].startswith("H")

    def cartan_indices(self) -> list[int]:
        return [i for i in range(self.dim) if self.is_cartan(i)]

    def bracket(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.uint8)
        y = np.asarray(y, dtype=np.uint8)
        n = self.dim
        outer = self.F.mul_table[x[:, None], y[None, :]].reshape(1, n * n)
        return matmul(outer, self.table.reshape(n * n, n), self.F)[0]

    def ad(self, x) -> np.ndarray:
        """Matrix of ad x acting on column vectors: ad(x) @ y = [x, y]."""
        x = np.asarray(x, dtype=np.uint8)
        n = self.dim
        # M[k, j] = sum_i x_i table[i, j, k]
        m = matmul(x[None, :], self.table.reshape(n, n * n), self.F).reshape(n, n)
        return m.T.copy()

    def ad_matrices(self) -> list[np.ndarray]:
        if self._ad is None:
            self._ad = [self.table[i].T.copy() for i in range(self.dim)]
        return self._ad

    def products(self):
        """Nonzero structure constants as lists.

        Returns (pairs, by_target): ``pairs`` maps i<j to the sparse value
        {k: c}; ``by_target[k]`` lists (i, j, c) with i<j and c the
        coefficient of b_k in [b_i, b_j].
        """
        if self._products is None:
            n = self.dim
            pairs: dict[tuple[int, int], dict[int, int]] = {}
            by_target: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    nz = np.nonzero(self.table[i, j])[0]
                    if nz.size:
                        pairs[(i, j)] = {int(k): int(self.table[i, j, k]) for k in nz}
                        for k in nz:
                            by_target[int(k)].append((i, j, int(self.table[i, j, k])))
            self._products = (pairs, by_target)
        return self._products

    def jacobi_violations(self) -> list[tuple[int, int, int]]:
        """Basis triples i<j<k on which the Jacobi identity fails."""
        n = self.dim
        T = self.table
        # J[i,j,k,:] = [[i,j],k] + [[j,k],i] + [[k,i],j]
        P = matmul(T.reshape(n * n, n), T.reshape(n, n * n), self.F).reshape(n, n, n, n)
        J = P ^ P.transpose(1, 2, 0, 3) ^ P.transpose(2, 0, 1, 3)
        bad = np.argwhere(J.any(axis=3))
        return sorted({tuple(sorted(map(int, b))) for b in bad if len(set(b)) == 3})

    def is_alternating(self) -> bool:
        T = self.table
        return bool(np.array_equal(T, T.transpose(1, 0, 2))) and not any(T[i, i].any() for i in range(self.dim))

    def is_lie(self) -> bool:
        return self.is_alternating() and not self.jacobi_violations()

    def structure_constants(self) -> dict[tuple[str, str], dict[str, int]]:
        pairs, _ = self.products()
        return {(self.labels[i], self.labels[j]): {self.labels[k]: c for k, c in v.items()}
                for (i, j), v in pairs.items()}

    # -- 6x6 matrix realisation ------------------------------------------

    def to_matrix(self, x) -> np.ndarray:
        """Lift through the section s: E_{eps_i-eps_j} -> e_i (x) f_j, H_i -> E_ii + E_{i+1,i+1}."""
        self._need_realization()
        M = np.zeros((6, 6), dtype=np.uint8)
        for idx, c in enumerate(np.asarray(x, dtype=np.uint8)):
            if not c:
                continue
            kind = parse_label(self.labels[idx])
            if kind[0] == "H":
                i = kind[1]
                M[i - 1, i - 1] ^= c
                M[i, i] ^= c
            else:
                M[kind[1] - 1, kind[2] - 1] ^= c
        return M

    def from_matrix(self, M) -> np.ndarray:
        """Project a traceless 6x6 matrix back to coordinates."""
        self._need_realization()
        M = np.asarray(M, dtype=np.uint8)
        d = [int(M[i, i]) for i in range(6)]
        if d[0] ^ d[1] ^ d[2] ^ d[3] ^ d[4] ^ d[5]:
            raise FieldError("matrix is not traceless")
        x = np.zeros(self.dim, dtype=np.uint8)
        for (i, j) in ROOT_PAIRS:
            x[self.index(root_label(i, j))] = M[i - 1, j - 1]
        # diag = sum c_i H_i: c_i = d_1 + ... + d_i
        c = []
        acc = 0
        for i in range(5):
            acc ^= d[i]
            c.append(acc)
        if self.realization == "sl6":
            for i in range(5):
                x[self.index(f"H{i + 1}")] = c[i]
        else:
            # H5 = H1 + H3 modulo the centre H1 + H3 + H5
            c[0] ^= c[4]
            c[2] ^= c[4]
            for i in range(4):
                x[self.index(f"H{i + 1}")] = c[i]
        return x

    def _need_realization(self):
        if self.realization not in ("sl6", "sl6/Z"):
            raise TypeError("this algebra carries no sl(6) realisation")

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name or '?'}, dim={self.dim}, GF(2^{self.F.e}))"


def _basis_sl6():
    labels = [f"H{i}" for i in range(1, 6)] + [root_label(i, j) for i, j in ROOT_PAIRS]
    weights = [rootsys.ZERO] * 5 + [rootsys.root(i, j) for i, j in ROOT_PAIRS]
    return labels, weights


def _coroot_pairing(alpha, i: int) -> int:
    # <alpha, alpha_i^vee> mod 2
    return (alpha[i - 1] - alpha[i]) % 2


@lru_cache(maxsize=None)
def build_sl6(e: int = 1) -> LieAlgebra:
    """A = sl(6) over GF(2^e) from the Chevalley rules (all constants 0 or 1)."""
    F = field(e)
    labels, weights = _basis_sl6()
    n = len(labels)
    idx = {lab: k for k, lab in enumerate(labels)}
    T = np.zeros((n, n, n), dtype=np.uint8)

    def put(a, b, k):
        T[a, b, k] ^= 1
        T[b, a, k] ^= 1

    for (i, j) in ROOT_PAIRS:
        a = idx[root_label(i, j)]
        alpha = rootsys.root(i, j)
        for h in range(1, 6):
            if _coroot_pairing(alpha, h):
                put(idx[f"H{h}"], a, a)
    for (i, j) in ROOT_PAIRS:
        for (k, l) in ROOT_PAIRS:
            a, b = idx[root_label(i, j)], idx[root_label(k, l)]
            if a >= b:
                continue
            if (i, j) == (l, k):
                lo, hi = min(i, j), max(i, j)
                for h in range(lo, hi):
                    put(a, b, idx[f"H{h}"])
            else:
                s = rootsys.add(rootsys.root(i, j), rootsys.root(k, l))
                if rootsys.is_root(s):
                    p, q = rootsys.root_indices(s)
                    put(a, b, idx[root_label(p, q)])
    return LieAlgebra(T, labels, weights, F, realization="sl6", name="A=sl(6)")


def center(alg: LieAlgebra) -> list[np.ndarray]:
    """Basis of {z : [z, x] = 0 for all x}."""
    n = alg.dim
    # rows indexed by (j, k): coefficient of b_k in [z, b_j]
    stacked = alg.table.transpose(1, 2, 0).reshape(n * n, n)
    return kernel_basis(Matrix(stacked, alg.F))


def quotient_by_center(alg: LieAlgebra) -> LieAlgebra:
    """L = A/Z with basis H1..H4 and the root vectors."""
    if alg.realization != "sl6":
        raise ValueError("quotient_by_center expects the algebra built by build_sl6")
    z = center(alg)
    expected = alg.element({"H1": 1, "H3": 1, "H5": 1})
    if len(z) != 1:
        raise ValueError(f"centre has dimension {len(z)}, expected 1")
    span = Echelon(alg.dim, alg.F)
    span.add(z[0])
    if expected not in span:
        raise ValueError("centre is not spanned by H1 + H3 + H5")
    F = alg.F
    labels = [f"H{i}" for i in range(1, 5)] + [root_label(i, j) for i, j in ROOT_PAIRS]
    weights = [rootsys.ZERO] * 4 + [rootsys.root(i, j) for i, j in ROOT_PAIRS]
    n = len(labels)
    lift = [alg.index(lab) for lab in labels]
    # projection A -> L
    P = np.zeros((n, alg.dim), dtype=np.uint8)
    for k, a in enumerate(lift):
        P[k, a] = 1
    h5 = alg.index("H5")
    P[labels.index("H1"), h5] = 1
    P[labels.index("H3"), h5] = 1
    T = np.zeros((n, n, n), dtype=np.uint8)
    for a in range(n):
        for b in range(n):
            T[a, b] = matmul(P, alg.table[lift[a], lift[b]][:, None], F)[:, 0]
    L = LieAlgebra(T, labels, weights, F, realization="sl6/Z", name="L=sl(6)/Z")
    return L


@lru_cache(maxsize=None)
def build_L(e: int = 1) -> LieAlgebra:
    """The shared (cached) quotient L over GF(2^e)."""
    return quotient_by_center(build_sl6(e))


def _as_matrix(g, F: GF) -> Matrix:
    if isinstance(g, Matrix):
        if g.F is not F:
            raise FieldError("group element and algebra live over different fields")
        return g
    return Matrix(g, F)


def automorphism(g, alg: LieAlgebra) -> np.ndarray:
    """Matrix (columns = images of basis vectors) of x -> g x g^{-1}."""
    gm = _as_matrix(g, alg.F)
    if gm.shape != (6, 6):
        raise ValueError("g must be 6x6")
    ginv = inverse(gm).a  # raises on singular g
    F = alg.F
    cols = []
    for k in range(alg.dim):
        M = alg.to_matrix(alg.basis_vector(k))
        cols.append(alg.from_matrix(matmul(matmul(gm.a, M, F), ginv, F)))
    return np.array(cols, dtype=np.uint8).T.copy()


def act_gl(g, x, alg: LieAlgebra) -> np.ndarray:
    """g . x = s^{-1}(g s(x) g^{-1}), with the diagonal read modulo the identity."""
    gm = _as_matrix(g, alg.F)
    ginv = inverse(gm).a
    F = alg.F
    M = alg.to_matrix(x)
    return alg.from_matrix(matmul(matmul(gm.a, M, F), ginv, F))

"""Alternating cochains C^k(L, L) over characteristic 2.

A cochain of degree k stores its values on strictly increasing k-tuples of
basis indices: ``entries[(i1, ..., ik)] = {m: coeff}``.  Characteristic 2
makes alternating maps symmetric, so evaluating on any permutation of a
stored tuple gives the stored value and any repeated argument gives 0.

Two evaluation strategies exist for the differential and the cup product:
a sparse push-forward over stored entries, and dense tensor contraction
(degree <= 2).  ``method="auto"`` picks by size; both are kept so they can
be checked against each other.
"""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations, permutations

import numpy as np

from . import rootsys
from .chevalley import LieAlgebra, automorphism, parse_label
from .field_linalg import inverse, matmul, Matrix

MAX_DEGREE = 4
_DENSE_LIMIT = 2


class Cochain:
    def __init__(self, alg: LieAlgebra, degree: int, entries=None):
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree {degree} outside 0..{MAX_DEGREE}")
        self.alg = alg
        self.degree = degree
        clean: dict[tuple[int, ...], dict[int, int]] = {}
        for args, val in (entries or {}).items():
            args = tuple(int(a) for a in args)
            if len(args) != degree:
                raise ValueError(f"entry {args} has wrong arity for degree {degree}")
            if any(args[i] >= args[i + 1] for i in range(degree - 1)):
                raise ValueError(f"entry {args} is not strictly increasing")
            v = {int(m): int(c) for m, c in val.items() if c}
            if v:
                clean[args] = v
        self.entries = clean

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls, alg: LieAlgebra, degree: int) -> Cochain:
        return cls(alg, degree)

    @classmethod
    def from_terms(cls, alg: LieAlgebra, degree: int, terms) -> Cochain:
        """Sum of terms (args, out_index, coeff); args in any order."""
        acc: dict = defaultdict(dict)
        for args, m, c in terms:
            if len(set(args)) < len(args):
                continue
            key = tuple(sorted(args))
            acc[key][m] = acc[key].get(m, 0) ^ c
        return cls(alg, degree, acc)

    @classmethod
    def from_sets(cls, alg: LieAlgebra, sets) -> Cochain:
        """Cochain from "sets" ([arg roots], value root), roots as weights."""
        terms = []
        degree = None
        for args, value in sets:
            idx = [alg.index(_root_label(r)) for r in args]
            degree = len(idx) if degree is None else degree
            terms.append((idx, alg.index(_root_label(value)), 1))
        return cls.from_terms(alg, degree or 0, terms)

    @classmethod
    def from_dense(cls, alg: LieAlgebra, degree: int, D: np.ndarray) -> Cochain:
        nz = np.argwhere(D)
        entries: dict = defaultdict(dict)
        if degree:
            keep = np.all(nz[:, 1:degree] > nz[:, : degree - 1], axis=1) if degree > 1 else np.ones(len(nz), bool)
            nz = nz[keep]
        vals = D[tuple(nz.T)] if len(nz) else []
        for row, c in zip(nz.tolist(), np.asarray(vals).tolist()):
            entries[tuple(row[:degree])][row[degree]] = c
        return cls(alg, degree, entries)

    # -- basic algebra ---------------------------------------------------

    @property
    def F(self):
        return self.alg.F

    def __len__(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def terms(self):
        for args, v in self.entries.items():
            for m, c in v.items():
                yield args, m, c

    def n_terms(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.alg.dim == other.alg.dim and self.entries == other.entries)

    def __hash__(self):
        return hash((self.degree, frozenset((a, frozenset(v.items())) for a, v in self.entries.items())))

    def _check_compatible(self, other: Cochain):
        if self.degree != other.degree or self.alg.dim != other.alg.dim:
            raise ValueError("cochains of different degree or on different algebras")

    def __add__(self, other: Cochain) -> Cochain:
        self._check_compatible(other)
        out = {a: dict(v) for a, v in self.entries.items()}
        for a, v in other.entries.items():
            w = out.setdefault(a, {})
            for m, c in v.items():
                w[m] = w.get(m, 0) ^ c
        return Cochain(self.alg, self.degree, out)

    __sub__ = __add__

    def scale(self, c: int) -> Cochain:
        if c == 0:
            return Cochain.zero(self.alg, self.degree)
        mul = self.F.mul
        return Cochain(self.alg, self.degree,
                       {a: {m: mul(c, x) for m, x in v.items()} for a, v in self.entries.items()})

    def map_coefficients(self, f) -> Cochain:
        return Cochain(self.alg, self.degree,
                       {a: {m: f(x) for m, x in v.items()} for a, v in self.entries.items()})

    def value(self, *args: int) -> dict[int, int]:
        """Value on basis indices (any order) as a sparse dict."""
        if len(set(args)) < len(args):
            return {}
        return dict(self.entries.get(tuple(sorted(args)), {}))

    def value_vector(self, *args: int) -> np.ndarray:
        v = np.zeros(self.alg.dim, dtype=np.uint8)
        for m, c in self.value(*args).items():
            v[m] = c
        return v

    def evaluate(self, *args) -> np.ndarray:
        """Multilinear alternating extension of the table to vectors."""
        if len(args) != self.degree:
            raise ValueError(f"cochain of degree {self.degree} evaluated on {len(args)} arguments")
        vecs = [np.asarray(a, dtype=np.uint8) for a in args]
        mul = self.F.mul
        out = np.zeros(self.alg.dim, dtype=np.uint8)
        for T, v in self.entries.items():
            coef = 0
            for perm in permutations(T):
                p = 1
                for vec, idx in zip(vecs, perm):
                    p = mul(p, int(vec[idx]))
                    if not p:
                        break
                coef ^= p
            if coef:
                for m, c in v.items():
                    out[m] ^= mul(coef, c)
        return out

    # -- dense form --------------------------------------------------------

    def to_dense(self) -> np.ndarray:
        n, k = self.alg.dim, self.degree
        D = np.zeros((n,) * (k + 1), dtype=np.uint8)
        for T, v in self.entries.items():
            ms = list(v)
            cs = [v[m] for m in ms]
            for perm in set(permutations(T)):
                D[perm][ms] = cs
        return D

    # -- grading and diagnostics -----------------------------------------

    def entry_weight(self, args, m) -> rootsys.Weight:
        wts = self.alg.weights
        return rootsys.sub(wts[m], rootsys.add(*(wts[a] for a in args)) if args else rootsys.ZERO)

    def weight_components(self) -> dict[rootsys.Weight, Cochain]:
        parts: dict = defaultdict(lambda: defaultdict(dict))
        for args, m, c in self.terms():
            parts[self.entry_weight(args, m)][args][m] = c
        return {w: Cochain(self.alg, self.degree, e) for w, e in parts.items()}

    def weights(self) -> set:
        return {self.entry_weight(a, m) for a, m, _ in self.terms()}

    def set_count(self) -> int:
        """Number of "sets": root-vector arguments mapped to a root vector with coefficient 1.

        Entries whose value has a Cartan coordinate are not counted.
        """
        cartan = set(self.alg.cartan_indices())
        count = 0
        for args, v in self.entries.items():
            if any(a in cartan for a in args) or any(m in cartan for m in v):
                continue
            count += sum(1 for c in v.values() if c == 1)
        return count

    def sets(self) -> list[tuple[tuple[str, ...], str]]:
        cartan = set(self.alg.cartan_indices())
        labels = self.alg.labels
        out = []
        for args, v in sorted(self.entries.items()):
            if any(a in cartan for a in args) or any(m in cartan for m in v):
                continue
            for m, c in sorted(v.items()):
                if c == 1:
                    out.append((tuple(labels[a] for a in args), labels[m]))
        return out

    def restrict(self, pred) -> Cochain:
        """Sub-cochain of the entries (args, value-dict) accepted by pred."""
        return Cochain(self.alg, self.degree, {a: v for a, v in self.entries.items() if pred(a, v)})

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, entries={len(self.entries)})"


def _root_label(w) -> str:
    i, j = rootsys.root_indices(tuple(w))
    return f"E+{i}-{j}"


def bracket_cochain(alg: LieAlgebra) -> Cochain:
    """The Lie bracket of ``alg`` as a 2-cochain."""
    pairs, _ = alg.products()
    return Cochain(alg, 2, pairs)


def zero_cochain_from_vector(alg: LieAlgebra, x) -> Cochain:
    x = np.asarray(x, dtype=np.uint8)
    return Cochain(alg, 0, {(): {int(m): int(x[m]) for m in np.nonzero(x)[0]}})


# ---------------------------------------------------------------------------
# differential

def differential(c: Cochain, method: str = "auto") -> Cochain:
    """Chevalley-Eilenberg differential; every sign is +1 in characteristic 2.

    (dc)(x_0..x_k) = sum_i [x_i, c(..^x_i..)] + sum_{i<j} c([x_i, x_j], ..^x_i..^x_j..)
    """
    if c.degree >= MAX_DEGREE:
        raise ValueError(f"differential of a degree-{c.degree} cochain is not supported")
    if method == "auto":
        method = "dense" if c.degree <= _DENSE_LIMIT and len(c) > 400 else "sparse"
    if method == "dense":
        if c.degree > _DENSE_LIMIT:
            raise ValueError("dense differential only for degree <= 2")
        return Cochain.from_dense(c.alg, c.degree + 1, _dense_differential(c.alg, c.to_dense(), c.degree))
    if method != "sparse":
        raise ValueError(f"unknown method {method!r}")
    return _sparse_differential(c)


def _sparse_differential(c: Cochain) -> Cochain:
    alg, F = c.alg, c.F
    mul = F.mul
    pairs, by_target = alg.products()
    n = alg.dim
    acc: dict = defaultdict(dict)

    def put(S, m, x):
        d = acc[S]
        d[m] = d.get(m, 0) ^ x

    for T, v in c.entries.items():
        tset = set(T)
        # [x_a, c(T)]
        for a in range(n):
            if a in tset:
                continue
            S = tuple(sorted(T + (a,)))
            for m, x in v.items():
                br = pairs.get((a, m) if a < m else (m, a))
                if br:
                    for o, s in br.items():
                        put(S, o, mul(s, x))
        # c([x_p, x_q], R) with T = R + {u}
        for pos, u in enumerate(T):
            R = T[:pos] + T[pos + 1:]
            rset = set(R)
            for p, q, s in by_target[u]:
                if p in rset or q in rset:
                    continue
                S = tuple(sorted(R + (p, q)))
                for m, x in v.items():
                    put(S, m, mul(s, x))
    return Cochain(alg, c.degree + 1, acc)


def _slot_transpose(arr: np.ndarray, src_for_slot: list[int]) -> np.ndarray:
    return arr.transpose(src_for_slot + [arr.ndim - 1])


def _dense_differential(alg: LieAlgebra, C: np.ndarray, k: int) -> np.ndarray:
    n, F = alg.dim, alg.F
    T = alg.table
    out = np.zeros((n,) * (k + 2), dtype=np.uint8)
    # Z[r1..rk, a, o] = [b_a, c(r1..rk)]_o
    Z = matmul(C.reshape(n ** k, n), T.transpose(1, 0, 2).reshape(n, n * n), F).reshape((n,) * (k + 2))
    for i in range(k + 1):
        src = [s if s < i else s - 1 for s in range(k + 1)]
        src[i] = k
        out ^= _slot_transpose(Z, src)
    if k >= 1:
        # W[p, q, r2..rk, o] = c([b_p, b_q], r2..rk)_o
        W = matmul(T.reshape(n * n, n), C.reshape(n, n ** k), F).reshape((n,) * (k + 2))
        for i, j in combinations(range(k + 1), 2):
            src = []
            nxt = 2
            for s in range(k + 1):
                if s == i:
                    src.append(0)
                elif s == j:
                    src.append(1)
                else:
                    src.append(nxt)
                    nxt += 1
            out ^= _slot_transpose(W, src)
    return out


# ---------------------------------------------------------------------------
# cup product and bracket

def cup(a: Cochain, b: Cochain, method: str = "auto") -> Cochain:
    """(a cup b)(x, y, z) = a(b(x, y), z) + a(b(y, z), x) + a(b(z, x), y)."""
    if a.degree != 2 or b.degree != 2:
        raise ValueError("cup is defined here for two 2-cochains")
    a._check_compatible(b)
    if method == "auto":
        method = "dense" if b.n_terms() + a.n_terms() > 400 else "sparse"
    if method == "dense":
        n, F = a.alg.dim, a.F
        A, B = a.to_dense(), b.to_dense()
        Y = matmul(B.reshape(n * n, n), A.reshape(n, n * n), F).reshape(n, n, n, n)
        D = Y ^ Y.transpose(2, 0, 1, 3) ^ Y.transpose(1, 2, 0, 3)
        return Cochain.from_dense(a.alg, 3, D)
    if method != "sparse":
        raise ValueError(f"unknown method {method!r}")
    mul = a.F.mul
    n = a.alg.dim
    acc: dict = defaultdict(dict)
    aent = a.entries
    for P, w in b.entries.items():
        for r in range(n):
            if r in P:
                continue
            val: dict[int, int] = {}
            for m, x in w.items():
                if m == r:
                    continue
                av = aent.get((m, r) if m < r else (r, m))
                if av:
                    for o, y in av.items():
                        val[o] = val.get(o, 0) ^ mul(x, y)
            if val:
                S = tuple(sorted(P + (r,)))
                d = acc[S]
                for o, y in val.items():
                    d[o] = d.get(o, 0) ^ y
    return Cochain(a.alg, 3, acc)


def cbracket(a: Cochain, b: Cochain, method: str = "auto") -> Cochain:
    """[a, b] = a cup b + b cup a."""
    return cup(a, b, method) + cup(b, a, method)


# ---------------------------------------------------------------------------
# GL(6) action

def _mode_product(C: np.ndarray, M: np.ndarray, axis: int, F) -> np.ndarray:
    # out[..., i, ...] = sum_j C[..., j, ...] M[j, i]
    moved = np.moveaxis(C, axis, -1)
    shp = moved.shape
    r = matmul(moved.reshape(-1, shp[-1]), M, F).reshape(shp)
    return np.moveaxis(r, -1, axis)


def act(g, c: Cochain) -> Cochain:
    """(g.c)(x_1..x_k) = g . c(g^{-1} x_1, ..., g^{-1} x_k)."""
    G = automorphism(g, c.alg)
    Gi = inverse(Matrix(G, c.F)).a
    F = c.F
    D = c.to_dense()
    for ax in range(c.degree):
        D = _mode_product(D, Gi, ax, F)
    D = _mode_product(D, G.T.copy(), c.degree, F)
    return Cochain.from_dense(c.alg, c.degree, D)


def arg_labels(c: Cochain, args) -> list[str]:
    return [c.alg.labels[a] for a in args]


def is_root_index(alg: LieAlgebra, i: int) -> bool:
    return parse_label(alg.labels[i])[0] == "E"

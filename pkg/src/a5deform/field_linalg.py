"""Arithmetic in GF(2^e) and exact linear algebra over it.

Field elements are plain Python ints holding the bit pattern of the element
in the polynomial basis.  Vectors and matrices are ``numpy.uint8`` arrays.
Over GF(2) the row reduction runs on rows packed into Python ints, which
gives word-parallel XOR for free.

Fixed reduction polynomials (lexicographically smallest primitive ones)::

    e = 1   x + 1            (trivial)
    e = 2   x^2 + x + 1      0x7
    e = 4   x^4 + x + 1      0x13
    e = 8   x^8 + x^4 + x^3 + x^2 + 1   0x11d
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

MODULI = {1: 0b11, 2: 0b111, 4: 0b10011, 8: 0b100011101}


class FieldError(ValueError):
    pass


def _clmul_mod(a: int, b: int, e: int, modulus: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> e:
            a ^= modulus
    return r


@dataclass(frozen=True, eq=False)
class GF:
    """The field GF(2^e) with table-driven multiplication."""

    e: int
    modulus: int
    mul_table: np.ndarray = dc_field(repr=False)
    inv_table: np.ndarray = dc_field(repr=False)

    @property
    def order(self) -> int:
        return 1 << self.e

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def sqrt(self, a: int) -> int:
        # inverse of Frobenius: a^(2^(e-1))
        for _ in range(self.e - 1):
            a = self.mul(a, a)
        return a

    def generator(self) -> int:
        """The class of x, a primitive element (or 1 for GF(2))."""
        return 1 if self.e == 1 else 2

    # vectorised helpers on uint8 arrays
    def vmul(self, a, b) -> np.ndarray:
        return self.mul_table[np.asarray(a, dtype=np.uint8), np.asarray(b, dtype=np.uint8)]

    def scale(self, c: int, v: np.ndarray) -> np.ndarray:
        if c == 1:
            return v.copy()
        return self.mul_table[c][v]


@lru_cache(maxsize=None)
def field(e: int = 1) -> GF:
    """Return the (cached) field GF(2^e), e in {1, 2, 4, 8}."""
    if e not in MODULI:
        raise FieldError(f"unsupported field degree {e}; expected one of {sorted(MODULI)}")
    q = 1 << e
    mod = MODULI[e]
    mt = np.zeros((q, q), dtype=np.uint8)
    for a in range(q):
        for b in range(a, q):
            mt[a, b] = mt[b, a] = _clmul_mod(a, b, e, mod)
    inv = np.zeros(q, dtype=np.uint8)
    for a in range(1, q):
        inv[a] = int(np.nonzero(mt[a] == 1)[0][0])
    mt.setflags(write=False)
    inv.setflags(write=False)
    return GF(e, mod, mt, inv)


def to_hex(a: int) -> str:
    return format(int(a), "x")


def from_hex(s: str, F: GF | None = None) -> int:
    v = int(s, 16)
    if F is not None and not 0 <= v < F.order:
        raise FieldError(f"element {s!r} out of range for GF(2^{F.e})")
    return v


# ---------------------------------------------------------------------------
# matrices

class Matrix:
    """Dense matrix over GF(2^e); immutable by convention."""

    def __init__(self, entries, F: GF | int = 1):
        self.F = F if isinstance(F, GF) else field(F)
        a = np.array(entries, dtype=np.uint8)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError("matrix entries must be 2-dimensional")
        if a.size and int(a.max()) >= self.F.order:
            raise FieldError("entry out of range for the field")
        a.setflags(write=False)
        self.a = a

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @classmethod
    def zeros(cls, rows: int, cols: int, F=1) -> Matrix:
        return cls(np.zeros((rows, cols), dtype=np.uint8), F)

    @classmethod
    def identity(cls, n: int, F=1) -> Matrix:
        return cls(np.eye(n, dtype=np.uint8), F)

    def transpose(self) -> Matrix:
        return Matrix(self.a.T, self.F)

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return Matrix(matmul(self.a, other.a, self.F), self.F)
        v = np.asarray(other, dtype=np.uint8)
        if v.ndim == 1:
            return matmul(self.a, v[:, None], self.F)[:, 0]
        return matmul(self.a, v, self.F)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix(self.a ^ other.a, self.F)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.F is other.F and np.array_equal(self.a, other.a)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over GF(2^{self.F.e}))"


def matmul(a: np.ndarray, b: np.ndarray, F: GF | int = 1) -> np.ndarray:
    """Product of two uint8 arrays over GF(2^e)."""
    F = F if isinstance(F, GF) else field(F)
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if F.e == 1:
        return _gf2_matmul(a, b)
    # bit-sliced: e^2 binary products, then reduce the degree-(2e-2) polynomial
    e = F.e
    sa = [(a >> i) & 1 for i in range(e)]
    sb = [(b >> j) & 1 for j in range(e)]
    prod = [np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8) for _ in range(2 * e - 1)]
    for i in range(e):
        if not sa[i].any():
            continue
        for j in range(e):
            prod[i + j] ^= _gf2_matmul(sa[i], sb[j])
    low = F.modulus ^ (1 << e)
    for d in range(2 * e - 2, e - 1, -1):
        for k in range(e):
            if (low >> k) & 1:
                prod[d - e + k] ^= prod[d]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for k in range(e):
        out |= prod[k] << k
    return out


def _gf2_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float32 BLAS is exact while the inner dimension stays below 2^24
    if a.shape[-1] < (1 << 24):
        r = a.astype(np.float32) @ b.astype(np.float32)
        return (r.astype(np.int64) & 1).astype(np.uint8)
    return ((a.astype(np.int64) @ b.astype(np.int64)) & 1).astype(np.uint8)


def _pack_rows(a: np.ndarray) -> list[int]:
    # row i -> int with bit j set iff a[i, j] == 1
    if a.shape[1] == 0:
        return [0] * a.shape[0]
    packed = np.packbits(a.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


def _rref_gf2(rows: list[int], ncols: int):
    """Reduced row echelon form of packed rows; returns (rows, pivots)."""
    rows = list(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        for i in range(r, len(rows)):
            if rows[i] & bit:
                rows[r], rows[i] = rows[i], rows[r]
                break
        else:
            continue
        p = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= p
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rref_gfq(a: np.ndarray, F: GF):
    a = a.copy()
    mt = F.mul_table
    pivots: list[int] = []
    r = 0
    nrows, ncols = a.shape
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = mt[F.inv(int(a[r, c]))][a[r]]
        f = a[:, c].copy()
        f[r] = 0
        idx = np.nonzero(f)[0]
        if idx.size:
            a[idx] ^= mt[f[idx][:, None], a[r][None, :]]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(m: Matrix) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if m.F.e == 1:
        rows, piv = _rref_gf2(_pack_rows(m.a), m.cols)
        return _unpack_rows(rows, m.cols), piv
    return _rref_gfq(m.a, m.F)


def _unpack_rows(rows: list[int], ncols: int) -> np.ndarray:
    out = np.zeros((len(rows), ncols), dtype=np.uint8)
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            out[i, low.bit_length() - 1] = 1
            r ^= low
    return out


def rank(m: Matrix) -> int:
    if m.F.e == 1:
        # eliminate along the shorter side
        a = m.a if m.rows <= m.cols else m.a.T
        return len(_rref_gf2(_pack_rows(a), a.shape[1])[1])
    return len(_rref_gfq(m.a, m.F)[1])


def kernel_basis(m: Matrix) -> list[np.ndarray]:
    """Basis of {x : m x = 0}, one vector per free column."""
    R, piv = rref(m)
    n = m.cols
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for f in free:
        x = np.zeros(n, dtype=np.uint8)
        x[f] = 1
        # -R[i, f] == R[i, f] in characteristic 2
        for i, p in enumerate(piv):
            x[p] = R[i, f]
        basis.append(x)
    return basis


def solve(m: Matrix, rhs) -> np.ndarray | None:
    """Some x with m x = rhs, or None when rhs is outside the column span."""
    b = np.asarray(rhs, dtype=np.uint8)
    if b.shape != (m.rows,):
        raise ValueError(f"rhs has shape {b.shape}, expected ({m.rows},)")
    aug = Matrix(np.hstack([m.a, b[:, None]]), m.F)
    R, piv = rref(aug)
    if piv and piv[-1] == m.cols:
        return None
    x = np.zeros(m.cols, dtype=np.uint8)
    for i, p in enumerate(piv):
        x[p] = R[i, m.cols]
    return x


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    R, piv = rref(Matrix(np.hstack([m.a, np.eye(n, dtype=np.uint8)]), m.F))
    if piv[:n] != list(range(n)):
        raise FieldError("matrix is singular")
    return Matrix(R[:n, n:], m.F)


def det(m: Matrix) -> int:
    """Determinant (equal to the permanent in characteristic 2)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    F = m.F
    a = m.a.copy()
    n = m.rows
    d = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            a[[c, i]] = a[[i, c]]
        piv = int(a[c, c])
        d = F.mul(d, piv)
        inv = F.inv(piv)
        for r in range(c + 1, n):
            if a[r, c]:
                f = F.mul(int(a[r, c]), inv)
                a[r] ^= F.mul_table[f][a[c]]
    return d


def random_invertible(n: int, rng: np.random.Generator, F: GF | int = 1) -> Matrix:
    F = F if isinstance(F, GF) else field(F)
    while True:
        g = Matrix(rng.integers(0, F.order, size=(n, n), dtype=np.uint8), F)
        if rank(g) == n:
            return g


class Echelon:
    """Incrementally grown subspace of GF(2^e)^n kept in echelon form.

    ``add`` reduces a vector against the stored pivots and keeps the
    remainder when it is nonzero.
    """

    def __init__(self, n: int, F: GF | int = 1):
        self.n = n
        self.F = F if isinstance(F, GF) else field(F)
        self._rows: dict[int, np.ndarray] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v) -> np.ndarray:
        v = np.array(v, dtype=np.uint8)
        mt = self.F.mul_table
        for p, row in self._rows.items():
            c = int(v[p])
            if c:
                v ^= mt[c][row]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        p = int(nz[0])
        v = self.F.scale(self.F.inv(int(v[p])), v)
        mt = self.F.mul_table
        for q, row in self._rows.items():
            c = int(row[p])
            if c:
                row ^= mt[c][v]
        self._rows[p] = v
        return True

    def __contains__(self, v) -> bool:
        return not self.reduce(v).any()

    def basis(self) -> list[np.ndarray]:
        return [self._rows[p].copy() for p in sorted(self._rows)]

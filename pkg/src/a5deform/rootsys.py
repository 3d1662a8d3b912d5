"""Root system A5 in epsilon coordinates and weight bookkeeping.

A weight is a 6-tuple of ints: the coefficients of eps_1..eps_6.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations

Weight = tuple[int, int, int, int, int, int]

RANK = 6
ZERO: Weight = (0,) * RANK


def eps(i: int) -> Weight:
    """eps_i, 1-indexed."""
    w = [0] * RANK
    w[i - 1] = 1
    return tuple(w)


def root(i: int, j: int) -> Weight:
    """eps_i - eps_j, 1-indexed."""
    w = [0] * RANK
    w[i - 1] += 1
    w[j - 1] -= 1
    return tuple(w)


def add(*ws: Weight) -> Weight:
    return tuple(sum(c) for c in zip(*ws)) if ws else ZERO


def neg(w: Weight) -> Weight:
    return tuple(-c for c in w)


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, w: Weight) -> Weight:
    return tuple(k * c for c in w)


def simple_root(i: int) -> Weight:
    return root(i, i + 1)


def is_root(w: Weight) -> bool:
    return sorted(w) == [-1, 0, 0, 0, 0, 1]


def root_indices(w: Weight) -> tuple[int, int]:
    """(i, j) with w = eps_i - eps_j."""
    if not is_root(w):
        raise ValueError(f"{w} is not a root")
    return w.index(1) + 1, w.index(-1) + 1


@lru_cache(maxsize=None)
def _roots() -> tuple[Weight, ...]:
    return tuple(root(i, j) for i in range(1, 7) for j in range(1, 7) if i != j)


def roots() -> frozenset[Weight]:
    return frozenset(_roots())


def decompositions(mu: Weight, k: int, distinct_at_least: int = 0) -> list[tuple[Weight, ...]]:
    """All multisets of k roots summing to mu.

    Each multiset is a sorted tuple of roots.  With ``distinct_at_least``
    only multisets containing at least that many pairwise distinct roots
    are kept.
    """
    if not 1 <= k <= 4:
        raise ValueError("k must be in 1..4")
    if not 0 <= distinct_at_least <= k:
        raise ValueError("distinct_at_least must be in 0..k")
    mu = tuple(mu)
    rs = sorted(_roots())
    out: list[tuple[Weight, ...]] = []

    def rec(start: int, remaining: Weight, left: int, acc: list[Weight]):
        # a sum of `left` roots has positive part at most `left`
        if sum(c for c in remaining if c > 0) > left:
            return
        if left == 0:
            if remaining == ZERO:
                out.append(tuple(acc))
            return
        for idx in range(start, len(rs)):
            r = rs[idx]
            acc.append(r)
            rec(idx, sub(remaining, r), left - 1, acc)
            acc.pop()

    rec(0, mu, k, [])
    if distinct_at_least:
        out = [m for m in out if len(set(m)) >= distinct_at_least]
    return out


def weyl_orbit(mu: Weight) -> frozenset[Weight]:
    """Orbit of mu under S6 permuting the eps coordinates."""
    return frozenset(permutations(tuple(mu)))


@lru_cache(maxsize=None)
def _h2_weights() -> tuple[Weight, ...]:
    out = []
    for plus in combinations(range(6), 3):
        out.append(tuple(1 if i in plus else -1 for i in range(6)))
    return tuple(out)


def h2_weights() -> list[Weight]:
    """The 20 weights with three +1 and three -1 coordinates.

    Ordered lexicographically by the index triple carrying +1, so the first
    one is eps_1 + eps_2 + eps_3 - eps_4 - eps_5 - eps_6.
    """
    return list(_h2_weights())


def is_h2_weight(mu: Weight) -> bool:
    return tuple(mu) in set(_h2_weights())


def h2_weight_of_triple(triple) -> Weight:
    """sum_{i in T} eps_i - sum_{j not in T} eps_j for a 1-indexed triple T."""
    t = set(triple)
    if len(t) != 3 or not t <= set(range(1, 7)):
        raise ValueError(f"bad index triple {triple}")
    return tuple(1 if i in t else -1 for i in range(1, 7))


def triple_of_h2_weight(mu: Weight) -> tuple[int, int, int]:
    if not is_h2_weight(mu):
        raise ValueError(f"{mu} is not an H^2 weight")
    return tuple(i + 1 for i, c in enumerate(mu) if c == 1)


def multiset_key(m) -> Counter:
    return Counter(tuple(r) for r in m)


def format_weight(w: Weight) -> str:
    terms = []
    for i, c in enumerate(w, start=1):
        if c == 0:
            continue
        sign = "+" if c > 0 else "-"
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append(f"{sign}{mag}e{i}")
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s

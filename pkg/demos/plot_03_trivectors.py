"""
Trivectors and cocycle classes
==============================

H^2(L, L) is identified with trivectors on a 6-dimensional space.  The rank
of a trivector separates the GL(6) orbits up to rank 6.
"""

import numpy as np

from a5deform import trivector as tv
from a5deform import build_L, classes_equal, psi1, psi2
from a5deform.cochain import act
from a5deform.field_linalg import field, random_invertible

L = build_L()
for tag in tv.TAGS:
    w = tv.canonical(tag)
    print(tag, w, "rank", tv.rank(w), tv.classify(w))

# canonical forms II and III go to psi1 and psi1 + psi2
print(tv.to_cocycle(tv.canonical("II"), L) == psi1(L))
print(tv.to_cocycle(tv.canonical("III"), L) == psi1(L) + psi2(L))

# moving the trivector by g moves the class by g
rng = np.random.default_rng(1)
g = random_invertible(6, rng, field(1))
w = tv.canonical("III")
print("equivariant:", classes_equal(act(g, tv.to_cocycle(w, L)), tv.to_cocycle(tv.act(g, w), L)))

# rank-6 forms: V splits as a sum of two decomposables over GF(2), IV does not
print("split V:", tv.split_rank6(tv.canonical("V")) is not None)
print("split IV:", tv.split_rank6(tv.canonical("IV")) is not None)

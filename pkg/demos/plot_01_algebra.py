"""
sl(6) mod 2 and its quotient
============================

Build sl(6) over GF(2) in the Chevalley basis, find its centre and pass to
the 34-dimensional quotient L.
"""

import numpy as np

from a5deform import build_L, build_sl6, center

A = build_sl6()
print(A, "is a Lie algebra:", A.is_lie())

# the identity matrix is traceless in characteristic 2, so it spans the centre
z = center(A)
print("centre:", [A.labels[i] for i in np.nonzero(z[0])[0]])

L = build_L()
print(L, "centre dim", len(center(L)))

# in L the bracket [E+5-6, E+6-5] lands on H1 + H3, since H5 = H1 + H3 modulo the centre
x = L.bracket(L.basis_vector("E+5-6"), L.basis_vector("E+6-5"))
print("[E+5-6, E+6-5] =", " + ".join(L.labels[i] for i in np.nonzero(x)[0]))

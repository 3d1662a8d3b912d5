"""
Global deformations of types II and III
=======================================

psi1 alone integrates with no correction.  For psi1 + psi2 the obstruction
[psi1, psi2] is d(phi) for a six-entry cochain phi, and the series stops at t^2.
"""

from a5deform import build_L, build_type_ii, build_type_iii, psi1, psi2
from a5deform.cochain import cbracket, cup, differential
from a5deform.deform import jacobi_status, obstruction_status, phi_cochain

L = build_L()
p1, p2 = psi1(L), psi2(L)
print("psi1 cup psi2:", cup(p1, p2).set_count(), "sets")
print("psi2 cup psi1:", cup(p2, p1).set_count(), "sets")
print("[psi1, psi2]:", cbracket(p1, p2).set_count(), "sets")

phi = phi_cochain(L)
for args, value in phi.sets():
    print("  phi", args, "->", value)
print("d(phi) == [psi1, psi2]:", differential(phi) == cbracket(p1, p2))

# Jacobiator coefficients by power of t (number of nonzero entries)
print("type II:", jacobi_status(build_type_ii()))
print("type III:", jacobi_status(build_type_iii()))

rep = obstruction_status(p1 + p2)
print("obstruction of psi1 + psi2 is a coboundary:", rep.is_coboundary)

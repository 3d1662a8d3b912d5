"""
Simplicity of the deformed algebras
===================================

Setting t = 1 gives new 34-dimensional Lie algebras.  Norton's test on the
adjoint module either certifies irreducibility or returns an ideal.
"""

from a5deform import build_sl6, build_type_ii, build_type_iii, is_simple, specialize

for f in (build_type_ii(), build_type_iii()):
    alg = specialize(f, 1)
    rep = is_simple(alg, seed=0)
    print(alg.name, rep.verdict, "after", rep.trials_used, "trials, nullity", rep.certificate["nullity"])

# sl(6) itself is not simple: the test hands back an ideal
rep = is_simple(build_sl6(), seed=0)
print("sl(6):", rep.verdict, "of dim", len(rep.witness))

# over GF(4), any nonzero t0 works the same way
f = build_type_iii(2)
print("type III at t0 = generator of GF(4):", is_simple(specialize(f, f.alg.F.generator()), seed=0).verdict)

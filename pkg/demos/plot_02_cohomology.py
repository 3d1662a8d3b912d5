"""
Second cohomology by weight blocks
==================================

The differential preserves the weight grading, so H^2(L, L) is computed one
weight at a time.  Only twenty weights carry cohomology.
"""

from a5deform import h2_summary, build_L, rootsys

L = build_L()
summary = h2_summary(L)
print("dim H^2 =", summary.total, "from", len(summary.blocks), "weight blocks")

for w in summary.h2_weights()[:5]:
    b = summary.blocks[w]
    print(rootsys.format_weight(w), "Z2 =", b.dim_z2, "B2 =", b.dim_b2)

# the twenty weights form one Weyl orbit
mu = (1, -1, 1, -1, 1, -1)
print("orbit of", rootsys.format_weight(mu), "matches:", set(summary.h2_weights()) == rootsys.weyl_orbit(mu))

# a basis cocycle sends pairs of root vectors to root vectors
psi = summary.cocycles[(1, 1, 1, -1, -1, -1)]
print(psi.set_count(), "sets, first few:", psi.sets()[:3])

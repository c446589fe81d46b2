"""
Principal components of the character torus
===========================================

Each face of quasiadjunction exponentiates to a translated subtorus of the
character torus (C^*)^r.  Merging faces that land on the same subtorus and
keeping the largest quotient dimension gives the principal components, the
positive-dimensional part of the characteristic variety prediction.
"""

from quasiadj import (
    classify_essential,
    cone_over,
    generic_arrangement,
    polynomial_invariant,
    principal_components,
)

# four generic hyperplanes through the origin: one component, the full torus
# cut by t1 t2 t3 t4 = 1
arr = generic_arrangement(4, 2)
for comp in principal_components(arr):
    print("arrangement component:", comp.torus.equations, " k =", comp.k)

# a weighted cone keeps the weights in the exponents
cone = cone_over((2, 3), 2, 3)
comps = principal_components(cone)
print("cone component:", comps[0].torus.equations, " k =", comps[0].k)

# with one branch the components degenerate to eigenvalue points
for comp in principal_components(cone_over((6,), 1, 3)):
    print("eigenvalue point at phase %s with k = %d" % (comp.torus.equations[0][1], comp.k))

# for codimension-one components the same data prints as one Laurent
# polynomial, with conjugate translates collected into cyclotomic factors
print("invariant polynomial:", polynomial_invariant(comps, cone.r))

# components that survive deleting a branch are flagged nonessential
report = classify_essential(cone_over((2, 3, 4), 2, 0))
print("essential: %d  nonessential: %d" % (len(report.essential), len(report.nonessential)))

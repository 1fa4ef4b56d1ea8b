"""Exact invariants at rational parameter values.

Series profiles, centers, and derivation algebras are computed over Q by
fraction-free elimination after substituting rational values for t and
alpha.  The tour ends on a genuine discovery: one family member at a
special parameter value acquires a semisimple derivation.
Run me with:  python demos/04_invariants_tour.py
"""

from fractions import Fraction

from filicert import (RationalAlgebra, ScalarMatrix, SubspaceSpec, deform,
                      go_cocycle, DeformationSpec, load_corpus,
                      structure_constants)
from filicert.invariants import (center_dim, derivation_algebra,
                                 derived_series,
                                 is_characteristically_nilpotent, is_filiform,
                                 lower_central_series)

corpus = load_corpus()

alg = corpus["mu15"]
mu = structure_constants(alg)
algebra = RationalAlgebra.from_structure(mu)
print("mu15:")
print("  lower central series:", lower_central_series(algebra))
print("  derived series:      ", derived_series(algebra))
print("  filiform:", is_filiform(algebra), " center dim:", center_dim(algebra))
dim, _ = derivation_algebra(algebra)
print("  dim Der:", dim, " characteristically nilpotent:",
      is_characteristically_nilpotent(algebra))

block = alg.deformation
spec = DeformationSpec(mu, SubspaceSpec(block.ideal), block.outside,
                       ScalarMatrix.diagonal(block.diagonal))
mu_t = deform(mu, go_cocycle(spec))
deformed = RationalAlgebra.from_structure(mu_t, t=1)
print("\nits deformation at t = 1:")
print("  lower central series:", lower_central_series(deformed),
      "(stabilizes at a nonzero dimension: not nilpotent)")
print("  derived series:      ", derived_series(deformed), "(reaches 0: solvable)")

print("\nthe family mu06 across parameter values:")
mu06 = structure_constants(corpus["mu06"])
for alpha in (Fraction(0), Fraction(2), Fraction(1, 3), Fraction(-1)):
    algebra = RationalAlgebra.from_structure(mu06, alpha=alpha)
    dim, basis = derivation_algebra(algebra)
    traces = sorted({sum(m[i][i] for i in range(8)) for m in basis})
    flag = is_characteristically_nilpotent(algebra)
    print(f"  alpha={alpha}: dim Der = {dim}, basis traces {traces}, "
          f"characteristically nilpotent: {flag}")
print("  -> alpha = -1 is an exceptional value: a derivation of nonzero trace")
print("     has a nonzero semisimple part, so the algebra has rank >= 1 there.")

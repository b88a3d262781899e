"""Walkthrough: triples, their invariants, the stratification by moment
determinants, and the relative Jordan decomposition.

Run: python3 demos/demo_invariants_jordan.py
"""

from fractions import Fraction as F

from jrlab import (Triple, canonical_decomposition, d_r, invariants,
                   is_semisimple, jordan, stratum)
from jrlab.gltilde import act


def show(X, label):
    print(f"{label}: A = {[list(map(str, r)) for r in X.A]}, "
          f"b = {list(map(str, X.b))}, c = {list(map(str, X.c))}")


# A triple is an endomorphism plus a vector plus a covector.  Its invariants
# are the characteristic polynomial coefficients together with the moments
# c A^i b, and they cut the space into strata by the rank of the moment
# matrix.
X = Triple([[F(0), F(1)], [F(0), F(0)]], [F(0), F(1)], [F(1), F(0)])
show(X, "X")
print("invariants:", invariants(X))
print("d_r values:", [str(d_r(X, r)) for r in range(0, 3)])
print("stratum:", stratum(X))
print()

# The invariants do not move under the group action.
g = [[F(1), F(2)], [F(0), F(1)]]
print("invariants of g.X:", invariants(act(g, X)))
print()

# A triple in an intermediate stratum decomposes canonically: the Krylov
# span of the vector against the annihilator of the covector iterates.
Y = Triple([[F(2), F(0), F(0)], [F(0), F(1), F(1)], [F(0), F(0), F(1)]],
           [F(1), F(0), F(0)], [F(3), F(0), F(0)])
print("stratum of Y:", stratum(Y))
dec = canonical_decomposition(Y)
print("plus basis:", [list(map(str, v)) for v in dec.basis_plus])
print("minus basis:", [list(map(str, v)) for v in dec.basis_minus])
print()

# The relative Jordan decomposition: a semisimple part with the same
# invariants plus a part with vanishing invariants.
Ys, Yn = jordan(Y)
show(Ys, "semisimple part")
show(Yn, "nilpotent part")
print("invariants preserved:", invariants(Ys) == invariants(Y))
print("nilpotent part has zero invariants:", invariants(Yn).is_nilpotent())
print("semisimple part is semisimple:", is_semisimple(Ys))

"""Walkthrough: the Cayley transform carries self-adjoint data to the two
twisted group varieties, and matched infinitesimal data stays matched at the
group level.

Run: python3 demos/demo_cayley_matching.py
"""

import random
from fractions import Fraction as F

from jrlab import linalg as la
from jrlab.fields import PLocalContext
from jrlab.hermitian import (HermitianForm, adjoint, cayley_gl,
                             cayley_inverse, cayley_u, extend_form,
                             group_moments, in_twisted_space, is_unitary,
                             match_invariants_group, standard_cayley_params)

ctx = PLocalContext(3)
params = standard_cayley_params(ctx, t=1, s=1)
print("tau =", params.tau, " xi =", params.xi)

# Rational side: a rational endomorphism of the extended space maps to an
# element of the twisted variety (g sigma(g) = 1), and back.
Y = [[F(1), F(2)], [F(0), F(1)]]
x = cayley_gl(Y, params)
print("\nimage entries:", [[str(v) for v in row] for row in x])
print("twisted involution holds:", in_twisted_space(x))
print("round trip recovers Y:", cayley_inverse(x, params) == [[ctx.embed(v) for v in row] for row in Y])

# Hermitian side: a self-adjoint endomorphism maps to a unitary element.
one, zero = ctx.embed(1), ctx.embed(0)
form = extend_form(HermitianForm([[one]], ctx))
A = [[ctx.embed(2), zero], [zero, ctx.embed(-1)]]
xu = cayley_u(A, form, params)
print("\nunitary image:", is_unitary(xu, form))

# Matching: build a rational endomorphism with the same characteristic
# polynomial and distinguished moments as a self-adjoint one, push both
# through their Cayley maps, and compare the group-level invariants.
rng = random.Random(5)
from jrlab.hermitian import matched_endomorphism_pair

for _ in range(3):
    Ygl, Yu = matched_endomorphism_pair(rng, 1, form)
    try:
        x1 = cayley_gl(Ygl, params)
        x2 = cayley_u(Yu, form, params)
    except ZeroDivisionError:
        continue
    print("\nmatched at the group level:", match_invariants_group(x1, x2, form))
    print("  twisted moments :", [str(m) for m in group_moments(x1, 1, 1)])
    print("  unitary moments :", [str(m) for m in group_moments(x2, 1, 1, form)])

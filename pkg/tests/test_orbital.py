import random
from fractions import Fraction as F

import pytest

from jrlab import linalg as la
from jrlab.fields import PLocalContext, eta, is_integral, valuation
from jrlab.gltilde import InvariantPoint, Triple, act, invariants, stratum
from jrlab.hermitian import (HermitianForm, HermitianPair,
                             hankel_pair_for_point, random_unitary,
                             unitary_act)
from jrlab.orbital import (Lattice, admissible_lattices_gl, fl_check,
                           gl_representative_of_point, hermite_normalize,
                           intermediate_lattices, is_instable, orbital_gl,
                           orbital_u, selfdual_admissible_lattices,
                           toy_gl_orbital, toy_transfer_check, toy_u_orbital)

CTX = PLocalContext(3)


def test_hermite_normal_form_canonical():
    rng = random.Random(40)
    for _ in range(60):
        n = rng.randint(1, 3)
        while True:
            B = [[F(rng.randint(-6, 6), rng.choice([1, 2, 3, 9]))
                  for _ in range(n)] for _ in range(n)]
            if la.det(B) != 0:
                break
        lat = hermite_normalize(B, CTX)
        # canonical: upper triangular, p-power diagonal
        for i in range(n):
            d = lat.basis[i][i]
            assert d == F(3) ** valuation(d, CTX)
            for j in range(i):
                assert lat.basis[i][j] == 0
        # change of basis by a p-unit matrix gives the same form
        while True:
            U = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
            d = la.det(U)
            if d != 0 and valuation(d, CTX) == 0 and \
               all(is_integral(x, CTX) for row in U for x in row):
                break
        lat2 = hermite_normalize(la.mat_mul(B, U), CTX)
        assert lat.basis == lat2.basis


def test_sandwich_example():
    # one-dimensional: unit vector, covector of valuation 2
    X = Triple([[F(1)]], [F(1)], [F(9)])
    lats = admissible_lattices_gl(X, CTX)
    assert sorted(l.basis[0][0] for l in lats) == [F(1, 9), F(1, 3), F(1)]
    assert orbital_gl(X, CTX).value == 1
    # odd valuation cancels
    assert orbital_gl(Triple([[F(1)]], [F(1)], [F(3)]), CTX).value == 0
    # unit determinant: a single lattice
    r = orbital_gl(Triple([[F(1)]], [F(1)], [F(2)]), CTX)
    assert r.lattice_count == 1 and r.value == 1


def test_sandwich_index_is_exact():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(1, 2)
        while True:
            X = Triple([[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)],
                       [F(rng.randint(-3, 3)) for _ in range(n)],
                       [F(rng.randint(-3, 3)) for _ in range(n)])
            if stratum(X) == n:
                break
        from jrlab.gltilde import basis_matrix, d_r, dual_krylov_rows
        K = basis_matrix(X)
        L = dual_krylov_rows(X, n)
        M = la.mat_mul(L, K)
        v = valuation(la.det(M), CTX)
        assert v == valuation(d_r(X, n), CTX)
        inter = intermediate_lattices(M, CTX)
        assert len(admissible_lattices_gl(X, CTX)) <= len(inter)


def test_hand_checked_n2_counts():
    # cyclic quotient of order 9: three stable lattices, alternating sum 1
    Xc = Triple([[F(0), F(0)], [F(1), F(0)]], [F(1), F(0)], [F(1), F(3)])
    assert len(admissible_lattices_gl(Xc, CTX)) == 3
    assert orbital_gl(Xc, CTX).value == 1
    # (p,p)-quotient with irreducible residual action: two of four middles
    # survive, signed sum cancels
    Xh = gl_representative_of_point(InvariantPoint((F(0), F(-1)), (F(3), F(0))))
    rh = orbital_gl(Xh, CTX)
    assert rh.lattice_count == 4 and rh.value == 0


def test_orbital_gl_representative_independence():
    rng = random.Random(42)
    for _ in range(15):
        n = rng.randint(1, 2)
        while True:
            X = Triple([[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)],
                       [F(rng.randint(-3, 3)) for _ in range(n)],
                       [F(rng.randint(-3, 3)) for _ in range(n)])
            if stratum(X) == n:
                break
        base = orbital_gl(X, CTX)
        while True:
            g = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            if la.det(g) != 0:
                break
        assert orbital_gl(act(g, X), CTX).value == base.value


def test_orbital_u_examples():
    one = CTX.embed(1)
    # rank one: valuation-2 unit of the form, one self-dual lattice
    form = HermitianForm([[CTX.embed(9)]], CTX)
    X = HermitianPair([[one]], [one], form)
    assert orbital_u(X, CTX).value == 1
    # odd valuation: the form has no self-dual lattice
    formo = HermitianForm([[CTX.embed(3)]], CTX)
    Xo = HermitianPair([[one]], [one], formo)
    assert orbital_u(Xo, CTX).value == 0
    # unit moment: one lattice
    Xu = hankel_pair_for_point(InvariantPoint((F(1),), (F(1),)), CTX)
    assert orbital_u(Xu, CTX).value == 1


def test_orbital_u_unitary_invariance():
    rng = random.Random(43)
    done = 0
    while done < 6:
        a = InvariantPoint((F(rng.randint(-3, 3)), F(rng.randint(-3, 3))),
                           (F(rng.randint(-3, 3)), F(rng.randint(-3, 3))))
        from jrlab.gltilde import d_r_of_point
        d = d_r_of_point(a, 2)
        if d == 0 or not (0 <= valuation(d, CTX) <= 2):
            continue
        try:
            X = hankel_pair_for_point(a, CTX)
            base = orbital_u(X, CTX)
        except ValueError:
            continue
        g = random_unitary(X.form, rng)
        gX = unitary_act(g, X)
        assert orbital_u(gX, CTX).value == base.value
        done += 1


def test_toy_orbitals():
    assert toy_gl_orbital(9, CTX) == 1
    assert toy_gl_orbital(3, CTX) == 0
    assert toy_gl_orbital(0, CTX) == 1
    # negative valuations give the empty sum on both sides
    assert toy_gl_orbital(F(1, 9), CTX) == 0
    assert toy_gl_orbital(F(1, 3), CTX) == 0
    assert toy_u_orbital(F(1, 9), "norm", CTX) == 0
    assert toy_u_orbital(0, "norm", CTX) == 1
    assert toy_u_orbital(9, "norm", CTX) == 1
    assert toy_u_orbital(3, "norm", CTX) == 0
    assert toy_u_orbital(F(1, 3), "norm", CTX) == 0


def test_toy_transfer_sweep():
    for p in (3, 5, 7):
        ctx = PLocalContext(p)
        vals = [F(0)]
        for w in range(-8, 9):
            vals += [F(p) ** w, 2 * F(p) ** w]
        rep = toy_transfer_check(ctx, vals)
        assert not rep["failures"]


def test_fl_n1_small():
    rep = fl_check(1, CTX, budget=3)
    assert not rep["failures"]
    # odd-valuation entries really exercise the two-sided vanishing
    odd = [r for r in rep["results"] if r["v_dn"] % 2 == 1]
    assert odd and all(r["gl"] == "0" for r in odd)


def test_fl_n2_smoke_small():
    rep = fl_check(2, CTX, budget=2, seed=3, samples=6)
    assert not rep["failures"]
    assert any(r["v_dn"] > 0 for r in rep["results"])


def test_is_instable():
    pts = [InvariantPoint((F(1),), (F(2),)), InvariantPoint((F(0),), (F(9),))]
    g1 = [[F(1)]]
    g2 = [[F(2)]]
    r = is_instable([(1, g1), (-1, g2)], CTX, pts)
    assert r["instable"] and r["certificate"]
    assert not is_instable([(1, g1)], CTX, pts)["instable"]
    assert is_instable([], CTX, pts)["instable"]
    with pytest.raises(ValueError):
        is_instable([(1, [[F(0)]])], CTX, pts)

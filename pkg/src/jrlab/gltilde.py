"""The linear side: the space of triples (A, b, c) = endomorphism + vector +
covector, with its GL(V)-action, invariants, stratification, slice maps,
relative Jordan decomposition, pairing and the sign-valued transfer factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .fields import PLocalContext, eta
from .poly import Polynomial, gcd, squarefree_part, monic_coeffs


@dataclass(frozen=True)
class Triple:
    """An element X = (A, b, c): square matrix, column vector, row covector,
    all of the same dimension n >= 1 (lists/tuples of exact scalars)."""

    A: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        n = len(self.b)
        object.__setattr__(self, "A", tuple(tuple(r) for r in self.A))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.A) != n or any(len(r) != n for r in self.A) or len(self.c) != n:
            raise ValueError("components of a triple must share one dimension")

    @property
    def n(self) -> int:
        return len(self.b)

    def __add__(self, other: "Triple") -> "Triple":
        return Triple(la.mat_add(self.A, other.A),
                      la.vec_add(self.b, other.b),
                      la.vec_add(self.c, other.c))

    def __sub__(self, other: "Triple") -> "Triple":
        return Triple(la.mat_sub(self.A, other.A),
                      la.vec_sub(self.b, other.b),
                      la.vec_sub(self.c, other.c))

    def is_zero(self) -> bool:
        return (la.is_zero_matrix(self.A)
                and all(x == 0 for x in self.b)
                and all(x == 0 for x in self.c))


@dataclass(frozen=True)
class InvariantPoint:
    """Point of the categorical quotient: characteristic-polynomial
    coefficients a = (a1..an) and moments b = (b1..bn), bi = c A^{i-1} b."""

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("invariant point needs equal-length a and b")

    @property
    def n(self) -> int:
        return len(self.a)

    def is_nilpotent(self) -> bool:
        return all(x == 0 for x in self.a) and all(x == 0 for x in self.b)


@dataclass(frozen=True)
class Decomposition:
    """The canonical direct sum attached to X: a basis of the span of
    (b, Ab, ..., A^{r-1}b) and a basis of the annihilator of (c, ..., cA^{r-1})."""

    basis_plus: tuple
    basis_minus: tuple

    @property
    def r(self) -> int:
        return len(self.basis_plus)


def act(g, X: Triple) -> Triple:
    """g . X = (g A g^{-1}, g b, c g^{-1})."""
    gi = la.inverse([list(r) for r in g])
    return Triple(la.mat_mul(la.mat_mul(g, X.A), gi),
                  la.mat_vec(g, list(X.b)),
                  la.vec_mat(list(X.c), gi))


def moments(X: Triple, count: int) -> list:
    """[c b, c A b, ..., c A^{count-1} b]."""
    out = []
    v = list(X.b)
    for _ in range(count):
        out.append(la.dot(X.c, v))
        v = la.mat_vec(X.A, v)
    return out


def invariants(X: Triple) -> InvariantPoint:
    chi = la.charpoly(X.A)
    return InvariantPoint(tuple(monic_coeffs(chi)), tuple(moments(X, X.n)))


def d_r(X: Triple, r: int):
    """Determinant of the r x r moment matrix (c A^{i+j} b); d_0 = 1, and 0
    for r > n."""
    if r < 0:
        raise ValueError("d_r needs r >= 0")
    if r == 0:
        return Fraction(1)
    if r > X.n:
        return Fraction(0)
    ms = moments(X, 2 * r - 1)
    return la.det([[ms[i + j] for j in range(r)] for i in range(r)])


def d_r_of_point(a: InvariantPoint, r: int):
    """d_r read off an invariant point (Hankel determinant of the moment
    sequence extended through the characteristic-polynomial recursion)."""
    if r < 0:
        raise ValueError("d_r needs r >= 0")
    if r == 0:
        return Fraction(1)
    if r > a.n:
        return Fraction(0)
    ms = extend_moments(a, 2 * r - 1)
    return la.det([[ms[i + j] for j in range(r)] for i in range(r)])


def extend_moments(a: InvariantPoint, count: int) -> list:
    """Moments c A^k b for k = 0..count-1; beyond the stored ones they follow
    the recursion imposed by the characteristic polynomial."""
    n = a.n
    ms = list(a.b[:count])
    while len(ms) < count:
        nxt = 0
        for i, ai in enumerate(a.a):
            nxt = nxt - ai * ms[len(ms) - 1 - i]
        ms.append(nxt)
    return ms


def stratum(X: Triple) -> int:
    """The unique r with d_r != 0 and d_i = 0 for all i > r."""
    for r in range(X.n, 0, -1):
        if d_r(X, r) != 0:
            return r
    return 0


def krylov_columns(X: Triple, r: int) -> list:
    """Columns b, Ab, ..., A^{r-1}b."""
    cols = []
    v = list(X.b)
    for _ in range(r):
        cols.append(v)
        v = la.mat_vec(X.A, v)
    return cols


def dual_krylov_rows(X: Triple, r: int) -> list:
    """Rows c, cA, ..., cA^{r-1}."""
    rows = []
    w = list(X.c)
    for _ in range(r):
        rows.append(w)
        w = la.vec_mat(w, X.A)
    return rows


def canonical_decomposition(X: Triple) -> Decomposition:
    r = stratum(X)
    plus = krylov_columns(X, r)
    minus = la.nullspace(dual_krylov_rows(X, r)) if r else la.nullspace([[Fraction(0)] * X.n])
    if r == 0:
        minus = [[Fraction(1) if i == j else Fraction(0) for j in range(X.n)] for i in range(X.n)]
    T = [list(col) for col in zip(*(plus + minus))]
    if len(plus) + len(minus) != X.n or la.det(T) == 0:
        raise AssertionError("canonical summands do not give a direct sum")
    return Decomposition(tuple(tuple(v) for v in plus), tuple(tuple(v) for v in minus))


def iota(Xp: Triple | None, Y: Triple) -> Triple:
    """Assemble the slice element from a regular triple on the plus summand
    and an arbitrary triple on the minus summand (block form, with the
    off-diagonal blocks forced by the normalized vectors b', c')."""
    if Xp is None or Xp.n == 0:
        return Y
    r = Xp.n
    if stratum(Xp) != r:
        raise ValueError("plus component must be regular on its space")
    K = [list(row) for row in zip(*krylov_columns(Xp, r))]   # columns = Krylov
    L = dual_krylov_rows(Xp, r)
    # c' A^i b = delta_{i,r-1}  and  c A^i b' = delta_{i,r-1}
    e_last = [Fraction(0)] * (r - 1) + [Fraction(1)]
    c_prime = la.solve([list(col) for col in zip(*K)], e_last)       # K^T x = e_r
    b_prime = la.solve(L, e_last)
    m = Y.n
    top = [list(Xp.A[i]) + [b_prime[i] * Y.c[j] for j in range(m)] for i in range(r)]
    bot = [[Y.b[i] * c_prime[j] for j in range(r)] + list(Y.A[i]) for i in range(m)]
    b = list(Xp.b) + [Fraction(0)] * m
    c = list(Xp.c) + [Fraction(0)] * m
    return Triple(top + bot, b, c)


def in_slice(X: Triple, r: int) -> bool:
    """Membership in the slice for the standard split (first r coordinates
    against the rest): the Krylov span is the plus summand and the dual
    Krylov annihilator is the minus summand."""
    n = X.n
    if r == 0:
        return True
    cols = krylov_columns(X, r)
    if any(v[i] != 0 for v in cols for i in range(r, n)):
        if la.rank([list(c) for c in zip(*cols)]) != r:
            return False
    # span(b..A^{r-1}b) = first r coordinates
    top = [[v[i] for v in cols] for i in range(r)]
    if la.det(top) == 0:
        return False
    if any(v[i] != 0 for v in cols for i in range(r, n)):
        return False
    rows = dual_krylov_rows(X, r)
    if any(w[i] != 0 for w in rows for i in range(r, n)):
        return False
    if la.det([w[:r] for w in rows]) == 0:
        return False
    return True


def iota_inverse(X: Triple, r: int) -> tuple[Triple, Triple]:
    """Invert the slice map for the standard split; returns (plus, minus)."""
    if r == 0:
        return Triple([[Fraction(0)] * 0], [], []), X
    if not in_slice(X, r):
        raise ValueError("triple does not lie in the slice for this split")
    n = X.n
    m = n - r
    Ap = [list(X.A[i][:r]) for i in range(r)]
    Lp = [list(X.A[i][r:]) for i in range(r)]          # r x m
    Lm = [list(X.A[i][:r]) for i in range(r, n)]       # m x r
    Am = [list(X.A[i][r:]) for i in range(r, n)]
    bp = list(X.b[:r])
    cp = list(X.c[:r])
    Xp = Triple(Ap, bp, cp)
    Ar_b = la.mat_pow_apply(Ap, bp, r - 1)
    v = la.mat_vec(Lm, Ar_b)
    w_row = la.vec_mat(cp, Ap) if r > 1 else list(cp)
    for _ in range(r - 2):
        w_row = la.vec_mat(w_row, Ap)
    w = la.vec_mat(w_row if r > 1 else cp, Lp)
    if r == 1:
        w = la.vec_mat(cp, Lp)
        v = la.mat_vec(Lm, bp)
    return Xp, Triple(Am, v, w)


def conjugate_to_slice(X: Triple) -> tuple:
    """Change of basis putting X into the standard slice position; returns
    (g, g.X, r) with g the basis-change matrix inverse."""
    dec = canonical_decomposition(X)
    T = [list(col) for col in zip(*(list(dec.basis_plus) + list(dec.basis_minus)))]
    g = la.inverse(T)
    return g, act(g, X), dec.r


def jordan(X: Triple) -> tuple[Triple, Triple]:
    """Relative Jordan decomposition X = X_s + X_n (semisimple invariant-
    preserving part plus nilpotent-invariant part)."""
    n = X.n
    r = stratum(X)
    if r == n:
        zero = Triple([[x * 0 for x in row] for row in X.A],
                      [x * 0 for x in X.b], [x * 0 for x in X.c])
        return X, zero
    if r == 0:
        As = la.semisimple_part([list(row) for row in X.A])
        An = la.mat_sub([list(row) for row in X.A], As)
        zv = [x * 0 for x in X.b]
        zc = [x * 0 for x in X.c]
        return Triple(As, zv, zc), Triple(An, list(X.b), list(X.c))
    g, Xstd, _ = conjugate_to_slice(X)
    Xp, Y = iota_inverse(Xstd, r)
    Bs = la.semisimple_part([list(row) for row in Y.A])
    Ys = Triple(Bs, [x * 0 for x in Y.b], [x * 0 for x in Y.c])
    Xs_std = iota(Xp, Ys)
    gi = la.inverse(g)
    Xs = act(gi, Xs_std)
    return Xs, X - Xs


def is_semisimple(X: Triple) -> bool:
    """Stability of both canonical summands under A plus ordinary
    semisimplicity of the induced map on the minus summand; the vector must
    lie in the plus summand and the covector must kill the minus summand
    (otherwise the full Krylov spans outgrow the canonical ones and the
    orbit is not closed)."""
    dec = canonical_decomposition(X)
    plus = [list(v) for v in dec.basis_plus]
    minus = [list(v) for v in dec.basis_minus]
    r = dec.r
    n = X.n
    for v in minus:
        if la.dot(X.c, v) != 0:
            return False
    T = [list(col) for col in zip(*(plus + minus))]
    Ti = la.inverse(T)
    if any(x != 0 for x in la.mat_vec(Ti, list(X.b))[r:]):
        return False
    Astd = la.mat_mul(Ti, la.mat_mul(X.A, T))
    for i in range(n):
        for j in range(n):
            if (i < r) != (j < r) and Astd[i][j] != 0:
                return False
    if not minus:
        return True
    Am = [row[r:] for row in Astd[r:]]
    chi = la.charpoly(Am)
    return la.is_zero_matrix(la.poly_apply(squarefree_part(chi), Am))


def pairing(X: Triple, Y: Triple):
    """trace(A_X A_Y) + c_X b_Y + c_Y b_X (the invariant symmetric form)."""
    if X.n != Y.n:
        raise ValueError("dimension mismatch")
    P = la.mat_mul(X.A, Y.A)
    tr = sum((P[i][i] for i in range(X.n)), Fraction(0))
    return tr + la.dot(X.c, Y.b) + la.dot(Y.c, X.b)


def basis_matrix(X: Triple):
    """The matrix (b, Ab, ..., A^{n-1}b); invertible exactly on the open
    stratum."""
    return [list(row) for row in zip(*krylov_columns(X, X.n))]


def transfer_factor_eta(X: Triple, ctx: PLocalContext) -> int:
    """eta(det(b, Ab, ..., A^{n-1}b))^{-1} for a regular triple."""
    if stratum(X) != X.n:
        raise ValueError("transfer factor needs a regular semisimple triple")
    d = la.det(basis_matrix(X))
    return eta(d, ctx)                                  # a sign equals its inverse


def direct_sum(parts: list[Triple]) -> Triple:
    """Block-diagonal assembly of triples (the transverse-section embedding
    for identical base fields)."""
    n = sum(p.n for p in parts)
    A = la.zeros(n, n)
    b = [Fraction(0)] * n
    c = [Fraction(0)] * n
    off = 0
    for p in parts:
        for i in range(p.n):
            b[off + i] = p.b[i]
            c[off + i] = p.c[i]
            for j in range(p.n):
                A[off + i][off + j] = p.A[i][j]
        off += p.n
    return Triple(A, b, c)


def slice_compatibility_check(parts: list[Triple]) -> dict:
    """Compare the full moment determinant of a block-diagonal assembly with
    the discriminant-weighted product of the blocks' moment determinants.
    The two agree up to a sign; the ratio is reported and asserted to be a
    sign."""
    from .poly import discriminant

    X = direct_sum(parts)
    n = X.n
    lhs = d_r(X, n)
    chi = la.charpoly([list(r) for r in X.A])
    disc_total = discriminant(chi) if n >= 1 else Fraction(1)
    if disc_total == 0:
        raise ZeroDivisionError("disc=0: blocks share an eigenvalue")
    rhs = disc_total
    for p in parts:
        chi_i = la.charpoly([list(r) for r in p.A])
        disc_i = discriminant(chi_i) if p.n >= 1 else Fraction(1)
        if disc_i == 0:
            raise ZeroDivisionError("disc=0: a block is not regular semisimple")
        rhs = rhs * d_r(p, p.n) / disc_i
    if rhs == 0 or lhs == 0:
        raise ZeroDivisionError("degenerate block data (vanishing moment matrix)")
    ratio = lhs / rhs
    if ratio not in (1, -1):
        raise AssertionError(f"slice compatibility ratio {ratio} is not a sign")
    return {"lhs": lhs, "rhs": rhs, "ratio": ratio}

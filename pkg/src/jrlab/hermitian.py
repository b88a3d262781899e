"""The hermitian side: nondegenerate sigma-hermitian forms, pairs (A, b)
with A self-adjoint, their invariants and Jordan decomposition, the local
classification of forms, orbit inventories over an invariant point, Cayley
transforms on both sides, and the sign factors entering the comparison.

Forms are sigma-linear in the first variable: Phi(v, w) = sigma(v)^T Gram w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .fields import EScalar, PLocalContext, INERT, eta, eta_ext, is_norm, valuation
from .gltilde import InvariantPoint, Triple, extend_moments, d_r_of_point
from .poly import Polynomial, gcd, discriminant, monic_coeffs, squarefree_part


# ---------------------------------------------------------------------------
# forms and pairs


@dataclass(frozen=True)
class HermitianForm:
    gram: tuple          # n x n over EScalar, sigma-conjugate-transpose symmetric
    ctx: PLocalContext

    def __post_init__(self):
        g = tuple(tuple(r) for r in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(r) != n for r in g):
            raise ValueError("Gram matrix must be square")
        if la.conj_transpose([list(r) for r in g]) != [list(r) for r in g]:
            raise ValueError("Gram matrix is not sigma-hermitian")
        if not la.det([list(r) for r in g]):
            raise ValueError("degenerate form")

    @property
    def n(self) -> int:
        return len(self.gram)

    def apply(self, v, w):
        """Phi(v, w) = sigma(v)^T Gram w."""
        vb = [x.conj() for x in v]
        return la.dot(vb, la.mat_vec([list(r) for r in self.gram], list(w)))

    def det(self) -> Fraction:
        d = la.det([list(r) for r in self.gram])
        return d.as_fraction()


@dataclass(frozen=True)
class HermitianPair:
    """(A, b) with A self-adjoint for the carried form."""

    A: tuple
    b: tuple
    form: HermitianForm

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(tuple(r) for r in self.A))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.A) != self.form.n or len(self.b) != self.form.n:
            raise ValueError("dimension mismatch with the form")
        if not is_selfadjoint([list(r) for r in self.A], self.form):
            raise ValueError("A is not self-adjoint for the form")

    @property
    def n(self) -> int:
        return len(self.b)


def is_selfadjoint(A, form: HermitianForm) -> bool:
    """sigma(A)^T Gram == Gram A."""
    G = [list(r) for r in form.gram]
    if len(A) != form.n:
        raise ValueError("dimension mismatch")
    return la.mat_mul(la.conj_transpose(A), G) == la.mat_mul(G, A)


def adjoint(M, form: HermitianForm):
    """Phi-adjoint: Gram^{-1} sigma(M)^T Gram."""
    G = [list(r) for r in form.gram]
    return la.mat_mul(la.inverse(G), la.mat_mul(la.conj_transpose(M), G))


def unitary_act(g, X: HermitianPair) -> HermitianPair:
    gi = la.inverse([list(r) for r in g])
    return HermitianPair(la.mat_mul(g, la.mat_mul([list(r) for r in X.A], gi)),
                         la.mat_vec(g, list(X.b)), X.form)


def is_unitary(g, form: HermitianForm) -> bool:
    G = [list(r) for r in form.gram]
    return la.mat_mul(la.conj_transpose(g), la.mat_mul(G, g)) == G


def random_unitary(form: HermitianForm, rng, bound: int = 2):
    """Cayley transform of a random Phi-skew-adjoint matrix (pole-avoiding)."""
    n = form.n
    ctx = form.ctx
    one = ctx.embed(1)
    for _ in range(200):
        M = [[EScalar(Fraction(rng.randint(-bound, bound)),
                      Fraction(rng.randint(-bound, bound)), ctx)
              for _ in range(n)] for _ in range(n)]
        S = la.mat_sub(M, adjoint(M, form))
        I = la.identity(n, one)
        den = la.mat_add(I, S)
        if not la.det(den):
            continue
        g = la.mat_mul(la.mat_sub(I, S), la.inverse(den))
        assert is_unitary(g, form)
        return g
    raise RuntimeError("failed to sample a unitary element")


# ---------------------------------------------------------------------------
# invariants, stratification, Jordan


def u_moments(X: HermitianPair, count: int) -> list:
    out = []
    v = list(X.b)
    for _ in range(count):
        m = X.form.apply(X.b, v)
        out.append(m)
        v = la.mat_vec([list(r) for r in X.A], v)
    return out


def u_invariants(X: HermitianPair) -> InvariantPoint:
    chi = la.charpoly([list(r) for r in X.A])
    a = []
    for c in monic_coeffs(chi):
        if not c.is_rational():
            raise ValueError("characteristic polynomial left the base field")
        a.append(c.as_fraction())
    b = []
    for m in u_moments(X, X.n):
        if not m.is_rational():
            raise ValueError("moment left the base field")
        b.append(m.as_fraction())
    return InvariantPoint(tuple(a), tuple(b))


def u_d_r(X: HermitianPair, r: int):
    if r < 0:
        raise ValueError("d_r needs r >= 0")
    if r == 0:
        return Fraction(1)
    if r > X.n:
        return Fraction(0)
    ms = u_moments(X, 2 * r - 1)
    vals = []
    for m in ms:
        if not m.is_rational():
            raise ValueError("moment left the base field")
        vals.append(m.as_fraction())
    return la.det([[vals[i + j] for j in range(r)] for i in range(r)])


def u_stratum(X: HermitianPair) -> int:
    for r in range(X.n, 0, -1):
        if u_d_r(X, r) != 0:
            return r
    return 0


def _u_krylov(X: HermitianPair, r: int) -> list:
    cols = []
    v = list(X.b)
    for _ in range(r):
        cols.append(v)
        v = la.mat_vec([list(row) for row in X.A], v)
    return cols


def _orthogonal_complement(vectors, form: HermitianForm) -> list:
    """Vectors w with Phi(v, w) = 0 for every listed v (kernel of the rows
    sigma(v)^T Gram)."""
    G = [list(r) for r in form.gram]
    rows = [la.vec_mat([x.conj() for x in v], G) for v in vectors]
    if not rows:
        one = form.ctx.embed(1)
        return [[one if i == j else one * 0 for j in range(form.n)] for i in range(form.n)]
    return la.nullspace(rows)


def u_canonical_decomposition(X: HermitianPair):
    r = u_stratum(X)
    plus = _u_krylov(X, r)
    minus = _orthogonal_complement(plus, X.form)
    T = [list(col) for col in zip(*(plus + minus))]
    if len(plus) + len(minus) != X.n or not la.det(T):
        raise AssertionError("canonical summands do not give a direct sum")
    return plus, minus


def u_jordan(X: HermitianPair) -> tuple[HermitianPair, HermitianPair]:
    """X = X_s + X_n on the hermitian side; the sum is taken componentwise
    on (A, b), the form being common."""
    n = X.n
    r = u_stratum(X)
    ctx = X.form.ctx
    zero_vec = [ctx.embed(0)] * n
    if r == n:
        Zn = HermitianPair([[a * 0 for a in row] for row in X.A], zero_vec, X.form)
        return X, Zn
    if r == 0:
        As = la.semisimple_part([list(row) for row in X.A])
        An = la.mat_sub([list(row) for row in X.A], As)
        return (HermitianPair(As, zero_vec, X.form),
                HermitianPair(An, list(X.b), X.form))
    plus, minus = u_canonical_decomposition(X)
    T = [list(col) for col in zip(*(plus + minus))]
    Ti = la.inverse(T)
    Astd = la.mat_mul(Ti, la.mat_mul([list(row) for row in X.A], T))
    Am = [row[r:] for row in Astd[r:]]
    Bs = la.semisimple_part(Am)
    # reassemble: semisimple part keeps the plus-block and the plus-vector,
    # kills both off-diagonal blocks (the minus vector of the slice datum is 0)
    As_std = [[Astd[i][j] if (i < r and j < r) else
               (Bs[i - r][j - r] if (i >= r and j >= r) else Astd[i][j] * 0)
               for j in range(n)] for i in range(n)]
    As_full = la.mat_mul(T, la.mat_mul(As_std, Ti))
    Xs = HermitianPair(As_full, list(X.b), X.form)
    Xn = HermitianPair(la.mat_sub([list(row) for row in X.A], As_full), zero_vec, X.form)
    return Xs, Xn


def u_is_semisimple(X: HermitianPair) -> bool:
    """Both canonical summands stable (block-diagonal shape in the adapted
    basis), the vector inside the plus summand, and a semisimple minus
    block."""
    plus, minus = u_canonical_decomposition(X)
    A = [list(row) for row in X.A]
    r = len(plus)
    n = X.n
    T = [list(col) for col in zip(*(plus + minus))]
    Ti = la.inverse(T)
    if any(x for x in la.mat_vec(Ti, list(X.b))[r:]):
        return False
    Astd = la.mat_mul(Ti, la.mat_mul(A, T))
    for i in range(n):
        for j in range(n):
            if (i < r) != (j < r) and Astd[i][j]:
                return False
    if not minus:
        return True
    Am = [row[r:] for row in Astd[r:]]
    chi = la.charpoly(Am)
    return la.is_zero_matrix(la.poly_apply(squarefree_part(chi), Am))


def u_pairing(X: HermitianPair, Y: HermitianPair):
    """trace(A_X A_Y) + Phi(b_X, b_Y) + Phi(b_Y, b_X), an element of F."""
    if X.n != Y.n:
        raise ValueError("dimension mismatch")
    P = la.mat_mul([list(r) for r in X.A], [list(r) for r in Y.A])
    tr = P[0][0]
    for i in range(1, X.n):
        tr = tr + P[i][i]
    s = tr + X.form.apply(X.b, Y.b) + X.form.apply(Y.b, X.b)
    if not s.is_rational():
        raise ValueError("pairing left the base field")
    return s.as_fraction()


# ---------------------------------------------------------------------------
# classification of forms and orbit inventory


def extend_form(form: HermitianForm) -> HermitianForm:
    """Append the distinguished line: block-diagonal Gram + (1)."""
    ctx = form.ctx
    n = form.n
    one, zero = ctx.embed(1), ctx.embed(0)
    g = [[form.gram[i][j] if i < n and j < n else (one if i == j == n else zero)
          for j in range(n + 1)] for i in range(n + 1)]
    return HermitianForm(g, ctx)


def classify_form_local(form: HermitianForm, ctx: PLocalContext) -> dict:
    """At an odd inert unramified place the two classes are separated by
    whether the discriminant is a norm (equivalently: a self-dual lattice
    exists)."""
    if ctx.kind != INERT:
        raise ValueError("local classification needs an inert context")
    d = form.det()
    return {"disc_is_norm": is_norm(d, ctx), "class": "norm" if is_norm(d, ctx) else "nonnorm"}


def hankel_pair_for_point(a: InvariantPoint, ctx: PLocalContext):
    """The companion/Hankel model over the extension: a pair with the given
    regular invariant point, self-adjoint for the Hankel Gram of the extended
    moment sequence.  Needs d_n(a) != 0."""
    n = a.n
    if d_r_of_point(a, n) == 0:
        raise ValueError("invariant point is not regular semisimple")
    h = extend_moments(a, 2 * n - 1)
    gram_f = [[h[i + j] for j in range(n)] for i in range(n)]
    gram = [[ctx.embed(x) for x in row] for row in gram_f]
    comp = companion_matrix(list(a.a))
    A = [[ctx.embed(x) for x in row] for row in comp]
    b = [ctx.embed(1)] + [ctx.embed(0)] * (n - 1)
    form = HermitianForm(gram, ctx)
    return HermitianPair(A, b, form)


def companion_matrix(a_coeffs):
    """Companion matrix of t^n + a1 t^{n-1} + ... + an sending e_i to e_{i+1};
    the Krylov basis of e_1 is the standard basis."""
    n = len(a_coeffs)
    C = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        C[i + 1][i] = Fraction(1)
    for i in range(n):
        C[i][n - 1] = -Fraction(a_coeffs[n - 1 - i])
    return C


def _fi_valuation_data(P_i: Polynomial, ctx: PLocalContext):
    """Local valuation on F[t]/(P_i) at p for deg <= 2 factors.

    deg 1: ordinary p-adic valuation.  deg 2: accepted only when v_p(disc)
    is odd (p-ramified), where v = v_p of the norm; other quadratic shapes
    either split locally or make the extension-by-sigma split, so the
    two-class labeling would be wrong for them.
    """
    d = P_i.degree
    if d == 1:
        return ("deg1",)
    if d == 2:
        disc = discriminant(P_i)
        if disc == 0:
            raise ValueError("factor is not squarefree")
        if valuation(disc, ctx) % 2 == 0:
            raise ValueError(
                "unverifiable flags: degree-2 inert factor must be p-ramified "
                "(v_p(disc) odd) for the two-class labeling to apply")
        return ("ramified2",)
    raise ValueError("only factors of degree <= 2 are supported")


def splits_over_ext(P_i: Polynomial, ctx: PLocalContext) -> bool:
    """Whether a monic irreducible quadratic splits over the inert quadratic
    extension F(sqrt(eps)): disc / eps must be a rational square."""
    if P_i.degree == 1:
        return False
    if P_i.degree != 2:
        raise ValueError("only degree <= 2 supported")
    d = Fraction(discriminant(P_i)) / ctx.eps
    if d < 0:
        return False
    num, den = d.numerator, d.denominator
    return _is_square(num) and _is_square(den)


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n) ** 0 if n == 0 else None
    import math
    r = math.isqrt(n)
    return r * r == n


def _is_rational_square(q: Fraction) -> bool:
    return q >= 0 and _is_square(q.numerator) and _is_square(q.denominator)


def _irreducible_deg_le2(P: Polynomial) -> bool:
    if P.degree == 1:
        return True
    if P.degree == 2:
        return not _is_rational_square(Fraction(discriminant(P)))
    return False


class QuadAlgebraElement:
    """Element x + y*alpha of E[t]/(P) for a monic quadratic P = t^2+st+q,
    with E-coefficients; sigma acts on coefficients only."""

    __slots__ = ("x", "y", "s", "q")

    def __init__(self, x: EScalar, y: EScalar, s: Fraction, q: Fraction):
        self.x, self.y, self.s, self.q = x, y, s, q

    def __add__(self, o):
        return QuadAlgebraElement(self.x + o.x, self.y + o.y, self.s, self.q)

    def __mul__(self, o):
        # (x1 + y1 a)(x2 + y2 a) with a^2 = -s a - q
        x = self.x * o.x - self.q * (self.y * o.y)
        y = self.x * o.y + self.y * o.x - self.s * (self.y * o.y)
        return QuadAlgebraElement(x, y, self.s, self.q)

    def conj_sigma(self):
        return QuadAlgebraElement(self.x.conj(), self.y.conj(), self.s, self.q)

    def trace_down(self) -> EScalar:
        """Trace to E: tr(x + y a) = 2x - s y."""
        return self.x + self.x - self.s * self.y


def _traced_quadratic_block(P_i: Polynomial, n_i: int, unit: Fraction,
                            ctx: PLocalContext):
    """Gram (over E) of the traced form on (E[t]/P_i)^{n_i} given by
    <u, v> = tr(sigma(u)^T diag(unit,1,..,1) v), in the E-basis
    (e_k, alpha e_k); also the matrix of multiplication by alpha."""
    s_, q_ = (Fraction(c) for c in (P_i.coeffs[1], P_i.coeffs[0]))
    one = ctx.embed(1)
    dim = 2 * n_i
    gram = [[ctx.embed(0) for _ in range(dim)] for _ in range(dim)]
    # basis ordering: (e_1, a e_1, e_2, a e_2, ...)
    for k in range(n_i):
        u = Fraction(unit) if k == 0 else Fraction(1)
        # pairings of 1 and alpha within one rank-1 slot:
        # tr(u * a^{i+j}) with a^0=1, a^1=a, a^2=-s a - q
        t0 = ctx.embed(2 * u)                      # tr(u)
        t1 = ctx.embed(-u * s_)                    # tr(u a)
        t2 = ctx.embed(u * (s_ * s_ - 2 * q_))     # tr(u a^2)
        gram[2 * k][2 * k] = t0
        gram[2 * k][2 * k + 1] = t1
        gram[2 * k + 1][2 * k] = t1
        gram[2 * k + 1][2 * k + 1] = t2
    mult = [[Fraction(0)] * dim for _ in range(dim)]
    for k in range(n_i):
        # alpha * e = a e ; alpha * (a e) = -q e - s (a e)
        mult[2 * k + 1][2 * k] = Fraction(1)
        mult[2 * k][2 * k + 1] = -q_
        mult[2 * k + 1][2 * k + 1] = -s_
    A = [[ctx.embed(x) for x in row] for row in mult]
    return gram, A


def orbit_inventory(a: InvariantPoint, factored, ctx: PLocalContext) -> list[dict]:
    """Inventory of semisimple orbits above an invariant point.

    `factored` lists (P_i, n_i, flag) with flag "inert" (irreducible over the
    extension) or "split" (factors over it); the product of P_i^{n_i} must be
    the minus-part characteristic polynomial.  Returns one entry per class:
    the class labels per inert factor and an explicit representative pair.
    """
    if ctx.kind != INERT:
        raise ValueError("orbit inventory needs an inert context")
    n = a.n
    # locate the stratum from the point itself
    r = 0
    for k in range(n, 0, -1):
        if d_r_of_point(a, k) != 0:
            r = k
            break
    chi = Polynomial([Fraction(x) for x in
                      list(reversed((1,) + tuple(a.a)))])
    # verify the factorization against the minus part
    prod = Polynomial([Fraction(1)])
    for (P_i, n_i, flag) in factored:
        for _ in range(n_i):
            prod = prod * P_i
    aplus_poly, rem = chi.divmod(prod)
    if not rem.is_zero():
        raise ValueError("factorization mismatch: product does not divide chi")
    if prod.degree != n - r:
        raise ValueError("factorization mismatch: wrong total degree")
    for (P_i, n_i, flag) in factored:
        if not _irreducible_deg_le2(P_i):
            raise ValueError("factor fails the irreducibility certificate")
        if gcd(P_i, P_i.derivative()).degree > 0:
            raise ValueError("factor is not squarefree")
        split = splits_over_ext(P_i, ctx)
        if flag == "inert" and split:
            raise ValueError("unverifiable flags: factor splits over the extension")
        if flag == "split" and not split:
            raise ValueError("unverifiable flags: factor stays irreducible")
    # plus part of the invariant point
    a_plus = InvariantPoint(tuple(monic_coeffs(aplus_poly)), tuple(a.b[:r])) if r else None
    inert_idx = [k for k, (_, _, fl) in enumerate(factored) if fl == "inert"]
    classes = []
    from itertools import product as iproduct
    for labels in iproduct((True, False), repeat=len(inert_idx)):
        label_map = dict(zip(inert_idx, labels))
        blocks_gram, blocks_A, blocks_b = [], [], []
        if r:
            plus = hankel_pair_for_point(a_plus, ctx)
            blocks_gram.append([list(row) for row in plus.form.gram])
            blocks_A.append([list(row) for row in plus.A])
            blocks_b.append(list(plus.b))
        for k, (P_i, n_i, flag) in enumerate(factored):
            deg = P_i.degree
            if flag == "inert":
                _fi_valuation_data(P_i, ctx)
                unit = Fraction(1) if label_map[k] else Fraction(ctx.p)
                if deg == 1:
                    root = -Fraction(P_i.coeffs[0])
                    g = [[ctx.embed(unit if i == j == 0 else (1 if i == j else 0))
                          for j in range(n_i)] for i in range(n_i)]
                    A = [[ctx.embed(root if i == j else 0) for j in range(n_i)]
                         for i in range(n_i)]
                    blocks_gram.append(g)
                    blocks_A.append(A)
                    blocks_b.append([ctx.embed(0)] * n_i)
                else:
                    g, A = _traced_quadratic_block(P_i.monic(), n_i, unit, ctx)
                    blocks_gram.append(g)
                    blocks_A.append(A)
                    blocks_b.append([ctx.embed(0)] * (2 * n_i))
            else:
                g, A = _traced_quadratic_block(P_i.monic(), n_i, Fraction(1), ctx)
                blocks_gram.append(g)
                blocks_A.append(A)
                blocks_b.append([ctx.embed(0)] * (2 * n_i))
        # block-diagonal assembly
        dim = sum(len(g) for g in blocks_gram)
        zero = ctx.embed(0)
        G = [[zero for _ in range(dim)] for _ in range(dim)]
        A = [[zero for _ in range(dim)] for _ in range(dim)]
        b = [zero for _ in range(dim)]
        off = 0
        for g_blk, A_blk, b_blk in zip(blocks_gram, blocks_A, blocks_b):
            m = len(g_blk)
            for i in range(m):
                b[off + i] = b_blk[i]
                for j in range(m):
                    G[off + i][off + j] = g_blk[i][j]
                    A[off + i][off + j] = A_blk[i][j]
            off += m
        form = HermitianForm(G, ctx)
        rep = HermitianPair(A, b, form)
        got = u_invariants(rep)
        if got != a:
            raise AssertionError("representative does not reproduce the invariant point")
        classes.append({
            "labels": {k: {"disc_is_norm": label_map[k]} for k in inert_idx},
            "form": form,
            "pair": rep,
        })
    return classes


# ---------------------------------------------------------------------------
# Cayley transforms and comparison factors


@dataclass(frozen=True)
class CayleyParams:
    """tau with sigma(tau) = -tau (nonzero) and xi with xi sigma(xi) = 1."""

    tau: EScalar
    xi: EScalar

    def __post_init__(self):
        if not self.tau or self.tau.conj() != -self.tau:
            raise ValueError("tau must be nonzero and sigma-antisymmetric")
        if self.xi * self.xi.conj() != self.tau.ctx.embed(1):
            raise ValueError("xi must have norm 1")


def standard_cayley_params(ctx: PLocalContext, t=1, s=0) -> CayleyParams:
    """tau = t*sqrt(eps); xi from the rational norm-1 parametrization
    (1+s sqrt(eps))/(1-s sqrt(eps))."""
    tau = ctx.sqrt_eps() * ctx.embed(t)
    one = ctx.embed(1)
    u = one + ctx.sqrt_eps() * ctx.embed(s)
    xi = u / u.conj()
    return CayleyParams(tau, xi)


def cayley(Y, params: CayleyParams):
    """kappa(Y) = -xi (1 + tau^{-1} Y)(1 - tau^{-1} Y)^{-1}; Y is a square
    matrix over the base field or the extension."""
    ctx = params.tau.ctx
    n = len(Y)
    Ye = [[x if isinstance(x, EScalar) else ctx.embed(x) for x in row] for row in Y]
    one = ctx.embed(1)
    I = la.identity(n, one)
    ti = params.tau.inverse()
    tY = la.mat_scale(Ye, ti)
    den = la.mat_sub(I, tY)
    if not la.det(den):
        raise ZeroDivisionError("kappa pole: det(1 - tau^{-1} Y) = 0")
    num = la.mat_add(I, tY)
    r = la.mat_scale(la.mat_mul(num, la.inverse(den)), -params.xi)
    return r


def cayley_gl(Y, params: CayleyParams):
    """Cayley transform of a base-field endomorphism; checks the twisted
    involution identity r sigma(r) = 1 on the result."""
    r = cayley(Y, params)
    if not in_twisted_space(r):
        raise AssertionError("Cayley image fails r sigma(r) = 1")
    return r


def cayley_u(Y, form: HermitianForm, params: CayleyParams):
    """Cayley transform of a Phi-self-adjoint endomorphism; the image is
    Phi-unitary."""
    if not is_selfadjoint([list(r) for r in Y], form):
        raise ValueError("input must be self-adjoint for the form")
    r = cayley(Y, params)
    if not is_unitary(r, form):
        raise AssertionError("Cayley image fails unitarity")
    return r


def cayley_inverse(r, params: CayleyParams):
    """Y = tau (w - 1)(w + 1)^{-1} with w = -xi^{-1} r."""
    ctx = params.tau.ctx
    n = len(r)
    one = ctx.embed(1)
    I = la.identity(n, one)
    w = la.mat_scale(r, -params.xi.inverse())
    den = la.mat_add(w, I)
    if not la.det(den):
        raise ZeroDivisionError("inverse Cayley pole")
    Y = la.mat_scale(la.mat_mul(la.mat_sub(w, I), la.inverse(den)), params.tau)
    return Y


def in_twisted_space(g) -> bool:
    """g sigma(g) = 1."""
    n = len(g)
    prod = la.mat_mul(g, la.conj_matrix(g))
    one = g[0][0].ctx.embed(1)
    return prod == la.identity(n, one)


def group_moments(Y, e0_index: int, count: int, form: HermitianForm | None = None):
    """e0^* Y^i e0 (form None) or Phi(e0, Y^i e0), i = 1..count."""
    n = len(Y)
    ctx = Y[0][0].ctx
    e0 = [ctx.embed(1) if i == e0_index else ctx.embed(0) for i in range(n)]
    out = []
    v = list(e0)
    for _ in range(count):
        v = la.mat_vec(Y, v)
        if form is None:
            out.append(v[e0_index])
        else:
            out.append(form.apply(e0, v))
    return out


def match_invariants_group(Y1, Y2, form_ext: HermitianForm) -> bool:
    """Same characteristic polynomial and the same distinguished moments
    e0* Y1^i e0 = Phi~(e0, Y2^i e0) for i = 1..n (dimension n+1)."""
    N = len(Y1)
    if len(Y2) != N or form_ext.n != N:
        raise ValueError("dimension mismatch")
    if la.charpoly(Y1) != la.charpoly(Y2):
        return False
    m1 = group_moments(Y1, N - 1, N - 1)
    m2 = group_moments(Y2, N - 1, N - 1, form_ext)
    return m1 == m2


def matched_endomorphism_pair(rng, n: int, form_ext: HermitianForm, bound: int = 2):
    """A self-adjoint endomorphism of the extended hermitian space together
    with a rational endomorphism carrying the same invariant data
    (characteristic polynomial and distinguished moments), built by
    transporting the companion model so that the distinguished vector and
    covector sit in standard position.  Retries until the moment matrix is
    invertible."""
    from .poly import monic_coeffs
    ctx = form_ext.ctx
    N = n + 1
    if form_ext.n != N:
        raise ValueError("extended form must have dimension n + 1")
    while True:
        M = [[EScalar(Fraction(rng.randint(-bound, bound)),
                      Fraction(rng.randint(-bound, bound)), ctx)
              for _ in range(N)] for _ in range(N)]
        Yu = la.mat_add(M, adjoint(M, form_ext))
        chi = la.charpoly(Yu)
        try:
            coeffs = [c.as_fraction() for c in monic_coeffs(chi)]
            mom = [m.as_fraction() for m in group_moments(Yu, N - 1, n, form_ext)]
        except ValueError:
            continue
        ms = [Fraction(1)] + mom
        while len(ms) < 2 * N - 1:
            nxt = Fraction(0)
            for i, ai in enumerate(coeffs):
                nxt -= ai * ms[len(ms) - 1 - i]
            ms.append(nxt)
        if la.det([[ms[i + j] for j in range(N)] for i in range(N)]) == 0:
            continue
        C = companion_matrix(coeffs)
        P = [[Fraction(1) if j == i + 1 else Fraction(0) for j in range(N)]
             for i in range(N - 1)]
        P.append(list(ms[:N]))
        Ygl = la.mat_mul(P, la.mat_mul(C, la.inverse(P)))
        return Ygl, Yu


def _moment_basis_det(x, e0_index: int):
    """det(e0, x e0, ..., x^n e0) over the extension."""
    n = len(x)
    ctx = x[0][0].ctx
    e0 = [ctx.embed(1) if i == e0_index else ctx.embed(0) for i in range(n)]
    cols = [e0]
    v = list(e0)
    for _ in range(n - 1):
        v = la.mat_vec(x, v)
        cols.append(v)
    return la.det([list(row) for row in zip(*cols)])


def omega_factor(x, ctx: PLocalContext) -> int:
    """eta'(det(x)^{-floor((n+1)/2)} det(e0, x e0, ..., x^n e0)) with the
    unramified eta' = (-1)^{v_E}; x is (n+1)x(n+1) in the twisted space, e0
    the last basis vector."""
    N = len(x)
    n = N - 1
    D = _moment_basis_det(x, N - 1)
    if not D:
        raise ValueError("non-regular element: moment basis is degenerate")
    dx = la.det(x)
    val = dx.inverse() ** ((n + 1) // 2) * D
    return eta_ext(val, ctx)


def omega_group(g, gt, ctx: PLocalContext) -> int:
    """Group version on pairs (g, g~): through nu(h) = (g^{-1} g~) sigma(g^{-1} g~)^{-1},
    with the extra determinant twist for odd n."""
    N = len(gt)
    n = N - 1
    ctxE = gt[0][0].ctx
    g_big = [[gt[0][0] * 0 for _ in range(N)] for _ in range(N)]
    for i in range(N):
        for j in range(N):
            if i < n and j < n:
                g_big[i][j] = g[i][j]
            elif i == j == n:
                g_big[i][j] = ctxE.embed(1)
    q = la.mat_mul(la.inverse(g_big), gt)
    x = la.mat_mul(q, la.inverse(la.conj_matrix(q)))
    base = omega_factor(x, ctx)
    if n % 2 == 1:
        base *= eta_ext(la.det(q), ctx)
    return base


def eta_tilde_end(Y, ctx: PLocalContext) -> int:
    """Transfer factor on endomorphisms of the extended space:
    eta((-1)^n det(e0, Y e0, ..., Y^n e0)), e0 the last basis vector."""
    N = len(Y)
    n = N - 1
    e0 = [Fraction(1) if i == N - 1 else Fraction(0) for i in range(N)]
    cols = [e0]
    v = list(e0)
    for _ in range(N - 1):
        v = la.mat_vec(Y, v)
        cols.append(v)
    D = la.det([list(row) for row in zip(*cols)])
    if D == 0:
        raise ValueError("non-regular element")
    return eta((-1) ** n * D, ctx)


def factor_compat_check(samples, params: CayleyParams, ctx: PLocalContext) -> dict:
    """Ratio of the group-side sign to the infinitesimal-side sign across
    samples of regular rational endomorphisms; the ratio must be constant
    (it only depends on tau, xi and the parity branch)."""
    ratios = []
    for Y in samples:
        N = len(Y)
        n = N - 1
        x = cayley_gl(Y, params)
        om = omega_factor(x, ctx)
        et = eta_tilde_end(Y, ctx)
        if n % 2 == 1:
            ctxE = params.tau.ctx
            Ye = [[ctxE.embed(v) for v in row] for row in Y]
            shift = la.mat_sub(Ye, la.mat_scale(la.identity(N, ctxE.embed(1)), params.tau))
            et *= eta_ext(la.det(shift), ctx)
        ratios.append(om * et)           # om/et == om*et for signs
    constant = all(r == ratios[0] for r in ratios)
    return {"ratio": ratios[0] if ratios else None, "constant": constant,
            "samples": len(ratios)}

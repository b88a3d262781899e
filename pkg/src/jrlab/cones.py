"""Cone combinatorics for the pair GL(n) inside GL(n+1).

A parabolic subspace is encoded by the chain of its proper nonzero flag
members inside the extended space; coordinates carry labels 1..n for the
base space and 0 for the distinguished line.  In vectors, label l sits at
index l-1 and label 0 at index n.  All weight covectors are realized as
exact rational vectors on the ambient space; characteristic functions use
strict inequalities throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg as la

E0 = 0   # label of the distinguished line


# ---------------------------------------------------------------------------
# parabolic subspaces


@dataclass(frozen=True)
class ParabolicSubspace:
    """Chain of proper nonzero coordinate subspaces of the extended space,
    increasing; the full group corresponds to the empty chain."""

    n: int
    chain: tuple          # tuple of frozensets over {0, 1..n}

    def __post_init__(self):
        ch = tuple(frozenset(m) for m in self.chain)
        object.__setattr__(self, "chain", ch)
        full = set(range(self.n + 1))
        prev: frozenset = frozenset()
        for m in ch:
            if not (prev < m) or not (set(m) < full):
                raise ValueError("chain must strictly increase through proper subsets")
            prev = m

    # -- flag presentations -------------------------------------------------

    def vflag_ij(self):
        """Full base-space flag [empty, W1, .., V] plus the couple (i, j)."""
        vset = frozenset(range(1, self.n + 1))
        free = [m for m in self.chain if E0 not in m]
        cut = [frozenset(m - {E0}) for m in self.chain if E0 in m]
        cut = cut + [vset]               # the implicit top member
        i = len(free)
        last_free = free[-1] if free else frozenset()
        if cut[0] == last_free:
            j = i
            vrest = cut[1:]
        else:
            j = i + 1
            vrest = cut
        ws = [frozenset()] + free + vrest
        return ws, i, j

    @staticmethod
    def from_vflag(ws, i: int, j: int, n: int) -> "ParabolicSubspace":
        """Rebuild the chain from a full base flag [empty, .., V] and (i, j)."""
        s = len(ws) - 1
        if not (0 <= j - i <= 1 and 0 <= i <= j <= s):
            raise ValueError("invalid flag pointers")
        full = frozenset(range(1, n + 1)) | {E0}
        members = []
        for k in range(1, i + 1):
            members.append(frozenset(ws[k]))
        for k in range(j, s + 1):
            m = frozenset(ws[k]) | {E0}
            if m != full:
                members.append(m)
        return ParabolicSubspace(n, tuple(members))

    # -- block structure ------------------------------------------------------

    def blocks(self):
        """Ordered quotient blocks of the extended chain (cover {0..n})."""
        full = frozenset(range(self.n + 1))
        out = []
        prev: frozenset = frozenset()
        for m in list(self.chain) + [full]:
            out.append(frozenset(m - prev))
            prev = m
        return out

    def e0_block(self):
        for b in self.blocks():
            if E0 in b:
                return b
        raise AssertionError("unreachable")

    def mblocks(self):
        return [b for b in self.blocks() if E0 not in b]

    def dim_z(self) -> int:
        return len(self.chain)

    # -- containment (as subgroups) ------------------------------------------

    def le(self, other: "ParabolicSubspace") -> bool:
        """self contained in other."""
        return set(other.chain) <= set(self.chain)

    def is_group(self) -> bool:
        return not self.chain


def full_group(n: int) -> ParabolicSubspace:
    return ParabolicSubspace(n, ())


def enumerate_parabolic_subspaces(n: int, levi_blocks=None, guard: int = 4,
                                  borel: bool = False):
    """All parabolic subspaces with coordinate flags; with `levi_blocks`
    (a partition of {0..n}) only the flags whose members are unions of the
    given blocks; with `borel` only the standard flags (base members are
    coordinate prefixes).  The guard bounds n (the chain count grows
    fast)."""
    if n > guard:
        raise ValueError(f"enumeration guard exceeded: n={n} > {guard}")
    if levi_blocks is None:
        atoms = [frozenset([x]) for x in range(n + 1)]
    else:
        atoms = [frozenset(b) for b in levi_blocks]
        cover = set()
        for b in atoms:
            if cover & b:
                raise ValueError("levi blocks overlap")
            cover |= b
        if cover != set(range(n + 1)):
            raise ValueError("levi blocks must cover all coordinates")
    out = []

    def grow(chain, remaining):
        out.append(ParabolicSubspace(n, tuple(chain)))
        last = chain[-1] if chain else frozenset()
        for k in range(1, len(remaining)):
            for combo in itertools.combinations(remaining, k):
                add = frozenset().union(*combo)
                nxt = last | add
                rest = [a for a in remaining if a not in combo]
                grow(chain + [nxt], rest)

    grow([], atoms)
    if borel:
        def standard(P):
            ws, i, j = P.vflag_ij()
            return all(w == frozenset(range(1, len(w) + 1)) for w in ws[1:])
        out = [P for P in out if standard(P)]
    return out


def pi_sets(P: ParabolicSubspace, Q: ParabolicSubspace | None = None,
            raw: bool = False):
    """The weight sets of a parabolic subspace (or the relative sets of a
    nested pair): restricted-root representatives and flag-weight
    representatives inside the relative center space, or the raw
    flag-indicator covectors."""
    g = GTilde(P.n)
    if raw:
        return g.pi_hat_raw(P)
    if Q is None:
        Q = full_group(P.n)
    return g.pi(P, Q), g.pi_hat(P, Q)


def between(P: ParabolicSubspace, Q: ParabolicSubspace):
    """All S with P contained in S contained in Q (as groups)."""
    if not P.le(Q):
        raise ValueError("containment violated")
    extra = [m for m in P.chain if m not in set(Q.chain)]
    base = set(Q.chain)
    out = []
    for k in range(len(extra) + 1):
        for combo in itertools.combinations(extra, k):
            members = sorted(base | set(combo), key=len)
            out.append(ParabolicSubspace(P.n, tuple(members)))
    return out


def above(P: ParabolicSubspace):
    """All parabolic subspaces containing P."""
    return between(P, full_group(P.n))


def epsilon_sign(P: ParabolicSubspace, Q: ParabolicSubspace) -> int:
    """(-1)^(central split-torus dimension difference) for P contained in Q."""
    if not P.le(Q):
        raise ValueError("containment violated")
    return -1 if (P.dim_z() - Q.dim_z()) % 2 else 1


# ---------------------------------------------------------------------------
# ambient vectors and projections


def projections(H):
    """(r1 H, r2 H, r1^ H, r2^ H): the block projections relative to the two
    direct-sum decompositions of the ambient space.  r2 H is the constant
    vector through the last coordinate; r2^ H concentrates the coordinate sum
    on the distinguished line."""
    N = len(H)
    H = [Fraction(x) for x in H]
    r2 = [H[N - 1]] * N
    r1 = [a - b for a, b in zip(H, r2)]
    tot = sum(H, Fraction(0))
    r2h = [Fraction(0)] * (N - 1) + [tot]
    r1h = [a - b for a, b in zip(H, r2h)]
    return r1, r2, r1h, r2h


def _indicator(labels, N):
    v = [Fraction(0)] * N
    for l in labels:
        v[N - 1 if l == E0 else l - 1] += 1
    return v


def _scale_int(vec):
    """Clear denominators, keep the sign; returns a tuple of ints."""
    from math import lcm
    den = 1
    for x in vec:
        den = lcm(den, Fraction(x).denominator)
    return tuple(int(Fraction(x) * den) for x in vec)


def _dot_int(cov, H):
    s = 0
    for c, h in zip(cov, H):
        if c:
            s += c * h
    return s


def _all_pos(covs, H) -> int:
    for cov in covs:
        s = 0
        for c, h in zip(cov, H):
            if c:
                s += c * h
        if not (s > 0):
            return 0
    return 1


# ---------------------------------------------------------------------------
# the root/weight machinery for one ambient space


class GTilde:
    """Weight data and cone characteristic functions for one ambient
    dimension; everything relevant to a pair of nested parabolic subspaces is
    computed once and cached as integer covectors."""

    def __init__(self, n: int):
        self.n = n
        self.N = n + 1

    # -- subspace bases ------------------------------------------------------

    def z_basis(self, P: ParabolicSubspace):
        return [_indicator(b, self.N) for b in P.mblocks()]

    def a_gp_basis(self, P: ParabolicSubspace):
        return [_indicator(P.e0_block(), self.N)]

    def a_basis(self, P: ParabolicSubspace):
        return [_indicator(b, self.N) for b in P.blocks()]

    def a0_perp_basis(self, P: ParabolicSubspace):
        """Complement of the block-constant space: per block, differences to
        the first block element."""
        out = []
        for b in P.blocks():
            bs = sorted(b, key=lambda l: (l == E0, l))
            base = bs[0]
            for other in bs[1:]:
                v = _indicator([other], self.N)
                w = _indicator([base], self.N)
                out.append([a - c for a, c in zip(v, w)])
        return out

    def z_rel_basis(self, P: ParabolicSubspace, Q: ParabolicSubspace):
        """Basis of the complement of z_Q inside z_P cut out by the raw
        Q-weights (P contained in Q)."""
        zb = self.z_basis(P)
        raw_q = self.pi_hat_raw(Q)
        if not zb:
            return []
        rows = [[la.dot(d, z) for z in zb] for d in raw_q]
        if not rows:
            coeffs = [[Fraction(1) if i == j else Fraction(0) for j in range(len(zb))]
                      for i in range(len(zb))]
        else:
            coeffs = la.nullspace(rows)
        out = []
        for t in coeffs:
            v = [Fraction(0)] * self.N
            for c, z in zip(t, zb):
                v = [a + c * b for a, b in zip(v, z)]
            out.append(v)
        assert len(out) == P.dim_z() - Q.dim_z()
        return out

    # -- raw weights ----------------------------------------------------------

    @lru_cache(maxsize=None)
    def pi_hat_raw(self, P: ParabolicSubspace):
        """Indicator-sum covectors: one per chain member (the flag-determinant
        weights), in chain order."""
        vset = set(range(1, self.n + 1))
        out = []
        for m in P.chain:
            if E0 in m:
                out.append(tuple(-x for x in _indicator(vset - set(m), self.N)))
            else:
                out.append(tuple(_indicator(m, self.N)))
        return [list(v) for v in out]

    # -- classical root/weight sets for the extended group --------------------

    @lru_cache(maxsize=None)
    def delta(self, P: ParabolicSubspace, Q: ParabolicSubspace):
        """Relative simple roots as centroid differences of adjacent blocks
        lying in a common coarse block."""
        if not P.le(Q):
            raise ValueError("containment violated")
        blocks = P.blocks()
        qblocks = Q.blocks()
        out = []
        for b1, b2 in zip(blocks, blocks[1:]):
            if any(b1 <= qb and b2 <= qb for qb in qblocks):
                u = [Fraction(x, len(b1)) for x in _indicator(b1, self.N)]
                v = [Fraction(x, len(b2)) for x in _indicator(b2, self.N)]
                out.append([a - c for a, c in zip(u, v)])
        return out

    @lru_cache(maxsize=None)
    def delta_hat(self, P: ParabolicSubspace, Q: ParabolicSubspace):
        """Relative fundamental weights: prefix indicators recentred inside
        the enclosing coarse block."""
        if not P.le(Q):
            raise ValueError("containment violated")
        blocks = P.blocks()
        qblocks = Q.blocks()
        out = []
        prefix: frozenset = frozenset()
        for b1, b2 in zip(blocks, blocks[1:]):
            prefix = prefix | b1
            for qb in qblocks:
                if b1 <= qb and b2 <= qb:
                    D = prefix & qb
                    w = _indicator(D, self.N)
                    c = _indicator(qb, self.N)
                    f = Fraction(len(D), len(qb))
                    out.append([a - f * x for a, x in zip(w, c)])
                    break
        return out

    # -- quotient-restricted representatives (for the duality statements) -------

    def _restrict_project(self, P, Q, raw_list):
        """Orthogonal projections onto the relative center space: the
        representative inside the subspace of the functional's restriction
        (independent of the chosen ambient covector)."""
        S = self.z_rel_basis(P, Q)
        out = []
        if not S:
            return [[Fraction(0)] * self.N for _ in raw_list]
        Gm = [[la.dot(a, b) for b in S] for a in S]
        for raw in raw_list:
            t = la.solve(Gm, [la.dot(s, list(map(Fraction, raw))) for s in S])
            v = [Fraction(0)] * self.N
            for c, z in zip(t, S):
                v = [a + c * b for a, b in zip(v, z)]
            out.append(v)
        return out

    @lru_cache(maxsize=None)
    def pi(self, P: ParabolicSubspace, Q: ParabolicSubspace):
        """Relative simple roots restricted to the center space (in-subspace
        representatives)."""
        return self._restrict_project(P, Q, self.delta(P, Q))

    @lru_cache(maxsize=None)
    def pi_hat(self, P: ParabolicSubspace, Q: ParabolicSubspace):
        """Leftover flag weights restricted to the center space (in-subspace
        representatives)."""
        raw_p = self.pi_hat_raw(P)
        raw_q = self.pi_hat_raw(Q)
        qset = {tuple(v) for v in raw_q}
        rest = [v for v in raw_p if tuple(v) not in qset]
        return self._restrict_project(P, Q, rest)

    # -- integer-covector caches ----------------------------------------------
    #
    # Realization of the quotient weights as ambient covectors: the plain
    # family drops the distinguished coordinate from the roots (the
    # convention of setting the distinguished basis weight to zero), the hat
    # family pulls the classical weights back through the projection that
    # concentrates the coordinate sum on the distinguished line
    # (w becomes w - w(e0) * (1,..,1)).  Under this pair the tau/sigma
    # exchange relations hold at every ambient point, as does the
    # Gamma'/B-kernel relation; the alternating-sum identities mixing the
    # two families hold on their center-space domains and on the slice where
    # the base-coordinate sums of the arguments vanish (where the two
    # possible pullbacks of the roots agree).

    @lru_cache(maxsize=None)
    def _tau_cov(self, P, Q):
        return [_scale_int(v) for v in self.delta(P, Q)]

    @lru_cache(maxsize=None)
    def _tau_hat_cov(self, P, Q):
        return [_scale_int(v) for v in self.delta_hat(P, Q)]

    @lru_cache(maxsize=None)
    def _sigma_cov(self, P, Q):
        out = []
        for w in self.delta(P, Q):
            out.append(_scale_int(list(w[:self.N - 1]) + [Fraction(0)]))
        return out

    @lru_cache(maxsize=None)
    def _sigma_full_cov(self, P, Q):
        # roots pulled back through the second oblique projection (partner
        # of the full-correction hat realization in the dual alternating
        # sums)
        out = []
        for w in self.delta(P, Q):
            c0 = w[self.N - 1]
            out.append(_scale_int([a - c0 for a in w]))
        return out

    @lru_cache(maxsize=None)
    def _sigma_hat_cov(self, P, Q):
        # the correction spreads over the super group's distinguished block
        # only, so the covectors factor through the Levi decomposition of Q;
        # for the full group this is the all-ones correction.
        b0 = Q.e0_block()
        idx = [self.N - 1 if l == E0 else l - 1 for l in b0]
        out = []
        for w in self.delta_hat(P, Q):
            c0 = w[self.N - 1]
            v = list(w)
            for i in idx:
                v[i] = v[i] - c0
            out.append(_scale_int(v))
        return out

    @lru_cache(maxsize=None)
    def _sigma_hat_full_cov(self, P, Q):
        # all-ones correction regardless of the pair: the pullback of the
        # relative weights through the second oblique projection of the
        # whole space (this is the realization entering the product-side
        # resummation identities).
        out = []
        for w in self.delta_hat(P, Q):
            c0 = w[self.N - 1]
            out.append(_scale_int([a - c0 for a in w]))
        return out

    # -- characteristic functions ----------------------------------------------

    def tau(self, P, Q, H) -> int:
        return _all_pos(self._tau_cov(P, Q), H)

    def tau_hat(self, P, Q, H) -> int:
        return _all_pos(self._tau_hat_cov(P, Q), H)

    def sigma(self, P, Q, H) -> int:
        return _all_pos(self._sigma_cov(P, Q), H)

    def sigma_hat(self, P, Q, H) -> int:
        return _all_pos(self._sigma_hat_cov(P, Q), H)

    def sigma_hat_full(self, P, Q, H) -> int:
        return _all_pos(self._sigma_hat_full_cov(P, Q), H)

    def sigma_full(self, P, Q, H) -> int:
        return _all_pos(self._sigma_full_cov(P, Q), H)

    def wall_covectors(self, P, Q):
        """All covectors entering the four characteristic functions (used to
        filter wall-generic sample points)."""
        return (self._tau_cov(P, Q) + self._tau_hat_cov(P, Q)
                + self._sigma_cov(P, Q) + self._sigma_hat_cov(P, Q))

    # -- alternating sums --------------------------------------------------------

    def langlands_sum(self, Q, P, H) -> int:
        """Sum over S between Q and P of sign * sigma_Q^S(H) * sigma^_S^P(H);
        0 or 1, and 1 exactly on the diagonal."""
        if not Q.le(P):
            raise ValueError("containment violated")
        total = 0
        for S in between(Q, P):
            total += (epsilon_sign(Q, S) * self.sigma(Q, S, H)
                      * self.sigma_hat(S, P, H))
        if total not in (0, 1):
            raise AssertionError(f"alternating sum out of range: {total}")
        return total

    def gamma_prime(self, P, H, X) -> int:
        """Arthur's truncation kernel with tau-functions.  The sign on each
        term is the absolute one (split-center dimension of the summand
        against the full group); the relative sign printed in some sources
        differs by a global factor and breaks the expansion lemma."""
        G = full_group(self.n)
        HX = [Fraction(a) - Fraction(b) for a, b in zip(H, X)]
        total = 0
        for R in above(P):
            total += (epsilon_sign(R, G) * self.tau_hat(R, G, HX)
                      * self.tau(P, R, H))
        return total

    def b_function(self, P, H, X) -> int:
        """The sigma-analog of the truncation kernel."""
        G = full_group(self.n)
        HX = [Fraction(a) - Fraction(b) for a, b in zip(H, X)]
        total = 0
        for R in above(P):
            total += (epsilon_sign(R, G) * self.sigma_hat(R, G, HX)
                      * self.sigma(P, R, H))
        return total


    def sigma_hat_expansion(self, P, H, X) -> tuple[int, int]:
        """Both sides of the expansion of sigma^_P(H - X) through the
        b-functions of the groups above P."""
        G = full_group(self.n)
        HX = [Fraction(a) - Fraction(b) for a, b in zip(H, X)]
        lhs = self.sigma_hat(P, G, HX)
        rhs = 0
        for R in above(P):
            rhs += (epsilon_sign(R, G) * self.sigma_hat(P, R, H)
                    * self.b_function(R, H, X))
        return lhs, rhs

    # -- half-sum weights -----------------------------------------------------

    def rho_underline(self, P: ParabolicSubspace):
        """Sum of the determinant weights of the flag subspace and the dual
        flag subspace, as a raw covector."""
        ws, i, j = P.vflag_ij()
        vset = set(range(1, self.n + 1))
        w_i = _indicator(ws[i], self.N)
        w_j_comp = _indicator(vset - set(ws[j]), self.N)
        return [a - b for a, b in zip(w_i, w_j_comp)]

    def rho_difference(self, P: ParabolicSubspace):
        """2 rho of the extended parabolic minus 2 rho of the base parabolic,
        as a raw covector on the ambient space."""
        def two_rho(blocks, N):
            out = [Fraction(0)] * N
            sizes = [len(b) for b in blocks]
            for m, b in enumerate(blocks):
                wt = sum(sizes[m + 1:]) - sum(sizes[:m])
                ind = _indicator(b, N)
                out = [a + wt * c for a, c in zip(out, ind)]
            return out

        big = two_rho(P.blocks(), self.N)
        ws, i, j = P.vflag_ij()
        vblocks = []
        prev = frozenset()
        for m in ws[1:]:
            vblocks.append(frozenset(m - prev))
            prev = m
        small = two_rho(vblocks, self.N)
        return [a - b for a, b in zip(big, small)]

    def project_z(self, P: ParabolicSubspace, v):
        """Orthogonal projection of a covector onto the center space."""
        zb = self.z_basis(P)
        if not zb:
            return [Fraction(0)] * self.N
        Gm = [[la.dot(a, b) for b in zb] for a in zb]
        rhs = [la.dot(a, list(map(Fraction, v))) for a in zb]
        t = la.solve(Gm, rhs)
        out = [Fraction(0)] * self.N
        for c, z in zip(t, zb):
            out = [a + c * b for a, b in zip(out, z)]
        return out

    def project_a(self, P: ParabolicSubspace, v):
        """Orthogonal projection onto the block-constant space (blockwise
        averages)."""
        out = [Fraction(0)] * self.N
        v = [Fraction(x) for x in v]
        for b in P.blocks():
            idxs = [self.N - 1 if l == E0 else l - 1 for l in b]
            avg = sum(v[i] for i in idxs) / len(idxs)
            for i in idxs:
                out[i] = avg
        return out


# ---------------------------------------------------------------------------
# descent data and the product side


@dataclass(frozen=True)
class DescentDatum:
    """Partition of the base coordinates into a plus part and one-dimensional
    lines grouped by factor index."""

    n: int
    vplus: frozenset
    parts: tuple         # tuple of tuples of coordinate labels, one per factor

    def __post_init__(self):
        object.__setattr__(self, "vplus", frozenset(self.vplus))
        object.__setattr__(self, "parts", tuple(tuple(sorted(p)) for p in self.parts))
        cover = set(self.vplus)
        for p in self.parts:
            if not p:
                raise ValueError("empty factor")
            if cover & set(p):
                raise ValueError("factor overlaps earlier data")
            cover |= set(p)
        if cover != set(range(1, self.n + 1)):
            raise ValueError("datum must cover all base coordinates")

    def m1_blocks(self):
        """Blocks of the distinguished Levi: the plus part with the line,
        then singleton lines."""
        blocks = [frozenset(self.vplus | {E0})]
        for p in self.parts:
            blocks += [frozenset([x]) for x in p]
        return blocks

    def minus_coords(self):
        out = []
        for p in self.parts:
            out += list(p)
        return sorted(out)


@dataclass(frozen=True)
class ProductParabolic:
    """One parabolic subspace per factor, each over its own relabeled
    ambient space of dimension n_i + 1."""

    factors: tuple        # tuple of ParabolicSubspace

    def le(self, other: "ProductParabolic") -> bool:
        return all(a.le(b) for a, b in zip(self.factors, other.factors))

    def dim_z(self) -> int:
        return sum(f.dim_z() for f in self.factors)


def _relabel(subset, coords):
    """Map a set of global labels to the factor's 1..n_i labels (0 fixed)."""
    pos = {c: k + 1 for k, c in enumerate(coords)}
    return frozenset(pos[x] if x != E0 else E0 for x in subset)


def parabolic_minus(Q: ParabolicSubspace, datum: DescentDatum) -> ProductParabolic:
    """Per-factor flags by intersection and duplicate elimination, with the
    induced pointer couple."""
    m1 = datum.m1_blocks()
    for member in Q.chain:
        if not _is_union_of(member, m1):
            raise ValueError("parabolic subspace does not contain the distinguished Levi")
    ws, i0, j0 = Q.vflag_ij()
    factors = []
    for coords in datum.parts:
        cs = set(coords)
        seen = []
        index_of = {}
        for k, w in enumerate(ws):
            cut = frozenset(set(w) & cs)
            if not seen or cut != seen[-1]:
                seen.append(cut)
            index_of[k] = len(seen) - 1
        i0p, j0p = index_of[i0], index_of[j0]
        flag_local = [_relabel(m, coords) for m in seen]
        factors.append(ParabolicSubspace.from_vflag(flag_local, i0p, j0p, len(coords)))
    return ProductParabolic(tuple(factors))


def _is_union_of(member, blocks) -> bool:
    rest = set(member)
    for b in blocks:
        if b <= rest:
            rest -= b
    return not rest


def enumerate_product_parabolics(datum: DescentDatum):
    """All factorwise parabolic subspaces containing the per-factor minimal
    Levi (singleton lines plus the distinguished line)."""
    per_factor = []
    for coords in datum.parts:
        per_factor.append(enumerate_parabolic_subspaces(len(coords), guard=4))
    return [ProductParabolic(t) for t in itertools.product(*per_factor)]


def product_between(R: ProductParabolic, S: ProductParabolic):
    """All T with R contained in T contained in S, factorwise."""
    per = [between(a, b) for a, b in zip(R.factors, S.factors)]
    return [ProductParabolic(t) for t in itertools.product(*per)]


def product_full(datum: DescentDatum) -> ProductParabolic:
    return ProductParabolic(tuple(full_group(len(p)) for p in datum.parts))


def product_epsilon(R: ProductParabolic, S: ProductParabolic) -> int:
    if not R.le(S):
        raise ValueError("containment violated")
    return -1 if (R.dim_z() - S.dim_z()) % 2 else 1


class DescentEngine:
    """Evaluation helpers tying the ambient side and the product side of a
    descent datum together: common coordinates are the minus-part labels."""

    def __init__(self, datum: DescentDatum):
        self.datum = datum
        self.g = GTilde(datum.n)
        self.gi = [GTilde(len(p)) for p in datum.parts]
        self.minus = datum.minus_coords()
        self._desc_cov_cache = {}
        self._families_cache = {}

    # -- point embeddings ------------------------------------------------------

    def to_ambient(self, H):
        """A point given on the minus coordinates, placed into the ambient
        space (zero on the plus part and the distinguished line)."""
        v = [Fraction(0)] * (self.datum.n + 1)
        for x, c in zip(H, self.minus):
            v[c - 1] = Fraction(x)
        return v

    def to_factor(self, H, k: int):
        coords = self.datum.parts[k]
        lut = dict(zip(self.minus, H))
        return [Fraction(lut[c]) for c in coords] + [Fraction(0)]

    # -- product-side functions -------------------------------------------------

    def sigma_prod(self, R: ProductParabolic, S: ProductParabolic, H) -> int:
        out = 1
        for k, (a, b) in enumerate(zip(R.factors, S.factors)):
            out *= self.gi[k].sigma(a, b, self.to_factor(H, k))
        return out

    def sigma_prod_full(self, R: ProductParabolic, S: ProductParabolic, H) -> int:
        out = 1
        for k, (a, b) in enumerate(zip(R.factors, S.factors)):
            out *= self.gi[k].sigma_full(a, b, self.to_factor(H, k))
        return out

    def sigma_hat_prod(self, R: ProductParabolic, S: ProductParabolic, H) -> int:
        out = 1
        for k, (a, b) in enumerate(zip(R.factors, S.factors)):
            out *= self.gi[k].sigma_hat_full(a, b, self.to_factor(H, k))
        return out

    def pi_hat_raw_prod(self, R: ProductParabolic):
        """Raw factor weights pulled back to the minus coordinates."""
        out = []
        for k, f in enumerate(R.factors):
            coords = self.datum.parts[k]
            for cov in self.gi[k].pi_hat_raw(f):
                v = [Fraction(0)] * len(self.minus)
                for kk, c in enumerate(coords):
                    v[self.minus.index(c)] = cov[kk]
                # distinguished-line entries of raw weights are always zero
                out.append(v)
        return out

    # -- subspaces ---------------------------------------------------------------

    def z_basis_ambient(self, P: ParabolicSubspace):
        """Center-space basis of an ambient parabolic subspace, restricted to
        the minus coordinates (entries elsewhere vanish for groups above the
        distinguished Levi)."""
        out = []
        for b in self.g.z_basis(P):
            out.append([b[c - 1] for c in self.minus])
        return out

    def z_basis_product(self, R: ProductParabolic):
        out = []
        for k, f in enumerate(R.factors):
            coords = self.datum.parts[k]
            for b in self.gi[k].z_basis(f):
                v = [Fraction(0)] * len(self.minus)
                for kk, c in enumerate(coords):
                    v[self.minus.index(c)] = b[kk]
                out.append(v)
        return out

    # -- the descent kernel ------------------------------------------------------

    def sigma_descent_cov(self, P: ParabolicSubspace, T: ParabolicSubspace):
        """Relative root covectors with each wall touching the distinguished
        block corrected over (the factor of its other side) + (the
        distinguished line); walls away from that block need no correction.
        This is the realization under which the product kernel splits into
        the rigid members' kernels."""
        key = (P, T)
        cache = self._desc_cov_cache
        if key in cache:
            return cache[key]
        g = self.g
        N = g.N
        blocks = P.blocks()
        qblocks = T.blocks()
        covs = []

        def ind(bb):
            v = [Fraction(0)] * N
            for l in bb:
                v[N - 1 if l == E0 else l - 1] = Fraction(1, len(bb))
            return v

        for b1, b2 in zip(blocks, blocks[1:]):
            if not any(b1 <= qb and b2 <= qb for qb in qblocks):
                continue
            alpha = [a - c for a, c in zip(ind(b1), ind(b2))]
            a0 = alpha[N - 1]
            if a0:
                other = b2 if E0 in b1 else b1
                support = {N - 1}
                for p in self.datum.parts:
                    if other & set(p):
                        support |= {l - 1 for l in p}
                for i in support:
                    alpha[i] = alpha[i] - a0
            covs.append(alpha)
        cache[key] = covs
        return covs

    def sigma_descent(self, P, T, H) -> int:
        Hf = [Fraction(x) for x in H]
        for cov in self.sigma_descent_cov(P, T):
            if not (la.dot(cov, Hf) > 0):
                return 0
        return 1

    def b_function_descent(self, P: ParabolicSubspace, H, X) -> int:
        """Ambient kernel in the descent realization (for the splitting of
        the product kernel over the rigid fiber)."""
        g = self.g
        G = full_group(self.datum.n)
        HX = [Fraction(a) - Fraction(b) for a, b in zip(H, X)]
        total = 0
        for T in above(P):
            total += (epsilon_sign(T, G) * g.sigma_hat(T, G, HX)
                      * self.sigma_descent(P, T, H))
        return total

    def b_family(self, R: ProductParabolic, H, points) -> int:
        """The family kernel: double alternating sum over the product groups
        above R and the fiber members of each, with the family's points
        shifting the hat arguments.  `points` maps each relevant ambient
        member to its vector; H lives on the minus coordinates."""
        G = full_group(self.datum.n)
        Ha = self.to_ambient(H)
        total = 0
        for T in product_between(R, product_full(self.datum)):
            sig = self.sigma_prod_full(R, T, H)
            if not sig:
                continue
            _, fibT, _ = self.families(T)
            inner = 0
            for Q in fibT:
                arg = [a - b for a, b in zip(Ha, points[Q])]
                inner += epsilon_sign(Q, G) * self.g.sigma_hat(Q, G, arg)
            total += sig * inner
        return total

    def same_space(self, A, B) -> bool:
        if len(A) != len(B):
            return False
        if not A:
            return True
        return la.rank(A) == la.rank(A + B) == la.rank(B)

    def z_points(self, basis, coeffs):
        v = [Fraction(0)] * len(self.minus)
        for c, b in zip(coeffs, basis):
            v = [a + Fraction(c) * x for a, x in zip(v, b)]
        return v

    # -- families ------------------------------------------------------------------

    def families(self, R: ProductParabolic):
        """(closure family, fiber family, rigid fiber family) of the ambient
        parabolic subspaces above the distinguished Levi, sorted by the
        factorwise image."""
        if R in self._families_cache:
            return self._families_cache[R]
        m1 = self.datum.m1_blocks()
        cands = enumerate_parabolic_subspaces(self.datum.n, levi_blocks=m1, guard=4)
        fbar, fib, f0 = [], [], []
        zR = self.z_basis_product(R)
        for P in cands:
            Pm = parabolic_minus(P, self.datum)
            if R.le(Pm):
                fbar.append(P)
            if Pm == R:
                fib.append(P)
                if self.same_space(self.z_basis_ambient(P), zR):
                    f0.append(P)
        self._families_cache[R] = (fbar, fib, f0)
        return fbar, fib, f0

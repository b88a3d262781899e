"""Verification suites: each function runs one battery of finitely checkable
identities and returns a report dict with the instance count, failures (with
reproduction data) and the seed.  The command-line front end and the
acceptance tests both drive these."""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from . import linalg as la
from .cones import (DescentDatum, DescentEngine, GTilde, ParabolicSubspace,
                    ProductParabolic, above, between, enumerate_parabolic_subspaces,
                    enumerate_product_parabolics, epsilon_sign, full_group,
                    parabolic_minus, product_between, product_epsilon,
                    product_full, projections)
from . import chambers as ch


def _report(suite, instances, failures, seed, t0, extra=None):
    rep = {
        "suite": suite,
        "instances": instances,
        "failures": failures,
        "seed": seed,
        "wall_time": round(time.time() - t0, 3),
    }
    if extra:
        rep.update(extra)
    return rep


def _sample_span(rng, basis, N, lo=-30, hi=30):
    v = [Fraction(0)] * N
    for b in basis:
        c = rng.randint(lo, hi)
        v = [a + c * x for a, x in zip(v, b)]
    return v


def _nonzero_on(covs, args) -> bool:
    for cov in covs:
        for arg in args:
            if la.dot([Fraction(c) for c in cov], [Fraction(x) for x in arg]) == 0:
                return False
    return True


# ---------------------------------------------------------------------------
# criterion: cone identities


def cones_suite(n: int, points: int = 10000, seed: int = 0) -> dict:
    """sig/tau exchange, dual root bases, the Langlands alternating sum, the
    expansion of sigma-hat through the B kernel, and the Gamma'/B relation.

    Domains: the exchange relation's hat part and the expansion identities
    hold at arbitrary ambient points; the plain part of the exchange and the
    identities mixing sigma with tau hold where the base-coordinate sums of
    the relevant arguments vanish, which is where both realizations of the
    quotient weights agree (everything is exact rational arithmetic with
    strict inequalities, and sampled points are wall-generic).
    """
    t0 = time.time()
    rng = random.Random(seed)
    g = GTilde(n)
    N = n + 1
    ps = enumerate_parabolic_subspaces(n)
    G = full_group(n)
    failures = []
    instances = 0
    pairs = [(P, Q) for P in ps for Q in ps if P.le(Q)]
    per_pair = max(1, points // max(1, len(pairs)))

    # --- newRoots: exact dual bases, obtuse/acute (no sampling) ---
    for P, Q in pairs:
        instances += 1
        pi = g.pi(P, Q)
        pih = g.pi_hat(P, Q)
        k = len(pi)
        ok = len(pih) == k
        if ok and k:
            M = [[la.dot(a, b) for b in pih] for a in pi]
            ones = sum(1 for row in M for x in row if x == 1)
            zeros = sum(1 for row in M for x in row if x == 0)
            ok = ones == k and ones + zeros == k * k
            ok = ok and all(la.dot(pi[i], pi[j]) <= 0
                            for i in range(k) for j in range(k) if i != j)
            ok = ok and all(la.dot(pih[i], pih[j]) >= 0
                            for i in range(k) for j in range(k) if i != j)
        if not ok:
            failures.append({"check": "dual-bases", "pair": (_pjson(P), _pjson(Q))})

    # --- sig-tau exchange ---
    for P, Q in pairs:
        covs = g.wall_covectors(P, Q)
        good = 0
        tries = 0
        while good < per_pair and tries < 50 * per_pair:
            tries += 1
            H = [rng.randint(-40, 40) for _ in range(N)]
            # part 2 at arbitrary points
            r1, r2, r1h, r2h = projections(H)
            if not _nonzero_on(covs, [H, r1h]):
                continue
            good += 1
            instances += 2
            if g.sigma_hat_full(P, Q, H) != g.tau_hat(P, Q, r1h):
                failures.append({"check": "exchange-hat", "pair": (_pjson(P), _pjson(Q)),
                                 "H": [str(x) for x in H]})
            if g.tau(P, Q, H) != g.sigma(P, Q, r1):
                failures.append({"check": "exchange", "pair": (_pjson(P), _pjson(Q)),
                                 "H": [str(x) for x in H]})

    # --- Langlands alternating sum: on the relative center space ---
    for Q, P in pairs:
        S = g.z_rel_basis(Q, P)
        covs = []
        for R in between(Q, P):
            covs += g.wall_covectors(Q, R) + g.wall_covectors(R, P)
        good = 0
        tries = 0
        while good < per_pair and tries < 60 * per_pair:
            tries += 1
            H = _sample_span(rng, S, N) if S else [Fraction(0)] * N
            if S and not _nonzero_on(covs, [H]):
                continue
            good += 1
            instances += 1
            val = g.langlands_sum(Q, P, H)
            if val != (1 if Q == P else 0):
                failures.append({"check": "alternating-sum", "pair": (_pjson(Q), _pjson(P)),
                                 "H": [str(x) for x in H]})
            if not S:
                break

    # --- expansion of sigma-hat through B, on the zero-sum slice ---
    for P in ps:
        good = 0
        tries = 0
        covs = []
        for R in above(P):
            covs += g.wall_covectors(P, R) + g.wall_covectors(R, G)
        while good < per_pair and tries < 60 * per_pair:
            tries += 1
            H = _zero_base_sum([rng.randint(-40, 40) for _ in range(N)], n)
            X = _zero_base_sum([rng.randint(-40, 40) for _ in range(N)], n)
            HX = [a - b for a, b in zip(H, X)]
            if not _nonzero_on(covs, [H, X, HX]):
                continue
            good += 1
            instances += 1
            lhs, rhs = g.sigma_hat_expansion(P, H, X)
            if lhs != rhs:
                failures.append({"check": "kernel-expansion", "P": _pjson(P),
                                 "H": [str(x) for x in H], "X": [str(x) for x in X]})

    # --- Gamma'/B relation on its stated domain ---
    for P in ps:
        zb = g.z_basis(P)
        ab = g.a_basis(P)
        coeffs = la.nullspace([[Fraction(sum(b)) for b in ab]])
        apg = []
        for t in coeffs:
            v = [Fraction(0)] * N
            for c, b in zip(t, ab):
                v = [a + c * bb for a, bb in zip(v, b)]
            apg.append(v)
        covs = []
        for R in above(P):
            covs += g.wall_covectors(P, R) + g.wall_covectors(R, G)
        good = 0
        tries = 0
        while good < per_pair and tries < 60 * per_pair:
            tries += 1
            H = _sample_span(rng, zb, N)
            T = _sample_span(rng, apg, N)
            r1T, r2T, _, _ = projections(T)
            HT = [a - b for a, b in zip(H, T)]
            _, _, _, r2hH = projections(H)
            HTX = [a - b for a, b in zip(HT, r2hH)]
            Hm = [a - b for a, b in zip(H, r1T)]
            HmX = [a - b for a, b in zip(Hm, r2T)]
            if not _nonzero_on(covs, [HT, HTX, Hm, HmX]):
                continue
            good += 1
            instances += 1
            if g.gamma_prime(P, HT, r2hH) != g.b_function(P, Hm, r2T):
                failures.append({"check": "truncation-kernels", "P": _pjson(P),
                                 "H": [str(x) for x in H], "T": [str(x) for x in T]})

    return _report("cones", instances, failures, seed, t0, {"n": n})


def _zero_base_sum(v, n):
    """Adjust the last base coordinate so the base-coordinate sum vanishes."""
    v = [Fraction(x) for x in v]
    s = sum(v[:n])
    if n:
        v[n - 1] -= s
    return v


def _pjson(P: ParabolicSubspace):
    ws, i, j = P.vflag_ij()
    return {"flag": [sorted(w) for w in ws[1:-1]] + [sorted(ws[-1])], "i": i, "j": j}


# ---------------------------------------------------------------------------
# criterion: descent combinatorics


def descent_data(n: int, max_factors: int = 2):
    """All descent shapes at base dimension n with at most the given number
    of factors (deduplicated up to factor order)."""
    if n > 3 or max_factors > 2:
        raise ValueError("descent enumeration guard: n <= 3 and at most 2 factors")
    out = []
    coords = list(range(1, n + 1))
    for r in range(0, n):
        for vplus in itertools.combinations(coords, r):
            rest = [c for c in coords if c not in vplus]
            for parts in _partitions_ordered(rest, max_factors):
                out.append(DescentDatum(n, frozenset(vplus), tuple(parts)))
    return out


def _partitions_ordered(items, max_parts):
    if not items:
        return
    first = items[0]
    if max_parts == 1:
        yield [tuple(items)]
        return
    rest = items[1:]
    for k in range(len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            blk = tuple(sorted((first,) + combo))
            remaining = [x for x in rest if x not in combo]
            if not remaining:
                yield [blk]
            else:
                for tail in _partitions_ordered(remaining, max_parts - 1):
                    yield [blk] + tail


def descent_suite(n: int, seed: int = 0, samples: int = 24) -> dict:
    """The closure / fiber / rigid-fiber family identities attached to the
    factorwise image of parabolic subspaces, and the two kernel-sum
    identities for orthogonal-positive point families."""
    t0 = time.time()
    rng = random.Random(seed)
    failures = []
    instances = 0
    for datum in descent_data(n):
        eng = DescentEngine(datum)
        g = eng.g
        G = full_group(datum.n)
        m = len(eng.minus)
        Hfull = product_full(datum)
        for R in enumerate_product_parabolics(datum):
            fbar, fib, f0 = eng.families(R)
            zR = eng.z_basis_product(R)
            rawR = eng.pi_hat_raw_prod(R)
            # -- closure-family sum = closed-cone indicator --
            got = 0
            tries = 0
            while got < samples and tries < 40 * samples:
                tries += 1
                H = [rng.randint(-20, 20) for _ in range(m)]
                Ha = eng.to_ambient(H)
                if not _nonzero_on([c for P in fbar for c in g._sigma_hat_cov(P, G)], [Ha]):
                    continue
                if not _nonzero_on(rawR, [H]):
                    continue
                got += 1
                instances += 1
                lhs = sum(epsilon_sign(P, G) * g.sigma_hat(P, G, Ha) for P in fbar)
                rhs = 1 if all(la.dot(c, [Fraction(x) for x in H]) < 0 for c in rawR) else 0
                if lhs != rhs:
                    failures.append({"check": "closure-family", "datum": _djson(datum),
                                     "R": _prodjson(R), "H": H})
            # -- fiber-family sum = signed product cone --
            got = 0
            tries = 0
            while got < samples and tries < 40 * samples:
                tries += 1
                H = [rng.randint(-20, 20) for _ in range(m)]
                Ha = eng.to_ambient(H)
                covs = [c for P in fib for c in g._sigma_hat_cov(P, G)]
                for k, f in enumerate(R.factors):
                    covs = covs  # factor covs checked through engine below
                if not _nonzero_on(covs, [Ha]):
                    continue
                got += 1
                instances += 1
                lhs = sum(epsilon_sign(P, G) * g.sigma_hat(P, G, Ha) for P in fib)
                rhs = product_epsilon(R, Hfull) * eng.sigma_hat_prod(R, Hfull, H)
                if lhs != rhs:
                    failures.append({"check": "fiber-family", "datum": _djson(datum),
                                     "R": _prodjson(R), "H": H})
            # -- pointwise inversion over the fiber (vanishing off the rigid set) --
            for P in fbar:
                zP = eng.z_basis_ambient(P)
                zPR = _intersect_span(zP, zR, m)
                for which, basis in (("generic", zR), ("rigid", zPR)):
                    got = 0
                    tries = 0
                    while got < max(4, samples // 3) and tries < 40 * samples:
                        tries += 1
                        X = _sample_span(rng, basis, m, lo=-20, hi=20)
                        Xa = eng.to_ambient(X)
                        allcovs = []
                        for Q in fbar:
                            if not Q.le(P):
                                continue
                            allcovs += g._sigma_hat_cov(Q, P)
                        if not _nonzero_on([c for c in allcovs if any(
                                la.dot([Fraction(y) for y in c], [Fraction(x) for x in b]) != 0 for b in basis)], [Xa]):
                            continue
                        skip = False
                        for Q in fbar:
                            if not Q.le(P):
                                continue
                            Qm = parabolic_minus(Q, datum)
                            for k, (rf, qf) in enumerate(zip(R.factors, Qm.factors)):
                                for cov in eng.gi[k]._sigma_cov(rf, qf):
                                    val = la.dot([Fraction(c) for c in cov], eng.to_factor(X, k))
                                    live = any(la.dot([Fraction(c) for c in cov], eng.to_factor(b, k)) != 0 for b in basis)
                                    if live and val == 0:
                                        skip = True
                        if skip:
                            continue
                        got += 1
                        instances += 1
                        tot = 0
                        for Q in fbar:
                            if not Q.le(P):
                                continue
                            Qm = parabolic_minus(Q, datum)
                            tot += (epsilon_sign(Q, P) * eng.sigma_prod(R, Qm, X)
                                    * g.sigma_hat(Q, P, Xa))
                        in_fib = P in fib
                        in_zp = _in_span(zP, X)
                        expect = 1 if (in_fib and in_zp) else 0
                        if tot != expect:
                            failures.append({"check": "fiber-inversion", "datum": _djson(datum),
                                             "R": _prodjson(R), "P": _pjson(P),
                                             "X": [str(x) for x in X], "domain": which,
                                             "got": tot, "expect": expect})
                        if not basis:
                            break
            # -- kernel sums for orthogonal-positive families --
            if f0:
                fam = _orth_positive_family(rng, eng, R, f0)
                if fam is not None:
                    inst, fails = _family_checks(rng, eng, R, fbar, fib, f0, fam, samples)
                    instances += inst
                    failures += fails
    return _report("descent", instances, failures, seed, t0, {"n": n})


def _intersect_span(A, B, m):
    """Basis of span(A) intersect span(B)."""
    if not A or not B:
        return []
    rows = A + B
    rel = la.nullspace([list(col) for col in zip(*[[Fraction(x) for x in r] for r in rows])])
    out = []
    for t in rel:
        v = [Fraction(0)] * m
        for c, a in zip(t[:len(A)], A):
            v = [x + c * y for x, y in zip(v, a)]
        if any(x != 0 for x in v):
            out.append(v)
    # reduce to an independent set
    basis = []
    for v in out:
        if not la.in_span(basis, v):
            basis.append(v)
    return basis


def _in_span(basis, v) -> bool:
    if not basis:
        return all(Fraction(x) == 0 for x in v)
    return la.in_span(basis, [Fraction(x) for x in v])


def _orth_positive_family(rng, eng: DescentEngine, R, f0):
    """Nonnegative pair-weights over the block set of the rigid fiber's
    common Levi; returns {P: ambient point} or None when the block sets
    disagree (which would violate the convexity lemma)."""
    datum = eng.datum
    N = datum.n + 1
    blocksets = {tuple(sorted(tuple(sorted(b)) for b in P.blocks())) for P in f0}
    if len(blocksets) != 1:
        return None
    blocks = [frozenset(b) for b in next(iter(blocksets))]
    c = {}
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            c[(i, j)] = Fraction(rng.randint(0, 5))
    base = {frozenset(b): Fraction(rng.randint(-4, 4)) for b in blocks}
    fam = {}
    for P in f0:
        order = [frozenset(b) for b in P.blocks()]
        v = [Fraction(0)] * N
        for b in order:
            idx = [N - 1 if l == 0 else l - 1 for l in b]
            for i in idx:
                v[i] += base[b]
        for x in range(len(order)):
            for y in range(x + 1, len(order)):
                bi = blocks.index(order[x]) if order[x] in blocks else None
                bj = blocks.index(order[y]) if order[y] in blocks else None
                i, j = sorted((bi, bj))
                w = c[(i, j)]
                sgn = 1 if bi == i else -1
                # u_{first} - u_{second} with the pair weight
                for l in order[x]:
                    v[N - 1 if l == 0 else l - 1] += sgn * w / len(order[x])
                for l in order[y]:
                    v[N - 1 if l == 0 else l - 1] -= sgn * w / len(order[y])
        fam[P] = v
    return fam


def _project_blocks(P: ParabolicSubspace, v, N):
    out = [Fraction(0)] * N
    for b in P.blocks():
        idxs = [N - 1 if l == 0 else l - 1 for l in b]
        avg = sum(v[i] for i in idxs) / len(idxs)
        for i in idxs:
            out[i] = avg
    return out


def _family_point(eng, fam, f0, Q):
    """Y_Q: orthogonal block projection of the point of any rigid member
    inside Q (choice independence asserted)."""
    N = eng.datum.n + 1
    vals = []
    for P, Y in fam.items():
        if P.le(Q):
            vals.append(tuple(_project_blocks(Q, Y, N)))
    if not vals:
        return None
    if len(set(vals)) != 1:
        raise AssertionError("family projection depends on the member")
    return list(vals[0])


def _family_checks(rng, eng: DescentEngine, R, fbar, fib, f0, fam, samples):
    """The resummation identity for the family kernel and the generic-point
    splitting of the product kernel into the rigid members' kernels."""
    datum = eng.datum
    g = eng.g
    N = datum.n + 1
    G = full_group(datum.n)
    m = len(eng.minus)
    failures = []
    instances = 0
    zR = eng.z_basis_product(R)
    # points Y_Q for every Q in the closure family
    ys = {}
    for Q in fbar:
        y = _family_point(eng, fam, f0, Q)
        if y is None:
            return 0, [{"check": "family-structure", "datum": _djson(datum),
                        "R": _prodjson(R), "note": "closure member without rigid member"}]
        ys[Q] = y

    # sub-families for every product group above R
    Hsup = product_full(datum)
    sups = product_between(R, Hsup)

    def all_points(H):
        pts = dict(ys)
        for T in product_between(R, Hsup):
            _, fibT, _ = eng.families(T)
            for Q in fibT:
                if Q not in pts:
                    pts[Q] = _family_point(eng, fam, f0, Q)
        return pts

    def b_kernel(S, H):
        return eng.b_family(S, H, all_points(H))

    got = 0
    tries = 0
    while got < samples and tries < 60 * samples:
        tries += 1
        H = _sample_span(rng, zR, m, lo=-25, hi=25)
        Ha = eng.to_ambient(H)
        # wall filter: every hat-covector at its shifted argument, every
        # product sigma-covector at H, and the interiors of the ambient
        # kernels on the splitting side (relative sigma at H, absolute hat
        # at H shifted by the rigid member's point)
        ok = True
        for Q in fbar:
            arg = [a - b for a, b in zip(Ha, ys[Q])]
            if not _nonzero_on(g._sigma_hat_cov(Q, G), [arg]):
                ok = False
                break
        if ok:
            for P in f0:
                argP = [a - b for a, b in zip(Ha, ys[P])]
                for T in above(P):
                    if not (_nonzero_on(eng.sigma_descent_cov(P, T), [Ha])
                            and _nonzero_on(g._sigma_hat_cov(T, G), [argP])):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            for S in sups:
                for T in product_between(S, Hsup):
                    for k, (sf, tf) in enumerate(zip(S.factors, T.factors)):
                        covs = (eng.gi[k]._sigma_full_cov(sf, tf)
                                + eng.gi[k]._sigma_hat_full_cov(sf, tf))
                        for cov in covs:
                            if la.dot([Fraction(c) for c in cov],
                                      eng.to_factor(H, k)) == 0:
                                ok = False
                    if not ok:
                        break
                if not ok:
                    break
        if not ok:
            continue
        got += 1
        instances += 1
        # resummation: fiber sum with shifts = signed sum of family kernels
        lhs = 0
        for P in fib:
            arg = [a - b for a, b in zip(Ha, ys[P])]
            lhs += epsilon_sign(P, G) * g.sigma_hat(P, G, arg)
        rhs = 0
        for S in sups:
            rhs += (product_epsilon(R, S) * eng.sigma_hat_prod(R, S, H)
                    * b_kernel(S, H))
        if lhs != rhs:
            failures.append({"check": "family-resummation", "datum": _djson(datum),
                             "R": _prodjson(R), "H": [str(x) for x in H]})
        # generic splitting into rigid members' kernels
        lhs2 = b_kernel(R, H)
        rhs2 = 0
        for P in f0:
            rhs2 += eng.b_function_descent(P, Ha, ys[P])
        if lhs2 != rhs2:
            failures.append({"check": "family-splitting", "datum": _djson(datum),
                             "R": _prodjson(R), "H": [str(x) for x in H]})
    return instances, failures


def _djson(d: DescentDatum):
    return {"n": d.n, "vplus": sorted(d.vplus), "parts": [list(p) for p in d.parts]}


def _prodjson(R: ProductParabolic):
    return [ _pjson(f) for f in R.factors ]


# ---------------------------------------------------------------------------
# criterion: chamber complex


def chambers_suite(m: int, seed: int = 0, families: int = 200) -> dict:
    t0 = time.time()
    rng = random.Random(seed)
    failures = []
    instances = 0
    chambers = ch.all_chambers(m)
    roots = [(a, b) for a in range(1, m + 1) for b in range(1, m + 1) if a != b]

    # distances agree with breadth-first graph distance on all ordered pairs
    from collections import deque
    for P1 in chambers:
        dist = {P1: 0}
        q = deque([P1])
        while q:
            u = q.popleft()
            for v in ch.neighbours(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        for P2 in chambers:
            if P1 == P2:
                continue
            instances += 1
            if dist[P2] != ch.distance(P2, P1):
                failures.append({"check": "distance", "P1": P1.perm, "P2": P2.perm})

    # wall sets along every minimal gallery
    for P1 in chambers:
        for P2 in chambers:
            if ch.distance(P2, P1) > m + 2 and m > 4:
                continue
            for gal in ch.minimal_galleries(P1, P2):
                instances += 1
                walls = ch.gallery_walls(gal)
                if len(set(walls)) != len(walls) or set(walls) != ch.sigma_set(P2, P1):
                    failures.append({"check": "gallery-walls", "P1": P1.perm, "P2": P2.perm})

    # half-space families convex
    for alpha in roots:
        instances += 1
        if not ch.is_convex(ch.h_plus(alpha, m)):
            failures.append({"check": "halfspace-convex", "alpha": alpha})

    # one-step distance recursion, exhaustively
    for P in chambers:
        for P1 in chambers:
            for P2 in ch.neighbours(P1):
                instances += 1
                if ch.distance(P2, P) != ch.distance(P1, P) + ch.keycoxeter_step(P, P1, P2):
                    failures.append({"check": "distance-step", "P": P.perm,
                                     "P1": P1.perm, "P2": P2.perm})

    # representative lemma + the two psi sums on random data
    paras = ch.all_parabolics(m)
    done = 0
    guard = 0
    while done < families and guard < 50 * families:
        guard += 1
        S = set(chambers)
        for _ in range(rng.randint(0, 3)):
            S &= set(ch.h_plus(rng.choice(roots), m))
        S = sorted(S, key=lambda c: c.perm)
        if not S:
            continue
        fam = ch.pairwise_orthogonal_positive(m, rng)
        if not ch.check_orthogonal_positive(fam):
            failures.append({"check": "family-consistency"})
            continue
        H = [rng.randint(-15, 15) for _ in range(m)]
        # wall filter
        ok = True
        for blocks in paras:
            if not any(ch.chamber_in_parabolic(P, blocks) for P in S):
                continue
            YQ = ch.family_projection(fam, blocks, m)
            arg = [Fraction(h) - y for h, y in zip(H, YQ)]
            for w in ch.weight_covectors(blocks, m):
                if sum(a * x for a, x in zip(w, arg)) == 0:
                    ok = False
        if not ok:
            continue
        # representative lemma on a random parabolic above a member
        P = rng.choice(S)
        cands = [b for b in paras if any(ch.chamber_in_parabolic(C, b) for C in S)]
        blocks = rng.choice(cands)
        instances += 1
        try:
            P1 = ch.langlands_type_rep(S, P, blocks)
            if P1 not in S or not ch.chamber_in_parabolic(P1, blocks):
                raise AssertionError("bad representative")
        except AssertionError as e:
            failures.append({"check": "representative", "error": str(e)})
        # psi sums
        Lam = [Fraction(0)] * m
        base = sorted(rng.sample(range(1, 60), m), reverse=True)
        for pos, a in enumerate(P.perm):
            Lam[a - 1] = Fraction(base[pos])
        instances += 1
        v1 = ch.psi_geometric(S, H, fam, m)
        v2 = ch.psi_analytic(S, Lam, H, fam)
        if v1 != v2:
            failures.append({"check": "psi-equality", "S": [c.perm for c in S], "H": H})
        cond = all(sum(w0 * (Fraction(h) - y) for w0, h, y in zip(w, H, fam[Pp])) <= 0
                   for Pp in S for w in ch.chamber_weights(Pp))
        instances += 1
        if (v1 != 0) != cond or (v1 not in (0, 1)):
            failures.append({"check": "psi-trichotomy", "S": [c.perm for c in S], "H": H})
        done += 1
    return _report("chambers", instances, failures, seed, t0, {"m": m})

"""Command-line front end: parse exact elements, run the verification
suites, and emit line-delimited JSON reports plus a one-line summary.

Exit codes: 0 pass, 1 failures found, 2 parse error, 3 domain error,
4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .fields import PLocalContext, InfiniteValuation
from .gltilde import (Triple, d_r, invariants, jordan, stratum)
from .hermitian import (cayley_gl, cayley_inverse, extend_form,
                        match_invariants_group, standard_cayley_params)
from . import serialize as ser
from .orbital import fl_check, toy_transfer_check
from .suites import chambers_suite, cones_suite, descent_suite

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4

BUDGETS = {"fl_n": 2, "fl_valuation": 8, "cones_n": 3, "chambers_m": 5,
           "descent_n": 3}


def _emit(args, records, summary):
    lines = [json.dumps(r, default=str) for r in records]
    text = "\n".join(lines)
    if not args.json_only:
        text += ("\n" if lines else "") + summary
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("JRLAB_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    """Order-independent dispatch of suite instances; results are reassembled
    by index so reports are byte-identical for any worker count."""
    items = list(items)
    w = _threads()
    if w <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    import multiprocessing
    with multiprocessing.Pool(min(w, len(items))) as pool:
        return pool.map(fn, items)


def cmd_invariants(args):
    obj = _load_json(args.input)
    try:
        X = ser.triple_from_json(obj)
    except (KeyError, ValueError, ZeroDivisionError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    a = invariants(X)
    r = stratum(X)
    record = ser.point_to_json(a)
    record["stratum"] = r
    record["d"] = [ser.frac_to_str(d_r(X, k)) for k in range(0, X.n + 1)]
    _emit(args, [record], f"stratum {r} in dimension {X.n}")
    return EXIT_PASS


def cmd_jordan(args):
    obj = _load_json(args.input)
    try:
        X = ser.triple_from_json(obj)
    except (KeyError, ValueError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    Xs, Xn = jordan(X)
    rec = {"semisimple": ser.triple_to_json(Xs), "nilpotent": ser.triple_to_json(Xn)}
    _emit(args, [rec], "decomposed")
    return EXIT_PASS


def cmd_cayley(args):
    obj = _load_json(args.input)
    ctx = PLocalContext(args.p)
    params = standard_cayley_params(ctx, t=1, s=1)
    try:
        Y = [[Fraction(x) for x in row] for row in obj["Y"]]
    except (KeyError, ValueError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        r = cayley_gl(Y, params)
        back = cayley_inverse(r, params)
    except ZeroDivisionError:
        print("kappa pole", file=sys.stderr)
        return EXIT_DOMAIN
    rec = {"image": [[ser.escalar_to_json(x) for x in row] for row in r],
           "round_trip_ok": back == [[ctx.embed(x) for x in row] for row in Y]}
    _emit(args, [rec], "cayley ok" if rec["round_trip_ok"] else "cayley round trip failed")
    return EXIT_PASS if rec["round_trip_ok"] else EXIT_FAIL


def cmd_match(args):
    obj = _load_json(args.input)
    ctx = PLocalContext(args.p)
    try:
        Y1 = [[ser.escalar_from_json(x, ctx) for x in row] for row in obj["Y1"]]
        Y2 = [[ser.escalar_from_json(x, ctx) for x in row] for row in obj["Y2"]]
        form = ser.form_from_json(obj["form"], ctx)
    except (KeyError, ValueError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        ok = match_invariants_group(Y1, Y2, form)
        from .hermitian import group_moments
        n = len(Y1) - 1
        moments = {
            "twisted": [ser.escalar_to_json(m) for m in group_moments(Y1, n, n)],
            "unitary": [ser.escalar_to_json(m) for m in group_moments(Y2, n, n, form)],
        }
    except (ValueError, ZeroDivisionError) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(args, [{"matched": ok, "moments": moments}], f"matched: {ok}")
    return EXIT_PASS


def _suite_exit(report) -> int:
    return EXIT_PASS if not report["failures"] else EXIT_FAIL


def cmd_fl(args):
    if args.n > BUDGETS["fl_n"] or args.budget_valuation > BUDGETS["fl_valuation"]:
        print("budget exceeded", file=sys.stderr)
        return EXIT_BUDGET
    ctx = PLocalContext(args.p)
    rep = fl_check(args.n, ctx, args.budget_valuation, seed=args.seed,
                   samples=args.instances)
    records = rep["results"]
    k, total = len(records) - len(rep["failures"]), len(records)
    _emit(args, records, f"PASS {k}/{total}" if not rep["failures"] else f"FAIL {k}/{total}")
    return _suite_exit(rep)


def cmd_toy(args):
    ctx = PLocalContext(args.p)
    vals = [Fraction(0)]
    for w in range(-args.budget_valuation, args.budget_valuation + 1):
        vals.append(Fraction(args.p) ** w)
        vals.append(2 * Fraction(args.p) ** w)
    rep = toy_transfer_check(ctx, vals)
    k = rep["values"] - len(rep["failures"])
    _emit(args, rep["failures"] or [rep],
          f"PASS {k}/{rep['values']}" if not rep["failures"] else f"FAIL {k}/{rep['values']}")
    return EXIT_PASS if not rep["failures"] else EXIT_FAIL


def cmd_cones(args):
    if args.n > BUDGETS["cones_n"]:
        print("budget exceeded", file=sys.stderr)
        return EXIT_BUDGET
    rep = cones_suite(args.n, points=args.grid, seed=args.seed)
    rep2 = descent_suite(min(args.n, BUDGETS["descent_n"]), seed=args.seed,
                         samples=max(4, args.instances // 8))
    both = [rep, rep2]
    fails = len(rep["failures"]) + len(rep2["failures"])
    inst = rep["instances"] + rep2["instances"]
    _emit(args, both, f"PASS {inst - fails}/{inst}" if not fails else f"FAIL {inst - fails}/{inst}")
    return EXIT_PASS if not fails else EXIT_FAIL


def cmd_chambers(args):
    if args.m > BUDGETS["chambers_m"]:
        print("budget exceeded", file=sys.stderr)
        return EXIT_BUDGET
    rep = chambers_suite(args.m, seed=args.seed, families=args.instances)
    k = rep["instances"] - len(rep["failures"])
    _emit(args, [rep], f"PASS {k}/{rep['instances']}" if not rep["failures"]
          else f"FAIL {k}/{rep['instances']}")
    return _suite_exit(rep)


def _common_options(ap, suppress=False):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    ap.add_argument("--p", type=int, default=d(3), help="odd prime")
    ap.add_argument("--n", type=int, default=d(1), help="base dimension")
    ap.add_argument("--m", type=int, default=d(4), help="chamber rank")
    ap.add_argument("--seed", type=int, default=d(0))
    ap.add_argument("--budget-valuation", type=int, default=d(6),
                    dest="budget_valuation")
    ap.add_argument("--grid", type=int, default=d(10000),
                    help="grid points per identity")
    ap.add_argument("--instances", type=int, default=d(200))
    ap.add_argument("--out", type=str, default=d(None),
                    help="also write records to FILE")
    ap.add_argument("--json-only", action="store_true",
                    default=d(False), dest="json_only")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="jrlab",
        description="exact verification of invariant-theoretic, polyhedral "
                    "and p-adic identities for the GL(n) x GL(n+1) comparison")
    _common_options(ap)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_, fn, with_input=False):
        sc = sub.add_parser(name, help=help_)
        _common_options(sc, suppress=True)
        if with_input:
            sc.add_argument("input")
        sc.set_defaults(fn=fn)
        return sc

    add("invariants", "invariant point of a triple", cmd_invariants, True)
    add("jordan", "semisimple/nilpotent decomposition", cmd_jordan, True)
    add("cayley", "Cayley transform of a rational matrix", cmd_cayley, True)
    add("match", "group-level invariant matching", cmd_match, True)
    add("fl", "unit-function comparison across the two sides", cmd_fl)
    add("toy", "one-dimensional torus matching", cmd_toy)
    add("cones", "cone and descent identity sweeps", cmd_cones)
    add("chambers", "chamber-complex identity sweeps", cmd_chambers)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code = args.fn(args)
    except InfiniteValuation as e:
        print(f"domain error: {e}", file=sys.stderr)
        code = EXIT_DOMAIN
    raise SystemExit(code)


if __name__ == "__main__":
    main()

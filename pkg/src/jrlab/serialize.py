"""JSON wire formats for the exact types.

Scalars travel as "num/den" strings; extension scalars as {"x","y","kind"};
triples as {"A","b","c"}; invariant points as {"a","b"}; hermitian data as
{"gram"}/{"gram","A","b"}; parabolic subspaces as {"flag","i","j"};
chambers as {"perm"}.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import EScalar, PLocalContext
from .gltilde import InvariantPoint, Triple
from .hermitian import HermitianForm, HermitianPair
from .cones import ParabolicSubspace
from .chambers import Chamber


def frac_to_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def frac_from_str(s) -> Fraction:
    return Fraction(s)


def escalar_to_json(z: EScalar) -> dict:
    return {"x": frac_to_str(z.x), "y": frac_to_str(z.y), "kind": z.ctx.kind}


def escalar_from_json(obj, ctx: PLocalContext) -> EScalar:
    if obj.get("kind", ctx.kind) != ctx.kind:
        raise ValueError("extension kind mismatch")
    return EScalar(frac_from_str(obj["x"]), frac_from_str(obj["y"]), ctx)


def triple_to_json(X: Triple) -> dict:
    return {"A": [[frac_to_str(x) for x in row] for row in X.A],
            "b": [frac_to_str(x) for x in X.b],
            "c": [frac_to_str(x) for x in X.c]}


def triple_from_json(obj) -> Triple:
    return Triple([[frac_from_str(x) for x in row] for row in obj["A"]],
                  [frac_from_str(x) for x in obj["b"]],
                  [frac_from_str(x) for x in obj["c"]])


def point_to_json(a: InvariantPoint) -> dict:
    return {"a": [frac_to_str(x) for x in a.a],
            "b": [frac_to_str(x) for x in a.b]}


def point_from_json(obj) -> InvariantPoint:
    return InvariantPoint(tuple(frac_from_str(x) for x in obj["a"]),
                          tuple(frac_from_str(x) for x in obj["b"]))


def form_to_json(form: HermitianForm) -> dict:
    return {"gram": [[escalar_to_json(x) for x in row] for row in form.gram]}


def form_from_json(obj, ctx: PLocalContext) -> HermitianForm:
    return HermitianForm([[escalar_from_json(x, ctx) for x in row]
                          for row in obj["gram"]], ctx)


def pair_to_json(X: HermitianPair) -> dict:
    out = form_to_json(X.form)
    out["A"] = [[escalar_to_json(x) for x in row] for row in X.A]
    out["b"] = [escalar_to_json(x) for x in X.b]
    return out


def pair_from_json(obj, ctx: PLocalContext) -> HermitianPair:
    form = form_from_json(obj, ctx)
    return HermitianPair([[escalar_from_json(x, ctx) for x in row] for row in obj["A"]],
                         [escalar_from_json(x, ctx) for x in obj["b"]], form)


def parabolic_to_json(P: ParabolicSubspace) -> dict:
    ws, i, j = P.vflag_ij()
    return {"flag": [sorted(w) for w in ws[1:]], "i": i, "j": j}


def parabolic_from_json(obj, n: int) -> ParabolicSubspace:
    ws = [frozenset()] + [frozenset(w) for w in obj["flag"]]
    return ParabolicSubspace.from_vflag(ws, obj["i"], obj["j"], n)


def chamber_to_json(C: Chamber) -> dict:
    return {"perm": list(C.perm)}


def chamber_from_json(obj) -> Chamber:
    return Chamber(tuple(obj["perm"]))


def inventory_to_json(classes) -> list:
    """Wire format of an orbit inventory: one record per class with its
    norm-class tags and the explicit representative."""
    out = []
    for c in classes:
        out.append({
            "labels": {str(k): v for k, v in c["labels"].items()},
            "form": form_to_json(c["form"]),
            "pair": pair_to_json(c["pair"]),
        })
    return out

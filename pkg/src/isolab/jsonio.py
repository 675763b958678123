"""JSON encoding and decoding for every value type the CLI exchanges.

Conventions: field scalars are arrays of base-p coordinates, least
significant first; rationals are "num/den" strings (plain integers when the
denominator is one); series accept the monomial shorthand "pi^k" and bare
integers on input.  Exact series carry ``"prec": null``; coefficient lists
are trimmed, indices between the list and the precision bound are zero.
"""

import re
from fractions import Fraction

from .cochar import Cocharacter
from .coeffs import FieldCtx
from .errors import InvalidParams
from .invariants import StrataSignature
from . import laurent as ls
from .laurent import LaurentSeries
from .matl import MatL
from .resgroups import DisplayParams, GOType, ResElement

_MONOMIAL = re.compile(r"^(-?)pi\^(-?\d+)$")


def fraction_to_json(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fraction_from_json(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s)


def cochar_to_json(x: Cocharacter):
    return [fraction_to_json(s) for s in x.slopes]


def cochar_from_json(obj) -> Cocharacter:
    if not isinstance(obj, list):
        raise InvalidParams("slope vector must be a JSON array")
    return Cocharacter(fraction_from_json(s) for s in obj)


def series_to_json(x: LaurentSeries):
    return {
        "val": x.val,
        "prec": x.prec,
        "exact": x.prec is None,
        "coeffs": [list(x.ctx.decode(c)) for c in x.coeffs],
    }


def series_from_json(ctx: FieldCtx, obj) -> LaurentSeries:
    if isinstance(obj, int):
        return ls.from_int(ctx, obj)
    if isinstance(obj, str):
        m = _MONOMIAL.match(obj.strip())
        if not m:
            raise InvalidParams(f"unrecognized series shorthand {obj!r}")
        coeff = -1 if m.group(1) else 1
        return ls.monomial(ctx, int(m.group(2)), coeff)
    if not isinstance(obj, dict):
        raise InvalidParams("series must be an object, integer, or 'pi^k'")
    prec = obj.get("prec")
    if obj.get("exact", prec is None):
        prec = None
    coeffs = [ctx.encode(c) if isinstance(c, list) else int(c) % ctx.p
              for c in obj.get("coeffs", [])]
    return ls.make(ctx, int(obj.get("val", 0)), coeffs, prec)


def matrix_to_json(b: MatL):
    return {"n": b.n, "entries": [[series_to_json(e) for e in row] for row in b.rows]}


def matrix_from_json(ctx: FieldCtx, obj) -> MatL:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InvalidParams("matrix must be an object with an 'entries' grid")
    rows = [[series_from_json(ctx, e) for e in row] for row in obj["entries"]]
    b = MatL(ctx, rows)
    if "n" in obj and obj["n"] != b.n:
        raise InvalidParams("declared size does not match the entry grid")
    return b


def signature_to_json(sig: StrataSignature):
    return [cochar_to_json(mu) for mu in sig.mus]


def signature_from_json(obj) -> StrataSignature:
    return StrataSignature(tuple(cochar_from_json(mu) for mu in obj))


def gotype_to_json(tau: GOType):
    return {"g": tau.g, "members": sorted(tau.members)}


def gotype_from_json(obj) -> GOType:
    if not isinstance(obj, dict) or "g" not in obj:
        raise InvalidParams("type must be an object with 'g' and 'members'")
    return GOType(int(obj["g"]), frozenset(int(i) for i in obj.get("members", [])))


def display_to_json(params: DisplayParams):
    out = {"g": params.g, "i": params.i, "j": params.j, "m": params.m}
    if params.c is not None:
        out["c"] = series_to_json(params.c)
    return out


def display_from_json(ctx: FieldCtx, obj) -> DisplayParams:
    c = obj.get("c")
    return DisplayParams(g=int(obj["g"]), i=int(obj["i"]), j=int(obj["j"]),
                         m=int(obj["m"]),
                         c=None if c is None else series_from_json(ctx, c))


def res_to_json(b: ResElement):
    return {"g": b.g, "parts": [matrix_to_json(p) for p in b.parts]}


def res_from_json(ctx: FieldCtx, obj) -> ResElement:
    if not isinstance(obj, dict) or "parts" not in obj:
        raise InvalidParams("tuple element must be an object with 'parts'")
    parts = [matrix_from_json(ctx, p) for p in obj["parts"]]
    b = ResElement(ctx, parts)
    if "g" in obj and obj["g"] != b.g:
        raise InvalidParams("declared degree does not match the parts list")
    return b

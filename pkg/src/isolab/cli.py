"""Command-line surface: every operation behind JSON in, JSON out.

One JSON document is emitted per invocation.  Exit codes: 0 success, 2 when a
result could not be certified at the working precision (the document carries
a retry hint), 1 for every other error.  All randomness is derived from the
--seed flag, so identical invocations produce byte-identical output.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cochar import Cocharacter, lcm_denominator, polygon
from .coeffs import field_make
from .errors import InsufficientPrecision, InvalidParams, IsolabError
from .invariants import (congruence_stability, convergence_trace, gl2_recover,
                         hodge_point, hodge_sequence, minimal_element,
                         newton_point, decency_check, signature_spread,
                         sln_counterexample, stratum_scan)
from .jsonio import (cochar_from_json, cochar_to_json, display_from_json,
                     fraction_to_json, gotype_from_json, gotype_to_json,
                     matrix_from_json, matrix_to_json, res_from_json,
                     res_to_json, signature_from_json, signature_to_json)
from .resgroups import (ag_display, ag_invariants, ag_lambda, base_change_check,
                        go_beta, go_generic_matrix, go_lambda, go_type)

SCHEMA = "isolab/1"


@dataclass
class RunConfig:
    command: str
    p: int = 2
    m: int = 2
    prec: int = 64
    seed: int = 0
    depth: int = None
    trials: int = None
    kmax: int = None
    e: int = None
    n: int = None
    fmt: str = None
    inp: str = None
    out: str = None


def _env(name: str, fallback):
    v = os.environ.get("ISOLAB_" + name.upper())
    return type(fallback)(v) if v is not None else fallback


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--p", type=int, default=_env("p", 2))
    shared.add_argument("--m", type=int, default=_env("m", 2))
    shared.add_argument("--prec", type=int, default=_env("prec", 64))
    shared.add_argument("--seed", type=int, default=_env("seed", 0))
    shared.add_argument("--depth", type=int, default=None)
    shared.add_argument("--trials", type=int, default=None)
    shared.add_argument("--kmax", type=int, default=None)
    shared.add_argument("--e", type=int, default=None)
    shared.add_argument("--n", type=int, default=None)
    shared.add_argument("--format", dest="fmt", choices=["ascii", "svg"], default=None)
    shared.add_argument("--in", dest="inp", default=None,
                        help="input path, '-' for stdin, or inline JSON")
    shared.add_argument("--out", dest="out", default=None)

    parser = argparse.ArgumentParser(prog="isolab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ["hodge", "newton", "signature", "scan", "minimal", "decency",
                 "gl2-recover", "counterexample", "congruence", "converge",
                 "basechange", "go-type", "go-lambda", "go-generic",
                 "ag-display", "ag-invariants", "polygon"]:
        sub.add_parser(name, parents=[shared])
    return parser


def _load_payload(cfg: RunConfig):
    if cfg.inp is None:
        raise InvalidParams(f"command {cfg.command!r} requires --in")
    text = cfg.inp
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("{", "[")):
        with open(text, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _dec(fr: Fraction) -> str:
    """Fixed three-decimal rendering through integer arithmetic only."""
    milli = round(Fraction(fr) * 1000)
    sign = "-" if milli < 0 else ""
    a = abs(milli)
    return f"{sign}{a // 1000}.{a % 1000:03d}"


def render_polygon(x: Cocharacter, fmt: str) -> str:
    poly = polygon(x)
    verts = poly.vertices
    labels = " ".join(f"({vx},{fraction_to_json(vy)})" for vx, vy in verts)
    if fmt == "svg":
        return _render_svg(verts, labels)
    return _render_ascii(x, poly, labels)


def _render_ascii(x, poly, labels):
    n = x.n
    ys = [poly.value_at(Fraction(c, 4)) for c in range(4 * n + 1)]
    top = math.ceil(2 * max(ys))
    bot = math.floor(2 * min(ys))
    vert_cols = {4 * vx: vy for vx, vy in poly.vertices}
    lines = [f"vertices: {labels}"]
    for row in range(top, bot - 1, -1):
        cells = []
        for c in range(4 * n + 1):
            y2 = 2 * ys[c]
            mark = " "
            if round(y2) == row:
                mark = "*" if c in vert_cols else "."
            cells.append(mark)
        label = f"{Fraction(row, 2)!s:>6} |"
        lines.append(label + "".join(cells))
    lines.append(" " * 7 + "+" + "-" * (4 * n))
    lines.append(" " * 8 + "".join(f"{i:<4d}" for i in range(n)) + f"{n}")
    return "\n".join(lines)


def _render_svg(verts, labels):
    pad = Fraction(20)
    scale = Fraction(40)
    y_hi = max(v[1] for v in verts)
    y_lo = min(v[1] for v in verts)
    xmax = verts[-1][0]
    width = _dec(2 * pad + scale * xmax)
    height = _dec(2 * pad + scale * (y_hi - y_lo) + 20)

    def px(vx):
        return pad + scale * vx

    def py(vy):
        return pad + scale * (y_hi - vy)

    pts = " ".join(f"{_dec(px(vx))},{_dec(py(vy))}" for vx, vy in verts)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
             f'<title>{labels}</title>',
             f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>']
    for vx, vy in verts:
        parts.append(f'<circle cx="{_dec(px(vx))}" cy="{_dec(py(vy))}" r="3" fill="black"/>')
        parts.append(f'<text x="{_dec(px(vx))}" y="{_dec(py(vy) - 6)}" '
                     f'font-size="10">({vx},{fraction_to_json(vy)})</text>')
    parts.append("</svg>")
    return "".join(parts)


def _jsonify_scan(report):
    return {
        "attempts": report["attempts"],
        "accepted": report["accepted"],
        "tally": [{"newton": cochar_to_json(row["newton"]),
                   "count": row["count"],
                   "witness": matrix_to_json(row["witness"])}
                  for row in report["tally"]],
    }


def _jsonify_trace(trace):
    return {
        "newton": cochar_to_json(trace["newton"]),
        "fitted_c": fraction_to_json(trace["fitted_c"]),
        "rows": [{"k": r["k"],
                  "normalized": cochar_to_json(r["normalized"]),
                  "distance": fraction_to_json(r["distance"]),
                  "raw_distance": fraction_to_json(r["raw_distance"])}
                 for r in trace["rows"]],
    }


def cmd_dispatch(cfg: RunConfig):
    """Run one subcommand; returns (exit status, JSON document)."""
    ctx = field_make(cfg.p, cfg.m, cfg.prec)
    doc = {"schema": SCHEMA, "command": cfg.command,
           "config": {"p": cfg.p, "m": cfg.m, "prec": cfg.prec, "seed": cfg.seed}}
    cmd = cfg.command

    if cmd == "hodge":
        b = matrix_from_json(ctx, _load_payload(cfg))
        doc["hodge"] = cochar_to_json(hodge_point(b))
    elif cmd == "newton":
        b = matrix_from_json(ctx, _load_payload(cfg))
        doc["newton"] = cochar_to_json(newton_point(b))
    elif cmd == "signature":
        b = matrix_from_json(ctx, _load_payload(cfg))
        depth = cfg.depth if cfg.depth is not None else 2
        doc["signature"] = signature_to_json(hodge_sequence(b, depth))
    elif cmd == "scan":
        payload = _load_payload(cfg)
        sig = signature_from_json(payload["mu_bar"])
        trials = cfg.trials if cfg.trials is not None else 100
        n = cfg.n if cfg.n is not None else payload.get("n", sig[0].n)
        doc.update(_jsonify_scan(stratum_scan(ctx, n, sig, trials, cfg.seed)))
    elif cmd == "minimal":
        nu = cochar_from_json(_load_payload(cfg))
        doc["matrix"] = matrix_to_json(minimal_element(ctx, nu))
    elif cmd == "decency":
        b = matrix_from_json(ctx, _load_payload(cfg))
        s = cfg.depth if cfg.depth is not None else lcm_denominator(newton_point(b))
        doc["s"] = s
        doc["decent"] = decency_check(b, s)
    elif cmd == "gl2-recover":
        payload = _load_payload(cfg)
        nu = gl2_recover(cochar_from_json(payload["mu1"]),
                         cochar_from_json(payload["mu2"]), ctx=ctx, seed=cfg.seed)
        doc["newton"] = cochar_to_json(nu)
    elif cmd == "counterexample":
        if cfg.n is None:
            raise InvalidParams("counterexample requires --n")
        b1, b2 = sln_counterexample(ctx, cfg.n)
        depth = cfg.depth if cfg.depth is not None else cfg.n
        doc["b1"] = matrix_to_json(b1)
        doc["b2"] = matrix_to_json(b2)
        doc["signature_b1"] = signature_to_json(hodge_sequence(b1, depth))
        doc["signature_b2"] = signature_to_json(hodge_sequence(b2, depth))
        doc["newton_b1"] = cochar_to_json(newton_point(b1))
        doc["newton_b2"] = cochar_to_json(newton_point(b2))
    elif cmd == "congruence":
        b = matrix_from_json(ctx, _load_payload(cfg))
        depth = cfg.depth if cfg.depth is not None else 4
        trials = cfg.trials if cfg.trials is not None else 100
        spread = signature_spread(hodge_sequence(b, depth))
        level = int(spread) + 1
        doc.update(congruence_stability(b, level, trials, cfg.seed, depth))
    elif cmd == "converge":
        b = matrix_from_json(ctx, _load_payload(cfg))
        kmax = cfg.kmax if cfg.kmax is not None else 12
        doc.update(_jsonify_trace(convergence_trace(b, kmax)))
    elif cmd == "basechange":
        b = matrix_from_json(ctx, _load_payload(cfg))
        e = cfg.e if cfg.e is not None else 2
        rep = base_change_check(b, e)
        doc.update({"e": e,
                    "hodge": cochar_to_json(rep["hodge"]),
                    "newton": cochar_to_json(rep["newton"]),
                    "hodge_rebased": cochar_to_json(rep["hodge_rebased"]),
                    "newton_rebased": cochar_to_json(rep["newton_rebased"]),
                    "exact_scaling": rep["exact_scaling"]})
    elif cmd == "go-type":
        b = res_from_json(ctx, _load_payload(cfg))
        doc.update(gotype_to_json(go_type(b)))
    elif cmd == "go-lambda":
        tau = gotype_from_json(_load_payload(cfg))
        doc["lambda"] = fraction_to_json(go_lambda(tau))
        doc["beta"] = cochar_to_json(go_beta(tau))
    elif cmd == "go-generic":
        tau = gotype_from_json(_load_payload(cfg))
        doc.update(res_to_json(go_generic_matrix(ctx, tau, cfg.seed)))
    elif cmd == "ag-display":
        params = display_from_json(ctx, _load_payload(cfg))
        doc["matrix"] = matrix_to_json(ag_display(ctx, params))
    elif cmd == "ag-invariants":
        payload = _load_payload(cfg)
        if "matrix" in payload:
            F = matrix_from_json(ctx, payload["matrix"])
            g = int(payload["g"])
        else:
            params = display_from_json(ctx, payload)
            F = ag_display(ctx, params)
            g = params.g
        j, n = ag_invariants(F)
        doc.update({"j": j, "n": n, "lambda": fraction_to_json(ag_lambda(n, g))})
    elif cmd == "polygon":
        x = cochar_from_json(_load_payload(cfg))
        fmt = cfg.fmt if cfg.fmt is not None else "ascii"
        doc["format"] = fmt
        doc["rendering"] = render_polygon(x, fmt)
    else:
        raise InvalidParams(f"unknown command {cmd!r}")
    return 0, doc


def _emit(doc, out_path):
    text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, p=args.p, m=args.m, prec=args.prec,
                    seed=args.seed, depth=args.depth, trials=args.trials,
                    kmax=args.kmax, e=args.e, n=args.n, fmt=args.fmt,
                    inp=args.inp, out=args.out)
    base = {"schema": SCHEMA, "command": cfg.command}
    try:
        status, doc = cmd_dispatch(cfg)
    except json.JSONDecodeError as err:
        doc = dict(base, error="MalformedJSON",
                   message=f"malformed JSON at line {err.lineno} column {err.colno} "
                           f"(char {err.pos}): {err.msg}")
        status = 1
    except InsufficientPrecision as err:
        doc = dict(base, error="InsufficientPrecision", message=str(err),
                   retry_prec=err.hint if err.hint else 2 * cfg.prec)
        status = 2
    except IsolabError as err:
        doc = dict(base, error=type(err).__name__, message=str(err))
        status = 1
    _emit(doc, cfg.out)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Seeded random generation of field scalars, series, and matrices.

All randomness flows from one integer seed through a counter-based split:
``rng_for(seed, tag, index)`` hashes (seed, purpose tag, trial index) into an
independent stream, so parallel or reordered trials reproduce bit-identically.
"""

import hashlib
import random

from .coeffs import FieldCtx
from . import laurent as ls
from .errors import SamplingExhausted
from .matl import MatL, det


def rng_for(seed: int, tag: str, index: int = 0) -> random.Random:
    digest = hashlib.sha256(f"{seed}/{tag}/{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def rand_scalar(ctx: FieldCtx, rng, nonzero=False) -> int:
    if nonzero:
        return rng.randrange(1, ctx.q)
    return rng.randrange(ctx.q)


def rand_series(ctx: FieldCtx, rng, vmin: int, vmax: int, max_extra=2, prec=None):
    """Random exact Laurent polynomial with valuation in [vmin, vmax]."""
    v = rng.randint(vmin, vmax)
    coeffs = [rand_scalar(ctx, rng, nonzero=True)]
    for _ in range(rng.randint(0, max_extra)):
        coeffs.append(rand_scalar(ctx, rng))
    return ls.make(ctx, v, coeffs, prec)


def rand_matrix(ctx: FieldCtx, rng, n: int, vmin: int, vmax: int,
                max_extra=2, attempts=200) -> MatL:
    """Random matrix with nonzero entries of valuation in [vmin, vmax],
    resampled until the determinant is certified nonzero."""
    for _ in range(attempts):
        b = MatL(ctx, [[rand_series(ctx, rng, vmin, vmax, max_extra)
                        for _ in range(n)] for _ in range(n)])
        if det(b).coeffs:
            return b
    raise SamplingExhausted("could not sample an invertible matrix")


def rand_unit_matrix(ctx: FieldCtx, rng, n: int, max_extra=2, attempts=200) -> MatL:
    """Random element of the unit group of the integral matrices: entries of
    nonnegative valuation, determinant a unit."""
    for _ in range(attempts):
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                coeffs = [rand_scalar(ctx, rng) for _ in range(1 + rng.randint(0, max_extra))]
                row.append(ls.make(ctx, 0, coeffs))
            rows.append(row)
        b = MatL(ctx, rows)
        d = det(b)
        if d.coeffs and d.val == 0:
            return b
    raise SamplingExhausted("could not sample a unit matrix")


def rand_congruence_matrix(ctx: FieldCtx, rng, n: int, level: int, max_extra=2) -> MatL:
    """Identity plus pi^level times a random integral matrix; always a unit."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            coeffs = [rand_scalar(ctx, rng) for _ in range(1 + rng.randint(0, max_extra))]
            e = ls.make(ctx, level, coeffs)
            if i == j:
                e = ls.ls_add(ls.one(ctx), e)
            row.append(e)
        rows.append(row)
    return MatL(ctx, rows)

"""Slope invariants of twisted matrices: Hodge points, Newton points, refined
signatures, minimal elements, decency, the rank-two recovery rule, the
special-linear counterexample family, and the randomized harnesses built on
them.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cochar import (Cocharacter, dominates, is_newton_point, metric, oplus,
                     oplus_w0, superbasic_parts)
from .coeffs import FieldCtx
from .errors import (InsufficientPrecision, InvalidParams, NotInvertible,
                     SamplingExhausted, SumMismatch, Unrealizable)
from . import laurent as ls
from .matl import (MatL, char_poly, mat_mul, mat_sigma, norm_map,
                   smith_slopes, twisted_power)
from .sampling import rand_congruence_matrix, rand_unit_matrix, rng_for


def hodge_point(b: MatL) -> Cocharacter:
    """Valuations of the elementary divisors, dominant order."""
    return smith_slopes(b)


def newton_point(b: MatL) -> Cocharacter:
    """Eigenvalue valuations of the m-fold norm, divided by m.

    The norm is a plain linear map (the coefficient Frobenius has order m),
    so its eigenvalue valuations are read off the lower hull of the
    characteristic-polynomial coefficient valuations.
    """
    m = b.ctx.m
    cp = char_poly(norm_map(b))
    points = []
    bounds = []
    for i, c in enumerate(cp):
        if c.coeffs:
            points.append((i, Fraction(c.val)))
        elif not c.exact:
            bounds.append((i, c.prec))
    if not points or points[0][0] != 0:
        c0 = cp[0]
        if c0.is_exact_zero():
            raise NotInvertible("constant coefficient of the norm is zero")
        raise InsufficientPrecision(
            "determinant valuation of the norm not certified",
            hint=2 * b.ctx.prec)
    hull = _lower_hull(points)
    for i, p in bounds:
        if Fraction(p) < _hull_value(hull, i):
            raise InsufficientPrecision(
                f"coefficient {i} known only above its certified hull",
                hint=2 * max(p, 8))
    slopes = []
    for (x1, v1), (x2, v2) in zip(hull, hull[1:]):
        lam = (v1 - v2) / (x2 - x1)
        slopes.extend([lam / m] * (x2 - x1))
    return Cocharacter(slopes)


def _lower_hull(points):
    """Lower convex hull of (x, value) points with increasing x."""
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _hull_value(hull, x):
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            return y1 + (y2 - y1) * Fraction(x - x1, x2 - x1)
    return hull[-1][1] if x >= hull[-1][0] else hull[0][1]


@dataclass(frozen=True)
class StrataSignature:
    """Sequence of Hodge points of the twisted powers of one element."""

    mus: tuple

    def __post_init__(self):
        mus = tuple(self.mus)
        object.__setattr__(self, "mus", mus)
        if not mus:
            raise InvalidParams("empty signature")
        n = mus[0].n
        t1 = mus[0].total()
        for i, mu in enumerate(mus, start=1):
            if mu.n != n:
                raise InvalidParams("signature entries must share one length")
            if mu.total() != i * t1:
                raise InvalidParams(
                    f"entry {i} has total {mu.total()}, expected {i * t1}")
            if i >= 2:
                prev = mus[i - 2]
                if not dominates(oplus_w0(prev, mus[0]), mu) or \
                        not dominates(mu, oplus(prev, mus[0])):
                    raise InvalidParams(f"entry {i} violates the product sandwich")

    @property
    def depth(self) -> int:
        return len(self.mus)

    def __getitem__(self, i):
        return self.mus[i]


def hodge_sequence(b: MatL, depth: int, window: int = None) -> StrataSignature:
    """(Hodge point of the k-th twisted power) for k = 1..depth.

    ``window`` truncates each running product to that many significant
    digits per entry; slopes stay certified (a too-small window raises
    InsufficientPrecision rather than degrading silently).
    """
    twists = [b]
    for _ in range(min(depth, b.ctx.m) - 1):
        twists.append(mat_sigma(twists[-1]))
    cur = b
    mus = [smith_slopes(cur)]
    for k in range(1, depth):
        cur = mat_mul(cur, twists[k % b.ctx.m])
        if window is not None:
            cur = _truncate_relative(cur, window)
        mus.append(smith_slopes(cur))
    return StrataSignature(tuple(mus))


def minimal_element(ctx: FieldCtx, nu: Cocharacter) -> MatL:
    """Block matrix of superbasic blocks realizing the Newton point ``nu``.

    A block of slope h/d (lowest terms) sends basis vector e_k to e_{k+h}
    where e_{k+d} = pi * e_k; entries are exact monomials with prime-field
    coefficients, hence fixed by the coefficient Frobenius.
    """
    parts = superbasic_parts(nu)
    n = nu.n
    rows = [[ls.zero(ctx) for _ in range(n)] for _ in range(n)]
    offset = 0
    for slope, d in parts:
        h = slope.numerator * (d // slope.denominator)
        for k in range(d):
            r = (k + h) % d
            power = (k + h - r) // d
            rows[offset + r][offset + k] = ls.monomial(ctx, power)
        offset += d
    return MatL(ctx, rows)


def decency_check(b: MatL, s: int) -> bool:
    """Whether the s-th twisted power is diagonal with monomial entries whose
    valuations are s times the Newton slopes (in some order)."""
    power = twisted_power(b, s)
    nu = newton_point(b)
    n = b.n
    targets = sorted(s * v for v in nu.slopes)
    diag_vals = []
    soft = []
    for i in range(n):
        for j in range(n):
            e = power.rows[i][j]
            if i != j:
                if e.coeffs:
                    return False
                if not e.exact:
                    soft.append(e.prec)
                continue
            if not e.coeffs:
                return False
            if len(e.coeffs) > 1:
                return False  # a second nonzero coefficient is certified
            if not e.exact:
                soft.append(e.prec)
            diag_vals.append(Fraction(e.val))
    if sorted(diag_vals) != targets:
        return False
    if soft:
        raise InsufficientPrecision(
            "twisted power is diagonal-monomial only up to precision",
            hint=2 * max(soft))
    return True


def gl2_recover(mu1: Cocharacter, mu2: Cocharacter, ctx: FieldCtx = None,
                seed: int = 0, budget: int = 3000) -> Cocharacter:
    """The Newton point shared by all rank-2 elements whose first two twisted
    powers have Hodge points (mu1, mu2).

    Rule: subtract dominant representatives componentwise; if the difference
    is dominant it is the Newton point, otherwise the Newton point is central.
    Signatures on which the rule is inconsistent with the two lower bounds
    trigger a randomized witness search before giving up as Unrealizable.
    """
    if mu1.n != 2 or mu2.n != 2:
        raise InvalidParams("recovery rule is specific to length-2 vectors")
    if mu2.total() != 2 * mu1.total():
        raise SumMismatch("second total must be twice the first")
    diff = [c - a for c, a in zip(mu2.slopes, mu1.slopes)]
    if diff[0] >= diff[1]:
        candidate = Cocharacter(diff)
    else:
        t = mu1.total() / 2
        candidate = Cocharacter([t, t])
    if is_newton_point(candidate) and dominates(candidate, mu1) \
            and dominates(candidate.scaled(2), mu2):
        return candidate
    witness = _search_signature_witness(mu1, mu2, ctx, seed, budget)
    if witness is None:
        raise Unrealizable(
            f"no rank-2 element with signature ({mu1}, {mu2}) found "
            f"within {budget} samples")
    return newton_point(witness)


def _search_signature_witness(mu1, mu2, ctx, seed, budget):
    if ctx is None or any(s.denominator != 1 for s in mu1.slopes):
        return None
    diag = MatL(ctx, [[ls.monomial(ctx, int(mu1.slopes[0])), ls.zero(ctx)],
                      [ls.zero(ctx), ls.monomial(ctx, int(mu1.slopes[1]))]])
    for t in range(budget):
        rng = rng_for(seed, "gl2-witness", t)
        b = mat_mul(mat_mul(rand_unit_matrix(ctx, rng, 2), diag),
                    rand_unit_matrix(ctx, rng, 2))
        sig = hodge_sequence(b, 2)
        if sig[0] == mu1 and sig[1] == mu2:
            return b
    return None


def sln_counterexample(ctx: FieldCtx, n: int):
    """The determinant-one pair whose signatures agree to depth n-1 and split
    at depth n, with distinct Newton points."""
    if n < 2:
        raise InvalidParams("need dimension at least 2")
    sign = 1 if (n - 1) % 2 == 0 else -1
    b1 = [[ls.zero(ctx) for _ in range(n)] for _ in range(n)]
    b1[0][n - 1] = ls.monomial(ctx, n - 1, sign)
    for i in range(1, n):
        b1[i][i - 1] = ls.monomial(ctx, -1)
    b2 = [[ls.zero(ctx) for _ in range(n)] for _ in range(n)]
    b2[0][n - 2] = ls.monomial(ctx, n - 1, -sign)
    for i in range(1, n - 1):
        b2[i][i - 1] = ls.monomial(ctx, -1)
    b2[n - 1][n - 1] = ls.monomial(ctx, -1)
    return MatL(ctx, b1), MatL(ctx, b2)


def signature_spread(sig: StrataSignature) -> Fraction:
    hi = max(mu.slopes[0] for mu in sig.mus)
    lo = min(mu.slopes[-1] for mu in sig.mus)
    return hi - lo


def congruence_stability(b: MatL, level: int, trials: int, seed: int,
                         depth: int = 4, window: int = None) -> dict:
    """Right-multiply by random units congruent to 1 mod pi^level and report
    whether the depth-``depth`` signature survives every perturbation."""
    base = hodge_sequence(b, depth, window=window)
    per_depth = [0] * depth
    violations = 0
    for t in range(trials):
        rng = rng_for(seed, "congruence", t)
        if level >= 1:
            g = rand_congruence_matrix(b.ctx, rng, b.n, level)
        else:
            g = rand_unit_matrix(b.ctx, rng, b.n)
        sig = hodge_sequence(mat_mul(b, g), depth, window=window)
        bad = [k for k in range(depth) if sig[k] != base[k]]
        if bad:
            violations += 1
            for k in bad:
                per_depth[k] += 1
    return {
        "level": level,
        "depth": depth,
        "trials": trials,
        "violations": violations,
        "per_depth_violations": per_depth,
        "preserved": violations == 0,
    }


def convergence_trace(b: MatL, kmax: int, window: int = None,
                      stop_below=None) -> dict:
    """Normalized Hodge points of the twisted powers and their metric
    distance to the Newton point.

    Each row carries k, the slopes of mu_k/k, the normalized distance
    d(k) = |nu, mu_k/k| and the raw distance k*d(k); the fitted constant is
    max_k k*d(k), so d(k) <= c/k holds over the whole trace.  Running powers
    are truncated to ``window`` significant digits per entry (default: the
    context working precision) to keep deep products bounded.  With
    ``stop_below`` set, the trace ends at the first k whose normalized
    distance falls strictly below it.
    """
    ctx = b.ctx
    if window is None:
        window = ctx.prec
    nu = newton_point(b)
    twists = [b]
    for _ in range(min(kmax, ctx.m) - 1):
        twists.append(mat_sigma(twists[-1]))
    rows = []
    cur = b
    fitted = Fraction(0)
    for k in range(1, kmax + 1):
        if k > 1:
            cur = mat_mul(cur, twists[(k - 1) % ctx.m])
            cur = _truncate_relative(cur, window)
        mu_k = smith_slopes(cur)
        normalized = mu_k.scaled(Fraction(1, k))
        dist = metric(nu, normalized)
        assert dominates(nu, normalized), "lower bound on Hodge points violated"
        fitted = max(fitted, k * dist)
        rows.append({"k": k, "normalized": normalized, "distance": dist,
                     "raw_distance": k * dist})
        if stop_below is not None and dist < stop_below:
            break
    return {"newton": nu, "rows": rows, "fitted_c": fitted}


def _truncate_relative(b: MatL, window: int) -> MatL:
    rows = []
    for r in b.rows:
        row = []
        for e in r:
            if e.coeffs:
                row.append(ls.truncate(e, e.val + window))
            else:
                row.append(e)
        rows.append(row)
    return MatL(b.ctx, rows)


def stratum_scan(ctx: FieldCtx, n: int, mu_bar: StrataSignature, trials: int,
                 seed: int, budget_factor: int = 200) -> dict:
    """Sample the stratum with signature ``mu_bar`` by decomposed generation
    (unit times diagonal times unit realizes the first entry by construction),
    rejecting on the deeper entries, and tally the Newton points found."""
    mu1 = mu_bar[0]
    if mu1.n != n:
        raise InvalidParams("signature length does not match n")
    if any(s.denominator != 1 for s in mu1.slopes):
        raise InvalidParams("first signature entry must be integral")
    depth = mu_bar.depth
    diag = MatL(ctx, [[ls.monomial(ctx, int(mu1.slopes[i])) if i == j else ls.zero(ctx)
                       for j in range(n)] for i in range(n)])
    tally = {}
    witnesses = {}
    accepted = 0
    attempts = 0
    budget = budget_factor * trials
    while accepted < trials and attempts < budget:
        rng = rng_for(seed, "scan", attempts)
        attempts += 1
        b = mat_mul(mat_mul(rand_unit_matrix(ctx, rng, n), diag),
                    rand_unit_matrix(ctx, rng, n))
        sig = hodge_sequence(b, depth)
        if any(sig[k] != mu_bar[k] for k in range(depth)):
            continue
        accepted += 1
        nu = newton_point(b)
        tally[nu] = tally.get(nu, 0) + 1
        witnesses.setdefault(nu, b)
    if accepted == 0:
        raise SamplingExhausted(
            f"no element with the requested signature in {attempts} attempts")
    groups = sorted(tally.items(), key=lambda kv: kv[0].slopes, reverse=True)
    return {
        "attempts": attempts,
        "accepted": accepted,
        "tally": [{"newton": nu, "count": c, "witness": witnesses[nu]}
                  for nu, c in groups],
    }

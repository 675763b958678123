"""Square matrices over the Laurent-series field: twisted products, Smith
elementary divisors, characteristic polynomials, norm maps.

Smith elimination never inverts a series: a pivot p = pi^v * u is used by
rescaling the target row by the unit u and subtracting the pi^-v multiple of
the pivot row, which multiplies the matrix by unimodular factors only and
keeps exact inputs exact.
"""

from .coeffs import FieldCtx
from .cochar import Cocharacter
from .errors import InsufficientPrecision, NotInvertible
from . import laurent as ls
from .laurent import LaurentSeries


class MatL:
    __slots__ = ("ctx", "n", "rows")

    def __init__(self, ctx: FieldCtx, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.ctx = ctx
        self.n = n
        self.rows = rows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, MatL) and self.ctx == other.ctx
                and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join("[" + ", ".join(repr(e) for e in r) + "]" for r in self.rows)
        return f"MatL({body})"


def identity(ctx: FieldCtx, n: int) -> MatL:
    return MatL(ctx, [[ls.one(ctx) if i == j else ls.zero(ctx) for j in range(n)]
                      for i in range(n)])


def from_entries(ctx: FieldCtx, entries) -> MatL:
    return MatL(ctx, entries)


def mat_mul(a: MatL, b: MatL) -> MatL:
    n = a.n
    rows = []
    for i in range(n):
        ra = a.rows[i]
        row = []
        for j in range(n):
            acc = ls.zero(a.ctx)
            for k in range(n):
                x = ra[k]
                y = b.rows[k][j]
                if x.coeffs or not x.exact or y.coeffs or not y.exact:
                    acc = ls.ls_add(acc, ls.ls_mul(x, y))
            row.append(acc)
        rows.append(row)
    return MatL(a.ctx, rows)


def mat_sigma(b: MatL) -> MatL:
    return MatL(b.ctx, [[ls.ls_sigma(e) for e in r] for r in b.rows])


def mat_scale(b: MatL, s: LaurentSeries) -> MatL:
    return MatL(b.ctx, [[ls.ls_mul(s, e) for e in r] for r in b.rows])


def mat_add(a: MatL, b: MatL) -> MatL:
    return MatL(a.ctx, [[ls.ls_add(x, y) for x, y in zip(ra, rb)]
                        for ra, rb in zip(a.rows, b.rows)])


def mat_truncate(b: MatL, prec: int) -> MatL:
    return MatL(b.ctx, [[ls.truncate(e, prec) for e in r] for r in b.rows])


def mat_rebase(b: MatL, e: int) -> MatL:
    return MatL(b.ctx, [[ls.ls_rebase(x, e) for x in r] for r in b.rows])


def det(b: MatL) -> LaurentSeries:
    """Determinant by bitmask dynamic programming over column subsets;
    division-free, exact on exact input."""
    n = b.n
    dp = {0: ls.one(b.ctx)}
    for i in range(n):
        row = b.rows[i]
        ndp = {}
        for mask, v in dp.items():
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    continue
                e = row[c]
                if e.is_exact_zero():
                    continue
                # parity of used columns greater than c decides the sign
                used_gt = bin(mask >> (c + 1)).count("1")
                term = ls.ls_mul(v, e)
                if used_gt & 1:
                    term = ls.ls_neg(term)
                nm = mask | bit
                prev = ndp.get(nm)
                ndp[nm] = term if prev is None else ls.ls_add(prev, term)
        dp = ndp
        if not dp:
            return ls.zero(b.ctx)
    return dp.get((1 << n) - 1, ls.zero(b.ctx))


def twisted_power(b: MatL, k: int) -> MatL:
    """b . sigma(b) . sigma^2(b) ... sigma^(k-1)(b); k = 0 gives the identity."""
    if k < 0:
        raise ValueError("twisted powers are defined for k >= 0")
    if k == 0:
        return identity(b.ctx, b.n)
    twists = [b]
    for _ in range(min(k, b.ctx.m) - 1):
        twists.append(mat_sigma(twists[-1]))
    out = b
    for j in range(1, k):
        out = mat_mul(out, twists[j % b.ctx.m])
    return out


def norm_map(b: MatL) -> MatL:
    """m-fold twisted power; acts as a plain linear map since sigma^m = id."""
    return twisted_power(b, b.ctx.m)


def _entry_val_bounds(rows, k, n):
    """Certified minimum valuation over the trailing submatrix, or raise."""
    best = None
    best_pos = None
    soft = []  # precision bounds of zero-up-to-precision entries
    for i in range(k, n):
        for j in range(k, n):
            e = rows[i][j]
            if e.coeffs:
                # scan order makes the first minimum the (row, column)
                # lexicographic tie-break winner
                if best is None or e.val < best:
                    best, best_pos = e.val, (i, j)
            elif not e.exact:
                soft.append(e.prec)
    if best is None:
        if soft:
            raise InsufficientPrecision(
                "no pivot with certifiable valuation in Smith reduction",
                hint=2 * max(soft))
        raise NotInvertible("matrix has certified zero determinant")
    for p in soft:
        if p < best:
            raise InsufficientPrecision(
                f"entry known only up to pi^{p} could undercut pivot valuation {best}",
                hint=2 * max(p, 8))
    return best, best_pos


def smith_slopes(b: MatL) -> Cocharacter:
    """Valuations of the elementary divisors, as a dominant slope vector.

    Pivots on a minimal-valuation entry (ties broken by (row, column)), clears
    its row and column by unit-rescaled subtractions, and recurses.  The slope
    sum is cross-checked against the determinant valuation whenever the latter
    is certifiable.
    """
    n = b.n
    rows = [list(r) for r in b.rows]
    slopes = []
    for k in range(n):
        v, (pi, pj) = _entry_val_bounds(rows, k, n)
        if pi != k:
            rows[pi], rows[k] = rows[k], rows[pi]
        if pj != k:
            for r in rows:
                r[pj], r[k] = r[k], r[pj]
        pivot = rows[k][k]
        unit = ls.shift(pivot, -v)
        for i in range(k + 1, n):
            e = rows[i][k]
            if e.coeffs or not e.exact:
                f = ls.shift(e, -v)
                for j in range(k + 1, n):
                    rows[i][j] = ls.ls_add(ls.ls_mul(unit, rows[i][j]),
                                           ls.ls_neg(ls.ls_mul(f, rows[k][j])))
            rows[i][k] = ls.zero(b.ctx)
        # column clearing only rescales the submatrix by the unit (the pivot
        # column below row k is already zero), so apply the scaling directly
        for j in range(k + 1, n):
            e = rows[k][j]
            if e.coeffs or not e.exact:
                for i in range(k + 1, n):
                    rows[i][j] = ls.ls_mul(unit, rows[i][j])
            rows[k][j] = ls.zero(b.ctx)
        slopes.append(v)
    result = Cocharacter(slopes)
    d = det(b)
    if d.coeffs:
        if sum(slopes) != d.val:
            raise AssertionError(
                f"slope sum {sum(slopes)} != det valuation {d.val}")
    elif d.exact:
        raise NotInvertible("determinant is exactly zero")
    return result


def char_poly(b: MatL):
    """Coefficients [a_0, ..., a_n] of det(X*I - b), constant term first.

    Samuelson-Berkowitz iteration: division-free, so truncated coefficients
    never contaminate low-order terms.
    """
    n = b.n
    ctx = b.ctx
    poly = [ls.one(ctx), ls.ls_neg(b.rows[0][0])]  # highest degree first
    for k in range(1, n):
        r = [b.rows[k][j] for j in range(k)]
        c = [b.rows[i][k] for i in range(k)]
        v = [ls.one(ctx), ls.ls_neg(b.rows[k][k])]
        w = c
        for t in range(2, k + 2):
            if t > 2:
                w = [_dot(b.rows[i][:k], w, ctx) for i in range(k)]
            v.append(ls.ls_neg(_dot(r, w, ctx)))
        newpoly = []
        for i in range(k + 2):
            acc = ls.zero(ctx)
            for j, pj in enumerate(poly):
                if 0 <= i - j < len(v):
                    acc = ls.ls_add(acc, ls.ls_mul(v[i - j], pj))
            newpoly.append(acc)
        poly = newpoly
    poly.reverse()
    return poly


def _dot(xs, ys, ctx):
    acc = ls.zero(ctx)
    for x, y in zip(xs, ys):
        acc = ls.ls_add(acc, ls.ls_mul(x, y))
    return acc


def mat_inv(b: MatL) -> MatL:
    """Inverse via the adjugate and one series inversion of the determinant."""
    d = det(b)
    if d.is_exact_zero():
        raise NotInvertible("determinant is exactly zero")
    if not d.coeffs:
        raise InsufficientPrecision(
            f"determinant is zero up to pi^{d.prec}; cannot certify invertibility",
            hint=2 * max(d.prec, 8))
    dinv = ls.ls_inv(d)
    n = b.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor_rows = [[b.rows[r][c] for c in range(n) if c != i]
                          for r in range(n) if r != j]
            m = det(MatL(b.ctx, minor_rows)) if n > 1 else ls.one(b.ctx)
            if (i + j) & 1:
                m = ls.ls_neg(m)
            row.append(ls.ls_mul(m, dinv))
        rows.append(row)
    return MatL(b.ctx, rows)

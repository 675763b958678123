"""Truncated Laurent series over F_{p^m} with explicit precision tracking.

A series stores the index of its first coefficient (``val``), the coefficient
window as encoded field integers, and a knowledge bound ``prec``: the series
is known modulo pi^prec.  ``prec is None`` means the value is an exact Laurent
polynomial (no truncation anywhere).  "Exact zero" and "zero up to precision"
are distinct states; valuation queries never fabricate an answer from the
second one.

Coefficient windows are kept trimmed: the leading stored coefficient is
nonzero, and trailing zeros are dropped (indices between the window and
``prec`` are known to be zero).
"""

from .coeffs import FieldCtx
from .errors import DivideByZero, InsufficientPrecision, ZeroValuation


class LaurentSeries:
    __slots__ = ("ctx", "val", "coeffs", "prec")

    def __init__(self, ctx: FieldCtx, val: int, coeffs: tuple, prec):
        self.ctx = ctx
        self.val = val
        self.coeffs = coeffs
        self.prec = prec  # None = exact

    # -- state predicates -----------------------------------------------------

    @property
    def exact(self) -> bool:
        return self.prec is None

    def is_exact_zero(self) -> bool:
        return self.prec is None and not self.coeffs

    def certified_nonzero(self) -> bool:
        return bool(self.coeffs)

    def is_monomial(self) -> bool:
        return self.prec is None and len(self.coeffs) == 1

    def known_coeff(self, j: int) -> int:
        """Coefficient of pi^j; only valid for j below the knowledge bound."""
        if self.prec is not None and j >= self.prec:
            raise InsufficientPrecision(f"coefficient at pi^{j} beyond precision {self.prec}",
                                        hint=2 * max(self.prec, 8))
        if j < self.val or j >= self.val + len(self.coeffs):
            return 0
        return self.coeffs[j - self.val]

    # -- hashing / comparison ---------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, LaurentSeries)
                and self.ctx == other.ctx
                and self.val == other.val
                and self.coeffs == other.coeffs
                and self.prec == other.prec)

    def __hash__(self):
        return hash((self.val, self.coeffs, self.prec))

    def __repr__(self):
        if self.is_exact_zero():
            return "0"
        if not self.coeffs:
            return f"O(pi^{self.prec})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{self.ctx.decode(c)}*pi^{self.val + i}")
        s = " + ".join(terms)
        return s if self.prec is None else f"{s} + O(pi^{self.prec})"

    # -- operator sugar (full ops live in the ls_* functions) -----------------

    def __add__(self, other):
        return ls_add(self, other)

    def __sub__(self, other):
        return ls_add(self, ls_neg(other))

    def __mul__(self, other):
        return ls_mul(self, other)

    def __neg__(self):
        return ls_neg(self)


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def make(ctx: FieldCtx, val: int, coeffs, prec=None) -> LaurentSeries:
    """Normalize a coefficient window into a series value."""
    coeffs = list(coeffs)
    if prec is not None:
        keep = prec - val
        if keep < len(coeffs):
            coeffs = coeffs[:max(keep, 0)]
    lead = 0
    while lead < len(coeffs) and coeffs[lead] == 0:
        lead += 1
    coeffs = coeffs[lead:]
    val += lead
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return LaurentSeries(ctx, 0 if prec is None else prec, (), prec)
    return LaurentSeries(ctx, val, tuple(coeffs), prec)


def zero(ctx: FieldCtx) -> LaurentSeries:
    return LaurentSeries(ctx, 0, (), None)


def one(ctx: FieldCtx) -> LaurentSeries:
    return LaurentSeries(ctx, 0, (1,), None)


def monomial(ctx: FieldCtx, k: int, coeff: int = 1) -> LaurentSeries:
    """Exact c * pi^k (``coeff`` is an encoded field integer or small int)."""
    c = coeff % ctx.p if coeff < 0 else coeff
    return make(ctx, k, [c])


def ls_val(x: LaurentSeries) -> int:
    """Index of the least nonzero coefficient.

    Raises ZeroValuation on the exact zero and InsufficientPrecision when all
    stored coefficients vanish but the series is only known up to pi^prec.
    """
    if x.coeffs:
        return x.val
    if x.prec is None:
        raise ZeroValuation("the exact zero has no valuation")
    raise InsufficientPrecision(
        f"series is zero up to pi^{x.prec}; valuation not certified",
        hint=2 * max(x.prec, 8))


def ls_add(x: LaurentSeries, y: LaurentSeries) -> LaurentSeries:
    if x.is_exact_zero():
        return y
    if y.is_exact_zero():
        return x
    prec = _pmin(x.prec, y.prec)
    val = min(x.val, y.val)
    top = max(x.val + len(x.coeffs), y.val + len(y.coeffs))
    if prec is not None:
        top = min(top, prec)
    acc = [0] * (top - val)
    for i, c in enumerate(x.coeffs):
        j = x.val + i - val
        if 0 <= j < len(acc):
            acc[j] = c
    if x.ctx.p == 2:
        # characteristic two: digit encodings add by xor, no carries
        for i, c in enumerate(y.coeffs):
            j = y.val + i - val
            if 0 <= j < len(acc):
                acc[j] ^= c
    else:
        add = x.ctx.add
        for i, c in enumerate(y.coeffs):
            j = y.val + i - val
            if 0 <= j < len(acc) and c:
                acc[j] = add(acc[j], c)
    return make(x.ctx, val, acc, prec)


def ls_neg(x: LaurentSeries) -> LaurentSeries:
    if x.ctx.p == 2:
        return x
    neg = x.ctx.neg
    return LaurentSeries(x.ctx, x.val, tuple(neg(c) for c in x.coeffs), x.prec)


def ls_mul(x: LaurentSeries, y: LaurentSeries) -> LaurentSeries:
    if x.is_exact_zero() or y.is_exact_zero():
        return zero(x.ctx)
    prec = None
    if x.prec is not None:
        prec = x.prec + y.val
    if y.prec is not None:
        prec = _pmin(prec, y.prec + x.val)
    val = x.val + y.val
    if not x.coeffs or not y.coeffs:
        return make(x.ctx, val, [], prec)
    width = len(x.coeffs) + len(y.coeffs) - 1
    if prec is not None:
        width = min(width, prec - val)
        if width <= 0:
            return make(x.ctx, val, [], prec)
    acc = [0] * width
    ctx = x.ctx
    if ctx._mul_table is not None and ctx.p == 2:
        mt, q = ctx._mul_table, ctx.q
        for i, a in enumerate(x.coeffs):
            if a:
                aq = a * q
                top = min(len(y.coeffs), width - i)
                for j in range(top):
                    b = y.coeffs[j]
                    if b:
                        acc[i + j] ^= mt[aq + b]
    elif ctx._mul_table is not None:
        mt, at, q = ctx._mul_table, ctx._add_table, ctx.q
        for i, a in enumerate(x.coeffs):
            if a:
                aq = a * q
                top = min(len(y.coeffs), width - i)
                for j in range(top):
                    b = y.coeffs[j]
                    if b:
                        acc[i + j] = at[acc[i + j] * q + mt[aq + b]]
    else:
        mul, add = ctx.mul, ctx.add
        for i, a in enumerate(x.coeffs):
            if a:
                top = min(len(y.coeffs), width - i)
                for j in range(top):
                    b = y.coeffs[j]
                    if b:
                        acc[i + j] = add(acc[i + j], mul(a, b))
    return make(ctx, val, acc, prec)


def scale(x: LaurentSeries, coeff: int) -> LaurentSeries:
    """Multiply by a nonzero field scalar (encoded int)."""
    if coeff == 0:
        return zero(x.ctx)
    mul = x.ctx.mul
    return LaurentSeries(x.ctx, x.val, tuple(mul(c, coeff) for c in x.coeffs), x.prec)


def shift(x: LaurentSeries, k: int) -> LaurentSeries:
    """Multiply by pi^k."""
    if not x.coeffs and x.prec is None:
        return x
    return LaurentSeries(x.ctx, x.val + k, x.coeffs,
                         None if x.prec is None else x.prec + k)


def ls_inv(x: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse, exact only for exact monomials.

    For a series with R certified significant digits the inverse carries R
    significant digits; an exact non-monomial is inverted to the context
    working precision.
    """
    if x.is_exact_zero():
        raise DivideByZero("inverse of the exact zero series")
    if not x.coeffs:
        raise InsufficientPrecision(
            f"cannot invert a series that is zero up to pi^{x.prec}",
            hint=2 * max(x.prec, 8))
    ctx = x.ctx
    v = x.val
    if x.is_monomial():
        return monomial(ctx, -v, ctx.inv(x.coeffs[0]))
    # exact non-monomials invert as if known modulo pi^(working precision)
    rel = (ctx.prec if x.prec is None else x.prec) - v
    if rel <= 0:
        raise InsufficientPrecision(
            "no significant digits available to invert", hint=2 * ctx.prec)
    u = list(x.coeffs[:rel]) + [0] * max(0, rel - len(x.coeffs))
    inv0 = ctx.inv(u[0])
    out = [0] * rel
    out[0] = inv0
    mul, add, neg = ctx.mul, ctx.add, ctx.neg
    for k in range(1, rel):
        s = 0
        top = min(k, len(x.coeffs) - 1)
        for j in range(1, top + 1):
            if u[j] and out[k - j]:
                s = add(s, mul(u[j], out[k - j]))
        if s:
            out[k] = neg(mul(inv0, s))
    return make(ctx, -v, out, -v + rel)


def ls_div(x: LaurentSeries, y: LaurentSeries) -> LaurentSeries:
    return ls_mul(x, ls_inv(y))


def ls_sigma(x: LaurentSeries) -> LaurentSeries:
    """Coefficientwise Frobenius; fixes pi, preserves val/prec/exactness."""
    frob = x.ctx.frob
    return LaurentSeries(x.ctx, x.val, tuple(frob(c) for c in x.coeffs), x.prec)


def ls_rebase(x: LaurentSeries, e: int) -> LaurentSeries:
    """Substitute pi -> w^e into a degree-e totally ramified extension."""
    if e < 1:
        raise ValueError("ramification index must be >= 1")
    if e == 1 or not x.coeffs:
        if not x.coeffs:
            return LaurentSeries(x.ctx, x.val * e, (),
                                 None if x.prec is None else x.prec * e)
        return x
    out = [0] * ((len(x.coeffs) - 1) * e + 1)
    for i, c in enumerate(x.coeffs):
        out[i * e] = c
    return make(x.ctx, x.val * e, out, None if x.prec is None else x.prec * e)


def truncate(x: LaurentSeries, prec: int) -> LaurentSeries:
    """Forget knowledge above pi^prec (never adds knowledge)."""
    if x.prec is not None and x.prec <= prec:
        return x
    return make(x.ctx, x.val, list(x.coeffs), prec)


def from_int(ctx: FieldCtx, n: int) -> LaurentSeries:
    """Constant series from a rational-integer value reduced mod p."""
    return make(ctx, 0, [n % ctx.p])

"""Arithmetic in the coefficient field F_{p^m} and its absolute Frobenius.

Elements are stored as integers in [0, p^m): the base-p digits of the integer
are the coordinates in the power basis of the modulus, least significant
first.  The context owns the modulus and (for small fields) full operation
tables, so the series and matrix layers can work on raw ints.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivideByZero, NonPrime, RangeError

# Fields up to this order get full add/mul lookup tables.
_TABLE_MAX = 128


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- dense F_p[x] helpers, little-endian coefficient lists --------------------

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    lead_inv = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        c = (f[-1] * lead_inv) % p
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _ptrim(f)
    return f


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _ppowmod(f, e, mod, p):
    result = [1]
    base = _pmod(f, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _irreducible(f, p):
    """Degree-m monic f is irreducible iff it shares no factor of degree
    <= m//2 with any x^(p^d) - x."""
    m = len(f) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        h = _ppowmod([0, 1], p ** d, f, p)
        h = list(h) + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_pgcd(f, _ptrim(h), p)) > 1:
            return False
    return True


def _least_modulus(p: int, m: int):
    """Lexicographically least monic irreducible of degree m, coefficient
    tuples compared most-significant-first."""
    for k in range(p ** m):
        digits = []
        t = k
        for _ in range(m):
            digits.append(t % p)
            t //= p
        # digits is (c_0, ..., c_{m-1}); k counts up in the required order
        # because the most significant tuple slot is c_{m-1}.
        f = digits + [1]
        if _irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """Immutable context for F_{p^m}; shared by all values built over it.

    ``prec`` is the default working precision (number of certified pi-adic
    digits) handed to series operations that must truncate.
    """

    def __init__(self, p: int, m: int, prec: int = 64):
        if not _is_prime(p):
            raise NonPrime(f"p = {p} is not prime")
        if m < 1:
            raise RangeError("extension degree m must be >= 1")
        if prec < 8:
            raise RangeError("working precision must be >= 8")
        self.p = p
        self.m = m
        self.q = p ** m
        self.prec = prec
        self.modulus = _least_modulus(p, m)  # little-endian, monic
        self._frob_table = None
        self._inv_table = None
        self._mul_table = None
        self._add_table = None
        self._neg_table = None
        if self.q <= _TABLE_MAX:
            self._build_tables()

    # -- raw encoding -------------------------------------------------------

    def encode(self, coords) -> int:
        x = 0
        for c in reversed(list(coords)):
            x = x * self.p + (c % self.p)
        return x

    def decode(self, x: int):
        out = []
        for _ in range(self.m):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    # -- raw arithmetic on encoded ints -------------------------------------

    def _build_tables(self):
        q, p = self.q, self.p
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            da = self.decode(a)
            for b in range(a, q):
                db = self.decode(b)
                s = self.encode((x + y) % p for x, y in zip(da, db))
                add[a * q + b] = s
                add[b * q + a] = s
                prod = self._slow_mul(a, b)
                mul[a * q + b] = prod
                mul[b * q + a] = prod
        self._add_table = add
        self._mul_table = mul
        self._neg_table = [self.encode((-x) % p for x in self.decode(a))
                           for a in range(q)]

    def _slow_mul(self, a: int, b: int) -> int:
        fa = _ptrim(list(self.decode(a)))
        fb = _ptrim(list(self.decode(b)))
        r = _pmod(_pmul(fa, fb, self.p), list(self.modulus), self.p)
        return self.encode(r + [0] * (self.m - len(r)))

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        return self.encode((x + y) % self.p for x, y in zip(self.decode(a), self.decode(b)))

    def neg(self, a: int) -> int:
        if self._neg_table is not None:
            return self._neg_table[a]
        p = self.p
        return self.encode((-x) % p for x in self.decode(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._slow_mul(a, b)

    def pow_(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivideByZero("inverse of zero in the coefficient field")
        if self._inv_table is None:
            self._inv_table = {}
        r = self._inv_table.get(a)
        if r is None:
            r = self.pow_(a, self.q - 2)
            self._inv_table[a] = r
        return r

    def frob(self, a: int) -> int:
        if self._frob_table is None:
            self._frob_table = [self.pow_(x, self.p) for x in range(self.q)] \
                if self.q <= 4096 else {}
        if isinstance(self._frob_table, dict):
            r = self._frob_table.get(a)
            if r is None:
                r = self.pow_(a, self.p)
                self._frob_table[a] = r
            return r
        return self._frob_table[a]

    # -- misc ----------------------------------------------------------------

    def elem(self, coords) -> "FFElem":
        if isinstance(coords, int):
            return FFElem(self, coords % self.p)
        return FFElem(self, self.encode(coords))

    def nonzero_elements(self):
        return [FFElem(self, x) for x in range(1, self.q)]

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m})"


@dataclass(frozen=True)
class FFElem:
    """Element of F_{p^m}, a thin wrapper over the encoded integer."""

    ctx: FieldCtx
    x: int

    @property
    def coeffs(self):
        return self.ctx.decode(self.x)

    def __add__(self, other):
        return FFElem(self.ctx, self.ctx.add(self.x, other.x))

    def __sub__(self, other):
        return FFElem(self.ctx, self.ctx.sub(self.x, other.x))

    def __mul__(self, other):
        return FFElem(self.ctx, self.ctx.mul(self.x, other.x))

    def __neg__(self):
        return FFElem(self.ctx, self.ctx.neg(self.x))

    def __pow__(self, e: int):
        return FFElem(self.ctx, self.ctx.pow_(self.x, e))

    def inverse(self):
        return FFElem(self.ctx, self.ctx.inv(self.x))

    def __bool__(self):
        return self.x != 0

    def __repr__(self):
        return f"FF{self.coeffs}"


@lru_cache(maxsize=None)
def field_make(p: int, m: int, prec: int = 64) -> FieldCtx:
    """Context for F_{p^m} with the deterministic lexicographic modulus."""
    return FieldCtx(p, m, prec)


def frobenius(x: FFElem) -> FFElem:
    """x -> x^p, the absolute Frobenius; order m on F_{p^m}."""
    return FFElem(x.ctx, x.ctx.frob(x.x))


def ff_arith(x: FFElem, y: FFElem, kind: str) -> FFElem:
    """Dispatch add/mul/inv by name (``inv`` ignores ``y``)."""
    if kind == "add":
        return x + y
    if kind == "mul":
        return x * y
    if kind == "inv":
        return x.inverse()
    raise ValueError(f"unknown kind {kind!r}")

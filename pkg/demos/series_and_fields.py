"""Tour of the arithmetic layers: coefficient fields, truncated Laurent
series with precision tracking, and the Frobenius action.

Run:  python3 demos/series_and_fields.py
"""

from isolab import field_make, frobenius, ls_add, ls_inv, ls_mul, ls_sigma, ls_val
from isolab.laurent import make, monomial
from isolab.errors import InsufficientPrecision, ZeroValuation

# The coefficient field F_4 = F_2[w]/(w^2 + w + 1), chosen deterministically.
F4 = field_make(2, 2)
print("field F_{2^2}, modulus (little-endian):", F4.modulus)

w = F4.elem([0, 1])
print("generator w:", w, " frobenius(w) = w^2 =", frobenius(w))
print("frobenius twice returns w:", frobenius(frobenius(w)) == w)

# Exact Laurent polynomials: no truncation anywhere.
pi = monomial(F4, 1)
x = ls_add(make(F4, 0, [1]), pi)          # 1 + pi
print("\nx = 1 + pi  ->", x)
print("x * x =", ls_mul(x, x), "(char 2: cross terms cancel)")

# Valuations refuse to guess.
zero_exact = ls_add(pi, -pi)
try:
    ls_val(zero_exact)
except ZeroValuation as e:
    print("\nexact zero has no valuation:", e)

fuzzy = make(F4, 0, [], prec=12)           # zero up to pi^12, nothing more known
try:
    ls_val(fuzzy)
except InsufficientPrecision as e:
    print("zero-up-to-precision raises instead of lying:", e)

# Inversion: exact for monomials, precision-tracked otherwise.
inv = ls_inv(x)
print("\n1/(1+pi) =", repr(inv)[:60], "...")
print("certified digits:", inv.prec, "(the context working precision)")
print("x * (1/x) =", ls_mul(x, inv))

# The series Frobenius fixes pi and acts on coefficients.
y = make(F4, 0, [w.x, w.x])
print("\nsigma(w + w*pi) =", ls_sigma(y))

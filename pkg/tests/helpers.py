"""Shared oracles and enumerators for the test suites."""

from fractions import Fraction

from isolab.cochar import Cocharacter, superbasic_parts

F = Fraction


def minimal_power_hodge_oracle(nu: Cocharacter, k: int) -> Cocharacter:
    """Hodge point of the k-th power of the minimal element via the closed
    floor formula applied blockwise: slopes floor((i + k*h)/d) for
    i = d-1..0 on a block of slope h/d."""
    slopes = []
    for slope, d in superbasic_parts(nu):
        h = slope.numerator * k
        for i in range(d - 1, -1, -1):
            slopes.append(F((i + h) - ((i + h) % d), d))
    return Cocharacter(slopes)


def enumerate_newton_points(n, lo=-2, hi=2):
    """All valid slope vectors of length n with slopes in [lo, hi] and
    denominators at most n (multiplicity divisible by the denominator)."""
    cands = sorted({F(h, d) for d in range(1, n + 1)
                    for h in range(lo * d, hi * d + 1)
                    if F(h, d).denominator == d}, reverse=True)
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(Cocharacter(acc))
            return
        for i in range(start, len(cands)):
            s = cands[i]
            d = s.denominator
            mult = d
            while mult <= remaining:
                rec(i + 1, remaining - mult, acc + [s] * mult)
                mult += d

    rec(0, n, [])
    return out

"""Rational slope vectors modulo permutation: dominance order, the overlap
metric, the two slope-sum operations, superbasic decomposition, and concave
polygons.

A Cocharacter stores the dominant (non-increasing) representative; every
operation that depends on a representative is defined through it.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import LengthMismatch, NotANewtonPoint, SumMismatch


class Cocharacter:
    __slots__ = ("slopes",)

    def __init__(self, slopes):
        self.slopes = tuple(sorted((Fraction(s) for s in slopes), reverse=True))

    @property
    def n(self) -> int:
        return len(self.slopes)

    def total(self) -> Fraction:
        return sum(self.slopes, Fraction(0))

    def scaled(self, c) -> "Cocharacter":
        c = Fraction(c)
        return Cocharacter(s * c for s in self.slopes)

    def __eq__(self, other):
        return isinstance(other, Cocharacter) and self.slopes == other.slopes

    def __hash__(self):
        return hash(self.slopes)

    def __repr__(self):
        return "(" + ", ".join(str(s) for s in self.slopes) + ")"


@dataclass(frozen=True)
class NewtonPolygon:
    """Concave polygon of prefix sums, breakpoints only.

    ``vertices`` starts at (0, 0), the x coordinates are strictly increasing
    integers ending at n, and the segment slopes strictly decrease.
    """

    vertices: tuple

    def value_at(self, x: Fraction) -> Fraction:
        for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]):
            if x1 <= x <= x2:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
        raise ValueError(f"abscissa {x} outside polygon range")


def _check_len(x: Cocharacter, y: Cocharacter):
    if x.n != y.n:
        raise LengthMismatch(f"lengths {x.n} and {y.n} differ")


def dominates(x: Cocharacter, y: Cocharacter) -> bool:
    """Whether x lies below y: every prefix sum of the dominant
    representative of x is <= that of y, with equality at the full length."""
    _check_len(x, y)
    sx = sy = Fraction(0)
    for i in range(x.n):
        sx += x.slopes[i]
        sy += y.slopes[i]
        if sx > sy:
            return False
    return sx == sy


def metric(x: Cocharacter, y: Cocharacter) -> Fraction:
    """Sum of the positive parts of the slopewise differences.

    Only defined for equal totals, where it is symmetric and bounds the
    maximal vertical gap of the two polygons from above.
    """
    _check_len(x, y)
    if x.total() != y.total():
        raise SumMismatch(f"totals {x.total()} and {y.total()} differ")
    return sum((a - b for a, b in zip(x.slopes, y.slopes) if a > b), Fraction(0))


def oplus(x: Cocharacter, y: Cocharacter) -> Cocharacter:
    """Componentwise sum of the dominant representatives."""
    _check_len(x, y)
    return Cocharacter(a + b for a, b in zip(x.slopes, y.slopes))


def oplus_w0(x: Cocharacter, y: Cocharacter) -> Cocharacter:
    """Sum of the dominant representative of x with the reversed one of y."""
    _check_len(x, y)
    return Cocharacter(a + b for a, b in zip(x.slopes, reversed(y.slopes)))


def superbasic_parts(x: Cocharacter):
    """Split into (slope, size) blocks: a slope h/m in lowest terms occupying
    M coordinates yields M/m blocks of size m.  Raises NotANewtonPoint when m
    does not divide M."""
    out = []
    i = 0
    slopes = x.slopes
    while i < len(slopes):
        j = i
        while j < len(slopes) and slopes[j] == slopes[i]:
            j += 1
        mult = j - i
        den = slopes[i].denominator
        if mult % den != 0:
            raise NotANewtonPoint(
                f"slope {slopes[i]} has multiplicity {mult}, not divisible by {den}")
        out.extend([(slopes[i], den)] * (mult // den))
        i = j
    return out


def is_newton_point(x: Cocharacter) -> bool:
    try:
        superbasic_parts(x)
        return True
    except NotANewtonPoint:
        return False


def polygon(x: Cocharacter) -> NewtonPolygon:
    """Concave polygon of the prefix sums of the dominant representative."""
    verts = [(0, Fraction(0))]
    acc = Fraction(0)
    for i, s in enumerate(x.slopes):
        acc += s
        last = i + 1 == x.n
        if last or x.slopes[i + 1] != s:
            verts.append((i + 1, acc))
    return NewtonPolygon(tuple(verts))


def min_gap(x: Cocharacter, y: Cocharacter) -> Fraction:
    """Maximal vertical distance between the two concave polygons.

    Both polygons are piecewise linear with integer breakpoints, so the
    maximum is attained at an integer abscissa.
    """
    _check_len(x, y)
    best = Fraction(0)
    sx = sy = Fraction(0)
    for a, b in zip(x.slopes, y.slopes):
        sx += a
        sy += b
        gap = abs(sx - sy)
        if gap > best:
            best = gap
    return best


def lcm_denominator(x: Cocharacter) -> int:
    out = 1
    for s in x.slopes:
        out = out * s.denominator // gcd(out, s.denominator)
    return out

"""Restriction-of-scalars models and their two applications.

The unramified model is a cyclic tuple of matrices on which the twist acts by
"apply the coefficient Frobenius and shift one slot up"; the totally ramified
model is a single matrix over the bigger ramified field whose slope data gets
divided by the ramification degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .cochar import Cocharacter
from .coeffs import FieldCtx
from .errors import BadHodgeProfile, DegreeTooSmall, InvalidParams, RangeError
from .invariants import hodge_point, newton_point
from . import laurent as ls
from .laurent import LaurentSeries
from .matl import MatL, mat_mul, mat_rebase, mat_sigma, twisted_power
from .sampling import rng_for


class ResElement:
    """Tuple of square matrices indexed by Z/gZ with cyclic Frobenius."""

    __slots__ = ("ctx", "g", "parts")

    def __init__(self, ctx: FieldCtx, parts):
        parts = tuple(parts)
        if not parts:
            raise InvalidParams("need at least one tuple part")
        n = parts[0].n
        if any(p.n != n for p in parts):
            raise InvalidParams("tuple parts must share one size")
        self.ctx = ctx
        self.g = len(parts)
        self.parts = parts

    def __eq__(self, other):
        return isinstance(other, ResElement) and self.parts == other.parts

    def __repr__(self):
        return f"ResElement(g={self.g}, parts={self.parts!r})"


def res_sigma(b: ResElement) -> ResElement:
    """Coefficient Frobenius on each part, shifted one index up."""
    g = b.g
    return ResElement(b.ctx, [mat_sigma(b.parts[(i - 1) % g]) for i in range(g)])


def res_shift(b: ResElement, k: int = 1) -> ResElement:
    """Cyclic relabeling of the parts (no Frobenius)."""
    g = b.g
    return ResElement(b.ctx, [b.parts[(i + k) % g] for i in range(g)])


def res_mul(a: ResElement, b: ResElement) -> ResElement:
    return ResElement(a.ctx, [mat_mul(x, y) for x, y in zip(a.parts, b.parts)])


def res_twisted_power(b: ResElement, k: int) -> ResElement:
    if k == 0:
        from .matl import identity
        return ResElement(b.ctx, [identity(b.ctx, b.parts[0].n)] * b.g)
    out = b
    twist = b
    for _ in range(1, k):
        twist = res_sigma(twist)
        out = res_mul(out, twist)
    return out


def res_hodge(b: ResElement):
    """Per-index Hodge points."""
    return [hodge_point(p) for p in b.parts]


def res_newton(b: ResElement) -> Cocharacter:
    """Common per-factor Newton point: the Newton point of the 0-component of
    the g-th twisted power, divided by g.

    Only the needed component is assembled: it is the product over j of the
    j-fold Frobenius twist of part -j mod g.
    """
    g = b.g
    m = b.ctx.m
    cur = b.parts[0]
    for j in range(1, g):
        part = b.parts[(g - j) % g]
        for _ in range(j % m):
            part = mat_sigma(part)
        cur = mat_mul(cur, part)
    return newton_point(cur).scaled(Fraction(1, g))


@dataclass(frozen=True)
class GOType:
    g: int
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if any(not (0 <= i < self.g) for i in self.members):
            raise InvalidParams("type members must lie in Z/gZ")


def go_type(b: ResElement) -> GOType:
    """Indices where the square of the twist degenerates to the central Hodge
    point (1, 1); requires every part to have Hodge point (1, 0)."""
    ones = Cocharacter([1, 0])
    central = Cocharacter([1, 1])
    for p in b.parts:
        if hodge_point(p) != ones:
            raise BadHodgeProfile(f"part has Hodge point {hodge_point(p)}, need (1, 0)")
    members = set()
    g = b.g
    for i in range(g):
        prod = mat_mul(b.parts[i], mat_sigma(b.parts[(i - 1) % g]))
        if hodge_point(prod) == central:
            members.add(i)
    return GOType(g, frozenset(members))


def _is_spaced(subset, g: int) -> bool:
    return all((i + 1) % g not in subset for i in subset)


def go_lambda(tau: GOType) -> Fraction:
    """Generic slope of a type: 1/2 in the odd full case, else the maximal
    cardinality of a circularly spaced subset of the type, divided by g."""
    g = tau.g
    if g % 2 == 1 and len(tau.members) == g:
        return Fraction(1, 2)
    members = sorted(tau.members)
    for size in range(len(members), 0, -1):
        for sub in combinations(members, size):
            if _is_spaced(set(sub), g):
                return Fraction(size, g)
    return Fraction(0)


def go_beta(tau: GOType) -> Cocharacter:
    lam = go_lambda(tau)
    return Cocharacter([1 - lam, lam])


def go_generic_matrix(ctx: FieldCtx, tau: GOType, seed: int,
                      attempts: int = 64) -> ResElement:
    """A two-by-two companion tuple whose type is exactly ``tau`` and whose
    Newton point is the generic one for that type.

    Parts are [[a_i, -pi], [1, 0]]; a zero a at slot i-1 puts i into the
    type, so the zeros sit one slot below the requested members and the off
    positions carry distinct seeded nonzero units.  Genericity is an open
    condition that particular small-field tuples can miss (the Newton point
    then drops strictly below the generic slope), so draws are rejected
    until the generic value is attained.
    """
    g = tau.g
    zeros = {(i - 1) % g for i in tau.members}
    free = [i for i in range(g) if i not in zeros]
    if ctx.q - 1 < len(free):
        raise DegreeTooSmall(
            f"need {len(free)} distinct nonzero units, field has {ctx.q - 1}")
    beta = go_beta(tau)
    for attempt in range(attempts):
        rng = rng_for(seed, "go-generic", attempt)
        units = rng.sample(range(1, ctx.q), len(free))
        coeffs = dict(zip(free, units))
        parts = []
        for i in range(g):
            a = ls.make(ctx, 0, [coeffs[i]]) if i in coeffs else ls.zero(ctx)
            parts.append(MatL(ctx, [[a, ls.monomial(ctx, 1, -1)],
                                    [ls.one(ctx), ls.zero(ctx)]]))
        b = ResElement(ctx, parts)
        if res_newton(b) == beta:
            return b
    raise DegreeTooSmall(
        f"no generic unit tuple for type {sorted(tau.members)} within "
        f"{attempts} draws over F_{ctx.q}")


@dataclass(frozen=True)
class DisplayParams:
    """Exponents of the ramified normal form [[T^m, c*T^i], [T^j, 0]]."""

    g: int
    i: int
    j: int
    m: int
    c: LaurentSeries = None

    def __post_init__(self):
        if self.i + self.j != self.g or not (0 <= self.j <= self.i <= self.g):
            raise InvalidParams("need i + j = g and 0 <= j <= i <= g")
        if self.m < self.j:
            raise InvalidParams("need m >= j")
        if self.c is not None and (not self.c.coeffs or self.c.val != 0):
            raise InvalidParams("c must be a certified unit")


def ag_display(ctx: FieldCtx, params: DisplayParams) -> MatL:
    """The display normal form as a matrix over the ramified field k((T))."""
    c = params.c if params.c is not None else ls.one(ctx)
    return MatL(ctx, [[ls.monomial(ctx, params.m), ls.ls_mul(c, ls.monomial(ctx, params.i))],
                      [ls.monomial(ctx, params.j), ls.zero(ctx)]])


def ag_invariants(F: MatL):
    """(j, n): j the smaller Hodge slope, n + j the smaller Hodge slope of
    the twisted square."""
    j = min(hodge_point(F).slopes)
    j2 = min(hodge_point(twisted_power(F, 2)).slopes)
    if j.denominator != 1 or j2.denominator != 1:
        raise InvalidParams("display invariants need integral Hodge slopes")
    return int(j), int(j2 - j)


def ag_lambda(n: int, g: int) -> Fraction:
    if not 0 <= n <= g:
        raise RangeError(f"need 0 <= n <= g, got n={n}, g={g}")
    return min(Fraction(n, g), Fraction(1, 2))


def base_change_check(b: MatL, e: int) -> dict:
    """Slope data of b and of its entrywise rebase to a degree-e totally
    ramified extension; every slope must scale exactly by e."""
    if e < 1:
        raise RangeError("ramification index must be >= 1")
    mu = hodge_point(b)
    nu = newton_point(b)
    rb = mat_rebase(b, e)
    mu_r = hodge_point(rb)
    nu_r = newton_point(rb)
    return {
        "e": e,
        "hodge": mu,
        "newton": nu,
        "hodge_rebased": mu_r,
        "newton_rebased": nu_r,
        "exact_scaling": mu_r == mu.scaled(e) and nu_r == nu.scaled(e),
    }

"""Totally ramified restriction of scalars: one matrix over the bigger field,
slopes divided by the ramification degree.

The normal form [[T^m, c*T^i], [T^j, 0]] carries two integers (j, n): j is
the smaller Hodge slope, n + j the smaller Hodge slope of the twisted
square, and lambda(n) = min(n/g, 1/2) determines the Newton slopes.

Run:  python3 demos/ramified_displays.py
"""

from fractions import Fraction as F

from isolab import field_make
from isolab.invariants import hodge_point, newton_point
from isolab.laurent import monomial, one, zero
from isolab.matl import MatL, twisted_power
from isolab.resgroups import (DisplayParams, ag_display, ag_invariants,
                              ag_lambda, base_change_check)

F9 = field_make(3, 2)

print("  g  (i,j,m)   recovered (j,n)  lambda   newton/g")
for g, i, j, m in [(2, 1, 1, 1), (2, 2, 0, 0), (3, 2, 1, 1), (4, 2, 2, 3),
                   (5, 3, 2, 2), (6, 3, 3, 7)]:
    params = DisplayParams(g=g, i=i, j=j, m=m)
    Fm = ag_display(F9, params)
    jj, nn = ag_invariants(Fm)
    lam = ag_lambda(nn, g)
    nu = newton_point(Fm).scaled(F(1, g))
    print(f"  {g}  ({i},{j},{m})   ({jj},{nn})"
          f"{'':10} {str(lam):<7} {nu}")

params = DisplayParams(g=2, i=1, j=1, m=1)
Fm = ag_display(F9, params)
print("\nthe g=2 fixture [[T, T], [T, 0]]:")
print("  hodge:", hodge_point(Fm), " hodge of square:",
      hodge_point(twisted_power(Fm, 2)))
print("  newton:", newton_point(Fm), " divided by g:", newton_point(Fm).scaled(F(1, 2)))

# Base change scaling: viewing a matrix over a degree-e ramified extension
# multiplies every slope by e.
b = MatL(F9, [[monomial(F9, 1), one(F9)], [zero(F9), monomial(F9, 2)]])
for e in (2, 3):
    rep = base_change_check(b, e)
    print(f"\nbase change e={e}: hodge {rep['hodge']} -> {rep['hodge_rebased']},"
          f" newton {rep['newton']} -> {rep['newton_rebased']},"
          f" exact scaling: {rep['exact_scaling']}")

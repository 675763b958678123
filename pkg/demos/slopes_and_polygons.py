"""Hodge points, Newton points, and the slope combinatorics that compare
them: dominance order, the overlap metric, and concave polygons.

Run:  python3 demos/slopes_and_polygons.py
"""

from fractions import Fraction as F

from isolab import (dominates, field_make, hodge_point, metric, min_gap,
                    newton_point, polygon, twisted_power)
from isolab.cli import render_polygon
from isolab.invariants import hodge_sequence, sln_counterexample
from isolab.laurent import monomial, one, zero
from isolab.matl import MatL

F4 = field_make(2, 2)

# A 2x2 fixture: swap-with-a-twist.
b = MatL(F4, [[zero(F4), monomial(F4, 1)], [one(F4), zero(F4)]])
print("b = [[0, pi], [1, 0]]")
print("hodge point mu(b) =", hodge_point(b), " (elementary divisor valuations)")
print("newton point nu(b) =", newton_point(b), " (eigenvalue valuations / m)")
print("Mazur: nu below mu? ->", dominates(newton_point(b), hodge_point(b)))
print("distance |nu, mu| =", metric(newton_point(b), hodge_point(b)))

# Twisted powers interleave the matrix with the coefficient Frobenius.
print("\n(b sigma)^2 =", twisted_power(b, 2), " -> hodge", hodge_point(twisted_power(b, 2)))

# Deeper signatures separate elements that depth-1 data cannot.
b1, b2 = sln_counterexample(F4, 3)
sig1 = hodge_sequence(b1, 3)
sig2 = hodge_sequence(b2, 3)
print("\n3x3 determinant-one pair:")
print("  signature of b1:", sig1.mus)
print("  signature of b2:", sig2.mus)
print("  agree to depth 2, split at depth 3")

nu1, mu1 = newton_point(b1), sig1[0]
print("\noverlay: nu(b1) polygon vs mu(b1) polygon")
print("  vertical gap at x=1:",
      polygon(mu1).value_at(F(1)) - polygon(nu1).value_at(F(1)))
print("  max gap:", min_gap(nu1, mu1), " metric:", metric(nu1, mu1))

print("\nconcave polygon of mu(b1) =", mu1)
print(render_polygon(mu1, "ascii"))
print("\nflat polygon of nu(b1) =", nu1)
print(render_polygon(nu1, "ascii"))

"""Unramified restriction of scalars as cyclic matrix tuples: the type of a
tuple, its generic slope, and the slope bound.

A tuple of 2x2 matrices with per-slot Hodge point (1, 0) gets a type: the
set of slots where the twisted square degenerates to the central point
(1, 1).  The spacing combinatorics of the type pins the generic per-slot
Newton point.

Run:  python3 demos/cyclic_tuples_types.py
"""

from isolab import field_make
from isolab.laurent import monomial, zero
from isolab.matl import MatL
from isolab.resgroups import (GOType, ResElement, go_beta, go_generic_matrix,
                              go_lambda, go_type, res_hodge, res_newton,
                              res_twisted_power)

F9 = field_make(3, 2)


def diag(a, b):
    return MatL(F9, [[monomial(F9, a), zero(F9)], [zero(F9), monomial(F9, b)]])


def antidiag(a, b):
    return MatL(F9, [[zero(F9), monomial(F9, a)], [monomial(F9, b), zero(F9)]])


# A three-slot tuple whose square degenerates in slot 0 only.
triple = ResElement(F9, [diag(1, 0), antidiag(0, 1), diag(0, 1)])
print("tuple parts: diag(pi,1), antidiag(1,pi), diag(1,pi)")
print("per-slot hodge:", res_hodge(triple))
print("hodge of the twisted square:", res_hodge(res_twisted_power(triple, 2)))
print("type:", sorted(go_type(triple).members))
print("per-slot newton point:", res_newton(triple))

# Spacing combinatorics of types.
print("\n  g  type           lambda  generic slope pair")
for g, members in [(3, ()), (3, (0, 1, 2)), (4, (0, 2)), (5, (0, 1, 3)),
                   (5, (0, 1, 2, 3, 4))]:
    tau = GOType(g, frozenset(members))
    print(f"  {g}  {str(sorted(members)):<13} {str(go_lambda(tau)):<7}"
          f" {go_beta(tau)}")

# The companion family realizes each type with its generic Newton point.
for members in [(), (0,), (0, 2)]:
    tau = GOType(4, frozenset(members))
    b = go_generic_matrix(F9, tau, seed=1)
    print(f"\ncompanion tuple for type {sorted(members)} (g=4):")
    print("  computed type:", sorted(go_type(b).members))
    print("  newton:", res_newton(b), " generic bound:", go_beta(tau))

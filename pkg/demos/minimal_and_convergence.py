"""Minimal elements realize a Newton point with Hodge points as close as
possible (within n/4 in the overlap metric), satisfy a decency equation, and
anchor the convergence of normalized Hodge points toward the Newton point.

Run:  python3 demos/minimal_and_convergence.py
"""

from fractions import Fraction as F

from isolab import Cocharacter, field_make, metric
from isolab.cochar import lcm_denominator
from isolab.invariants import (congruence_stability, convergence_trace,
                               decency_check, hodge_point, minimal_element,
                               newton_point, signature_spread, hodge_sequence)
from isolab.matl import MatL, twisted_power

F4 = field_make(2, 2)

nu = Cocharacter([F(2, 3), F(2, 3), F(2, 3), F(1, 2), F(1, 2)])
b = minimal_element(F4, nu)
print("minimal element for nu =", nu)
for row in b.rows:
    print("  ", [repr(e) for e in row])
print("newton point:", newton_point(b), " hodge point:", hodge_point(b))
print("distance:", metric(newton_point(b), hodge_point(b)), "<= n/4 =", F(b.n, 4))

s = lcm_denominator(nu)
print(f"decency at s = {s}:", decency_check(b, s),
      "(the s-th twisted power is diagonal with the expected valuations)")

print("\npowers stay within n/4:")
for k in range(1, 7):
    mu_k = hodge_point(twisted_power(b, k))
    print(f"  k={k}: |k*nu, mu_k| = {metric(nu.scaled(k), mu_k)}")

# Convergence trace: distance to the Newton point decays like c/k.  The
# fixture has newton (1, 0) but hodge (2, -1); the cancellation between the
# two unit coefficients pushes the depth-1 data away from the limit.
from isolab import laurent as ls
lam = F4.encode([0, 1])
entry = ls.ls_add(ls.monomial(F4, -1, lam), ls.ls_neg(ls.make(F4, 0, [F4.frob(lam)])))
m = MatL(F4, [[ls.one(F4), ls.zero(F4)], [entry, ls.monomial(F4, 1)]])
trace = convergence_trace(m, 12)
print("\nconvergence of the cancellation fixture, newton =", trace["newton"])
print("  k   mu_k/k              distance   k*distance")
for row in trace["rows"]:
    print(f"  {row['k']:>2}  {str(row['normalized']):<18}  {str(row['distance']):<9}"
          f"  {row['raw_distance']}")
print("fitted c =", trace["fitted_c"], " (distance <= c/k throughout)")

# Signatures are insensitive to deep congruence perturbations.
spread = signature_spread(hodge_sequence(m, 4))
level = int(spread) + 1
report = congruence_stability(m, level, trials=50, seed=5, depth=4)
print(f"\ncongruence stability at level {level} (spread {spread} + 1): "
      f"{report['violations']} violations in {report['trials']} perturbations")

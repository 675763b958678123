"""Beyond rank two the depth-(n-1) signature does NOT determine the Newton
point: an explicit determinant-one pair agrees to depth n-1 and has
different Newton points.

Run:  python3 demos/sl3_counterexample.py
"""

from isolab import field_make, newton_point
from isolab.invariants import hodge_sequence, sln_counterexample, stratum_scan
from isolab.matl import det

F4 = field_make(2, 2)

for n in (3, 4):
    b1, b2 = sln_counterexample(F4, n)
    print(f"\n== dimension {n} ==")
    print("det(b1) =", det(b1), " det(b2) =", det(b2))
    sig1 = hodge_sequence(b1, n)
    sig2 = hodge_sequence(b2, n)
    for k in range(n):
        tag = "==" if sig1[k] == sig2[k] else "!="
        print(f"  depth {k + 1}: {sig1[k]} {tag} {sig2[k]}")
    print("  newton(b1) =", newton_point(b1))
    print("  newton(b2) =", newton_point(b2))

# The same split seen from the sampler's side: one depth-2 stratum of 3x3
# matrices carries at least two Newton points.
b1, _ = sln_counterexample(F4, 3)
sig = hodge_sequence(b1, 2)
print("\nscanning the depth-2 stratum", sig.mus, "of 3x3 matrices ...")
report = stratum_scan(F4, 3, sig, trials=60, seed=9, budget_factor=400)
print(f"accepted {report['accepted']} of {report['attempts']} attempts;"
      f" Newton points found:")
for row in report["tally"]:
    print("  ", row["newton"], "x", row["count"])

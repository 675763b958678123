"""Rank two is special: the first two Hodge points pin the Newton point.

The demo samples matrices at random, groups them by the pair
(mu(b), mu((b sigma)^2)), and checks that each group carries exactly one
Newton point, reproduced by the closed recovery rule.  A stratum scan then
shows the generic behavior from the sampler's side.

Run:  python3 demos/gl2_recovery.py
"""

from collections import defaultdict

from isolab import Cocharacter, field_make, gl2_recover
from isolab.invariants import StrataSignature, hodge_sequence, newton_point, stratum_scan
from isolab.sampling import rand_matrix, rng_for

F4 = field_make(2, 2)
rng = rng_for(7, "demo-recovery")

groups = defaultdict(set)
for _ in range(1500):
    b = rand_matrix(F4, rng, 2, -2, 2)
    sig = hodge_sequence(b, 2)
    groups[(sig[0], sig[1])].add(newton_point(b))

print(f"sampled 1500 invertible 2x2 matrices -> {len(groups)} depth-2 signatures")
multi = [k for k, v in groups.items() if len(v) > 1]
print("signatures with more than one Newton point:", len(multi))

print("\nsignature".ljust(28), "recovered Newton point")
for (mu1, mu2), nus in sorted(groups.items(), key=lambda kv: str(kv[0]))[:10]:
    nu = gl2_recover(mu1, mu2)
    mark = "ok" if nus == {nu} else "MISMATCH"
    print(f"({mu1}, {mu2})".ljust(28), nu, mark)
print("...")

# The two canonical shapes: split data recovers a split point, merged data
# collapses to the central one.
print("\nrule on ((1,0),(2,0)) ->", gl2_recover(Cocharacter([1, 0]), Cocharacter([2, 0])))
print("rule on ((1,0),(1,1)) ->", gl2_recover(Cocharacter([1, 0]), Cocharacter([1, 1])))

sig = StrataSignature((Cocharacter([1, 0]), Cocharacter([1, 1])))
report = stratum_scan(F4, 2, sig, trials=50, seed=11)
print(f"\nstratum scan of ((1,0),(1,1)): {report['accepted']} hits "
      f"in {report['attempts']} attempts")
for row in report["tally"]:
    print("  newton", row["newton"], "x", row["count"])

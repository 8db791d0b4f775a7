"""Randomised experiments: a super-order census and the order-type gap search.

The census counts distinct super-order types among random simple sequences.
The gap search looks for two drawings of one graph with the same classical
order type but different minimum obstacle counts.
"""
from obsnum.experiments import census, ordertype_gap

for n in (3, 4):
    c = census(n, 300, seed=0)
    print(f"n={n}: {c.distinct} distinct super-order types in {c.samples} samples "
          f"(trace tail {c.trace[-5:]})")

gap = ordertype_gap(5, budget=60, seed=2)
print(f"gap search n=5: {gap.trials} trials, {len(gap.found)} pair(s) found")
for p in gap.found:
    print("  minima", p.counts, "order types equal:", p.order_types_equal,
          "super-order types equal:", p.sot_equal, "re-verified:", p.reverified)

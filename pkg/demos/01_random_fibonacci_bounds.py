"""
Bounds for random Fibonacci
===========================

Random Fibonacci sends a to ab or ba and b to a. Neither closed form
applies, so the entropy is squeezed between a lower and an upper sequence
built from the number of inflation words at each level.
"""
import math

from randsub import bounds_table, estimate_entropy, get_example, level_sets
from randsub.catalogue import rf_cardinality

entry = get_example("random-fibonacci")
sub = entry.substitution
print(sub)

# the first few level sets are small enough to look at directly
for m in (1, 2, 3):
    lv = level_sets(sub, m)
    print(m, lv.counts, lv.ordered["a"][:4])

# enumeration agrees with the product formula for the first letter
for m in range(1, 7):
    assert level_sets(sub, m).counts[0] == rf_cardinality(m)

# beyond level 6 the formula takes over, so the table can go much deeper
table = bounds_table(sub, 30, provider=entry.recurrence, enumerate_max=6)
print(f"{'m':>3} {'lower':>9} {'upper':>9}  source")
for row in table:
    if row.m <= 8 or row.m % 5 == 0:
        print(f"{row.m:>3} {row.lower:9.6f} {row.upper:9.6f}  {row.source}")

print("known value", round(entry.known_entropy, 6))

# the estimator stops at the first level whose gap is below the tolerance
est = estimate_entropy(sub, tol=1e-3, m_cap=40, provider=entry.recurrence, enumerate_max=6)
print(est.certificate, est.m_used, round(est.value, 6), "+-", f"{est.gap / 2:.1e}")
assert est.lower <= entry.known_entropy <= est.upper
print("log 2 / tau^2 =", math.log(2) / ((1 + 5 ** 0.5) / 2) ** 2, "is the first lower bound")

"""
When the entropy has a closed form
==================================

If every pair of image words keeps producing identical sets, or always
disjoint ones, the bound sequences collapse and a single level is enough.
The checks below say which case holds, and why.
"""
import math

from randsub import check_disjoint, check_identical, estimate_entropy, get_example

for name in ("random-period-doubling", "random-fibonacci-squared",
             "random-paper-folding", "equal-images", "random-thue-morse"):
    sub = get_example(name).substitution
    print(name)
    print("  ", check_identical(sub).describe())
    print("  ", check_disjoint(sub).describe())
    est = estimate_entropy(sub)
    print("   entropy", round(est.value, 6), est.certificate)

# Thue-Morse is refuted at the first level: baba lies in theta(ab) and theta(ba)
tm = get_example("random-thue-morse").substitution
print(check_disjoint(tm, 3))

# rust-ex19 is disjoint, but none of the quick criteria can see it.
# The search finds no overlap at low levels; it just cannot prove the rest.
ex19 = get_example("rust-ex19")
print(check_disjoint(ex19.substitution, 2).describe())
print("closed form (1/6) log 2 =", math.log(2) / 6)

"""
Geometric entropy and periodic words
====================================

Giving each letter a tile length rescales the entropy by one over the mean
tile length. Separately, a periodic word u has its own growth rate, which
comes from the product of the per-letter counts.
"""
from randsub import (GeometricConfig, estimate_entropy, get_example, is_periodic_bounded,
                     periodic_growth, perron_data, substitution_matrix)

sub = get_example("random-fibonacci-squared").substitution
perron = perron_data(substitution_matrix(sub))
est = estimate_entropy(sub)
print("lambda", perron.lam, "R", perron.R)

# natural tile lengths come from the left eigenvector; since L.R = 1 they
# keep the mean tile length at one
natural = GeometricConfig.natural(perron)
print("natural lengths", natural.psi, "rho", natural.rho)
print("geometric entropy", natural.rho * est.value)

unit = GeometricConfig.from_psi([1.0, 1.0], perron)
print("unit tiles leave it unchanged:", unit.rho * est.value, est.value)

long_a = GeometricConfig.from_psi([2.0, 1.0], perron)
print("a twice as long as b: rho", long_a.rho, "entropy", long_a.rho * est.value)

# is (ab)^N legal for every N? The oracle can only check a few N.
rf = get_example("random-fibonacci").substitution
for u in ("ab", "aab", "b"):
    print(u, is_periodic_bounded(rf, u, 4))

# ab is a sensible candidate; its inflation sets grow like this
for m, rate in periodic_growth(rf, "ab", 6):
    print(m, round(rate, 5))

"""
Counting legal words by brute force
===================================

The language oracle lists every word of a given length that shows up
inside some inflation word. It is slow, but it checks the bounds without
relying on any of the theory behind them.
"""
import math

from randsub import complexity_profile, estimate_entropy, get_example, legal_words

sub = get_example("random-period-doubling").substitution

sl = legal_words(sub, 4)
print(len(sl), "legal words of length 4, converged:", sl.converged, "after", sl.levels_used, "levels")
print(sorted(sl.words))

# log(#L_n)/n falls towards the entropy from above, though slowly
print(f"{'n':>3} {'#L_n':>6} {'log/n':>8}")
for row in complexity_profile(sub, 12):
    print(f"{row.length:>3} {row.count:>6} {row.entropy_quotient:8.4f}")
print("closed form", round(estimate_entropy(sub).value, 4), "=", round(2 / 3 * math.log(2), 4))

# letter frequencies of long legal words settle on the right eigenvector
fib = get_example("random-fibonacci").substitution
for row in complexity_profile(fib, 10)[::3]:
    print(row.length, f"{row.frequency_deviation:.3f}")

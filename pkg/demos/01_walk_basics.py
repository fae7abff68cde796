"""Walk basics: coins, initial states, and exact evolution.

A step of the walk applies a 2x2 unitary coin to the internal left/right
state, then moves the particle one site in the matching direction.  The
engine tracks the exact complex amplitudes, so every probability below is
exact up to floating-point rounding: there is no sampling noise anywhere.
"""

import math

import numpy as np

from qwalk1d import distribution, hadamard_coin, make_qubit, validate_coin

# The balanced coin and the initial state that produces a mirror-symmetric
# walk.  The 1j phase on the second amplitude is essential: with a real
# balanced state the walk drifts left (see demo 04).
coin = hadamard_coin()
qubit = make_qubit(1.0 / math.sqrt(2.0), 1j / math.sqrt(2.0))

print("coin matrix:")
print(np.round(coin.matrix, 6))
print(f"determinant: {coin.delta:.6f}, branch: {coin.branch}")

# After four steps the exact distribution is {1/16, 6/16, 2/16, 6/16, 1/16}.
# Compare the classical balanced walk, which would put 6/16 at the center
# and 4/16 at +-2: the quantum walk pushes mass OUTWARD.
dist = distribution(coin, qubit, 4)
print("\nposition probabilities after 4 steps:")
for k in dist.positions:
    bar = "#" * int(round(dist.probability(int(k)) * 64))
    print(f"  k = {int(k):+d}: {dist.probability(int(k)):.6f} {bar}")
print(f"  total: {dist.total():.15f}  (unitarity; never renormalized)")

# The spread grows linearly in time (ballistic), unlike the diffusive
# classical walk whose standard deviation grows like sqrt(n).
print("\nstandard deviation per step count:")
for n in (4, 16, 64, 256):
    d = distribution(coin, qubit, n)
    sd = math.sqrt(d.moment(2) - d.mean() ** 2)
    print(f"  n = {n:3d}: sd = {sd:8.4f},  sd/n = {sd / n:.6f}")

# Degenerate coins never mix the two directions.  With b = 0 the walk is
# purely ballistic; each amplitude rides off at full speed.
ballistic = validate_coin([[1, 0], [0, 1]])
qubit2 = make_qubit(0.6, 0.8)
d = distribution(ballistic, qubit2, 12)
print("\nno-mixing coin, weights (0.36, 0.64) after 12 steps:")
print(f"  P(X = -12) = {d.probability(-12):.6f}, P(X = +12) = {d.probability(12):.6f}")

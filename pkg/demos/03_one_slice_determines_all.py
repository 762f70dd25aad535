"""Splitting along one slice and extending back to the whole ball.

Restricted to the slice of a unit imaginary u, a series with quaternion
coefficients becomes a pair of ordinary complex power series (the other
two directions ride along an orthogonal companion unit).  The extension
operator rebuilds values anywhere from the two slice values at z and its
mirror conjugate -- one slice of data determines the function everywhere.
"""

import numpy as np

from slicefock import I, Quaternion, SliceSeries
from slicefock.quaternions import random_unit_imaginary

rng = np.random.default_rng(7)
f = SliceSeries(rng.standard_normal((9, 4)))

# Split along the slice of i: two complex coefficient lists.
pair = f.split(I)
print("component 1 coefficients:", np.round(pair.c1[:4], 3), "...")
print("component 2 coefficients:", np.round(pair.c2[:4], 3), "...")

# The split loses nothing.
back = pair.recombine()
print("round-trip max coefficient error:", np.abs(back.coeffs - f.coeffs).max())

# Values off the slice come from the two mirror values on it.
q = Quaternion(0.4, -0.3, 0.5, 0.2)
print("\ndirect evaluation:  ", f.eval(q).to_text())
print("extended from slice:", pair.extend(q).to_text())

# The identity holds for any slice choice and any point of the ball.
worst = 0.0
for _ in range(500):
    u = random_unit_imaginary(rng)
    pr = f.split(u)
    v = rng.standard_normal(4)
    v *= 0.95 * rng.uniform() ** 0.25 / np.linalg.norm(v)
    qq = Quaternion.from_components(v)
    worst = max(worst, abs(pr.extend(qq) - f.eval(qq)))
print("\nworst extension residual over 500 random (slice, point) pairs:", worst)

# On real points every slice agrees, whatever direction was used to split.
x = Quaternion.real(0.37)
print("value at a real point, three different splits:")
for _ in range(3):
    u = random_unit_imaginary(rng)
    print("  ", f.split(u).extend(x).to_text())

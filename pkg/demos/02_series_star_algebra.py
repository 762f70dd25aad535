"""The non-commutative convolution algebra of slice series.

Series sum left powers against right coefficients, q^n a_n.  Pointwise
multiplication leaves this class, so products are taken by coefficient
convolution (the star product).  The star product is associative and has
the usual formal-series inverses, but it is genuinely non-commutative and
only agrees with the pointwise product where the left factor's values
commute with the evaluation point.
"""

import numpy as np

from slicefock import I, J, ONE, Quaternion, SliceSeries, pointwise_star_residual

qi = SliceSeries.monomial(1, I)     # q * i
qj = SliceSeries.monomial(1, J)     # q * j

print("(qi * qj) coefficients:", qi.star(qj).coeffs.tolist())
print("(qj * qi) coefficients:", qj.star(qi).coeffs.tolist())   # opposite sign: order matters

# Evaluation respects the left-power convention: f(q) = sum q^n a_n.
f = SliceSeries.from_quaternions([ONE, I])          # 1 + q i
print("\nf(j) =", f.eval(J).to_text(), " (j*i = -k)")

# The pointwise description of the star product: away from zeros of f,
# (f*g)(q) = f(q) g(f(q)^-1 q f(q)); at zeros of f the product vanishes.
rng = np.random.default_rng(0)
g = SliceSeries(rng.standard_normal((5, 4)))
h = SliceSeries(rng.standard_normal((5, 4)))
q = Quaternion(0.3, 0.2, -0.4, 0.1)
print("\npointwise residual at a generic point:", pointwise_star_residual(g, h, q))

one_minus_q = SliceSeries.from_quaternions([ONE, -ONE])
print("pointwise residual at a zero of the left factor:",
      pointwise_star_residual(one_minus_q, g, ONE))

# Conjugating coefficients symmetrizes: f * f^c always has real coefficients.
sym = g.star(g.conjugate())
print("\nmax imaginary part of f*f^c coefficients:", np.abs(sym.coeffs[:, 1:]).max())

# That real series is what makes the star reciprocal computable:
# f^{-*} = (f*f^c)^{-1} f^c as formal series.
rec = g.star_reciprocal(8)
resid = g.star(rec, cap=8).coeffs.copy()
resid[0, 0] -= 1.0
print("coefficients of f * f^{-*} - 1 through degree 8:", np.abs(resid).max())

# Geometric-series sanity: (1 - q a)^{-*} = sum q^n a^n.
a = Quaternion(0.1, 0.4, -0.2, 0.3)
geo = SliceSeries.from_quaternions([ONE, -a]).star_reciprocal(4)
acc = ONE
for n in range(5):
    print("degree %d: %s  vs  a^%d = %s" % (n, geo.coefficient(n).to_text(), n, acc.to_text()))
    acc = acc * a

# Products past the degree cap are truncated and audited, never silent:
big = SliceSeries.monomial(40).star(SliceSeries.monomial(40))
print("\ncapped product degree:", big.degree, " dropped degrees:", big.dropped)

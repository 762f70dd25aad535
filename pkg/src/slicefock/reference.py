"""Slow, independent reference integrals for cross-checking the grids.

Everything here goes through adaptive Simpson integration in one variable,
deliberately sharing no code with the polar product grids it certifies.
"""

from __future__ import annotations

import math

__all__ = [
    "adaptive_simpson",
    "lower_incomplete_gamma",
    "gaussian_disk_mass",
    "monomial_gram_reference",
    "monomial_norm_reference",
]


def _simpson(f, a, fa, b, fb, m, fm):
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adapt(f, a, fa, b, fb, m, fm, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(f, a, fa, m, fm, lm, flm)
    right = _simpson(f, m, fm, b, fb, rm, frm)
    delta = left + right - whole
    # the rounding floor keeps huge-magnitude integrals from subdividing
    # past the precision the arithmetic can deliver
    stop = 15.0 * max(tol, 4e-16 * (abs(left) + abs(right)))
    if depth <= 0 or abs(delta) <= stop:
        return left + right + delta / 15.0
    return (_adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
            + _adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1))


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-12, max_depth: int = 48) -> float:
    """Adaptive Simpson quadrature of f on [a, b].

    The tolerance is absolute, floored locally by machine precision
    relative to the integrand's magnitude.
    """
    if b == a:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = _simpson(f, a, fa, b, fb, m, fm)
    return _adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth)


def lower_incomplete_gamma(s: float, x: float, tol: float = 1e-12) -> float:
    """Lower incomplete gamma integral of t^(s-1) e^(-t) over [0, x], s >= 1."""
    if s < 1.0:
        raise ValueError("only s >= 1 is supported (integrand must stay bounded)")
    if x < 0.0:
        raise ValueError("x must be non-negative")
    if x == 0.0:
        return 0.0

    def integrand(t: float) -> float:
        if t == 0.0:
            return 1.0 if s == 1.0 else 0.0
        return t ** (s - 1.0) * math.exp(-t)

    return adaptive_simpson(integrand, 0.0, x, tol=tol)


def gaussian_disk_mass(alpha: float, r_max: float, tol: float = 1e-12) -> float:
    """Mass of (alpha/pi) e^(-alpha r^2) dA on the disk of radius r_max.

    Computed as the one-dimensional radial integral 2 alpha r e^(-alpha r^2);
    the closed form is 1 - exp(-alpha r_max^2).
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return adaptive_simpson(lambda r: 2.0 * alpha * r * math.exp(-alpha * r * r),
                            0.0, r_max, tol=tol)


def monomial_gram_reference(m: int, alpha: float, r_max: float) -> float:
    """Squared Gaussian-measure norm of q^m on the radius-r_max slice disk."""
    return lower_incomplete_gamma(m + 1, alpha * r_max * r_max) / alpha ** m


def monomial_norm_reference(m: int, p: float, alpha: float, r_max: float) -> float:
    """p-norm of the monomial q^m under the weighted slice integral.

    Radial reduction of (alpha p / 2 pi) * integral over the disk of
    (r^m e^(-alpha r^2 / 2))^p dA, which evaluates to
    gamma_lower(mp/2 + 1, beta r_max^2) / beta^(mp/2) with beta = alpha p/2.
    """
    beta = 0.5 * alpha * p
    s = 0.5 * m * p + 1.0
    val = lower_incomplete_gamma(s, beta * r_max * r_max) / beta ** (s - 1.0)
    return val ** (1.0 / p)

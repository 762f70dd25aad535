"""Polar product grids on slice disks and deterministic sphere sampling.

The grid is a tensor product of Gauss-Legendre nodes in the radius (with
the polar Jacobian folded into the weights) and equispaced angles with the
trapezoid rule, which is exact for trigonometric polynomials of degree
below the angle count.  Weights carry the plain Lebesgue area element;
Gaussian-measure weights are derived on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quaternions import I, J, K, Quaternion

__all__ = ["PolarGrid", "build_polar_grid", "fibonacci_sphere", "slice_sample"]

_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))

_GRID_CACHE: dict[tuple[int, int, float], "PolarGrid"] = {}


@dataclass(frozen=True)
class PolarGrid:
    """Flattened polar quadrature nodes over a disk of radius r_max."""

    r_max: float
    n_r: int
    n_theta: int
    r: np.ndarray            # radial nodes, shape (n_r,)
    theta: np.ndarray        # angular nodes, shape (n_theta,)
    z: np.ndarray            # complex nodes r*exp(i theta), flattened
    area_weights: np.ndarray  # Lebesgue dA weights per node, flattened

    @property
    def size(self) -> int:
        return self.z.size

    def gaussian_weights(self, alpha: float) -> np.ndarray:
        """Weights of (alpha/pi) exp(-alpha |z|^2) dA at the nodes."""
        return self.area_weights * (alpha / math.pi) * np.exp(-alpha * np.abs(self.z) ** 2)

    def gaussian_mass(self, alpha: float) -> float:
        return float(np.sum(self.gaussian_weights(alpha)))

    def integrate(self, values: np.ndarray) -> float:
        """Plain area integral of nodal values (fixed summation order)."""
        return float(np.sum(values * self.area_weights))


def build_polar_grid(n_r: int, n_theta: int, r_max: float) -> PolarGrid:
    """Tensor Gauss-Legendre x trapezoid grid on the disk of radius r_max.

    Grids are cached by (n_r, n_theta, r_max) since they are immutable and
    reused heavily by the norm and projection code.
    """
    if n_r < 4 or n_theta < 4:
        raise ValueError("need at least 4 radial and 4 angular nodes")
    if r_max <= 0:
        raise ValueError("grid radius must be positive")
    key = (n_r, n_theta, float(r_max))
    cached = _GRID_CACHE.get(key)
    if cached is not None:
        return cached
    x, w = np.polynomial.legendre.leggauss(n_r)
    r = 0.5 * r_max * (x + 1.0)
    wr = 0.5 * r_max * w * r            # polar Jacobian r dr
    theta = 2.0 * math.pi * np.arange(n_theta) / n_theta
    wt = 2.0 * math.pi / n_theta
    zz = r[:, None] * np.exp(1j * theta[None, :])
    area = np.broadcast_to((wr * wt)[:, None], zz.shape)
    r.flags.writeable = False
    theta.flags.writeable = False
    z = zz.ravel()
    aw = np.ascontiguousarray(area.ravel())
    z.flags.writeable = False
    aw.flags.writeable = False
    grid = PolarGrid(float(r_max), n_r, n_theta, r, theta, z, aw)
    _GRID_CACHE[key] = grid
    return grid


def fibonacci_sphere(n: int) -> np.ndarray:
    """Deterministic Fibonacci lattice of n points on the unit 2-sphere."""
    if n < 1:
        raise ValueError("need at least one sample point")
    k = np.arange(n)
    y = 1.0 - (2.0 * k + 1.0) / n
    rad = np.sqrt(np.maximum(0.0, 1.0 - y * y))
    phi = k * _GOLDEN_ANGLE
    pts = np.stack([np.cos(phi) * rad, y, np.sin(phi) * rad], axis=1)
    return pts


def slice_sample(n_slices: int) -> list[Quaternion]:
    """Deterministic sample of unit imaginaries: Fibonacci lattice plus the
    three coordinate axes (always included so canonical slices are exact)."""
    pts = fibonacci_sphere(n_slices)
    units = [Quaternion(0.0, p[0], p[1], p[2]) for p in pts]
    units.extend([I, J, K])
    return units

"""Quaternion arithmetic, the imaginary unit sphere, and slice coordinates.

Components are (x0, x1, x2, x3) over the basis (1, i, j, k) with the
multiplication rules ij = -ji = k, jk = -kj = i, ki = -ik = j.  Values are
immutable; every operation returns a fresh ``Quaternion``, so all functions
here are pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

__all__ = [
    "Quaternion",
    "SliceCoords",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "AXIS_EPS",
    "axis",
    "slice_coords",
    "orthogonal_unit",
    "decompose_basis",
    "compose_basis",
    "hamilton",
    "conj_components",
    "random_unit_imaginary",
]

# Relative threshold below which Im(q) is treated as zero and the axis
# falls back to the canonical unit i.  Scale-aware so that large reals do
# not acquire a spurious axis from rounding noise.
AXIS_EPS = 1e-13

# Gram-Schmidt in orthogonal_unit degrades near the reference direction;
# below this projection gap the fixed fallback direction is used instead.
_FALLBACK_GAP = 1e-8


@dataclass(frozen=True)
class Quaternion:
    """Immutable quaternion value x0 + x1*i + x2*j + x3*k."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "x1", float(self.x1))
        object.__setattr__(self, "x2", float(self.x2))
        object.__setattr__(self, "x3", float(self.x3))

    # -- constructors ------------------------------------------------------

    @classmethod
    def real(cls, x: float) -> "Quaternion":
        return cls(x, 0.0, 0.0, 0.0)

    @classmethod
    def from_components(cls, comps: Iterable[float]) -> "Quaternion":
        c = list(comps)
        if len(c) != 4:
            raise ValueError("expected 4 components, got %d" % len(c))
        return cls(*c)

    @classmethod
    def from_text(cls, text: str) -> "Quaternion":
        """Parse the plain text form "x0 x1 x2 x3" (whitespace separated)."""
        parts = text.split()
        if len(parts) != 4:
            raise ValueError("expected 4 decimal fields, got %d" % len(parts))
        try:
            return cls(*(float(p) for p in parts))
        except ValueError as exc:
            raise ValueError("bad quaternion text %r: %s" % (text, exc)) from None

    # -- views -------------------------------------------------------------

    def as_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2, self.x3])

    @property
    def real_part(self) -> float:
        return self.x0

    @property
    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.x1, self.x2, self.x3)

    @property
    def imag_vector(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])

    @property
    def norm_sq(self) -> float:
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def __abs__(self) -> float:
        return math.sqrt(self.norm_sq)

    def to_text(self) -> str:
        """Plain text form "x0 x1 x2 x3" with round-trip precision."""
        return "%.17g %.17g %.17g %.17g" % (self.x0, self.x1, self.x2, self.x3)

    # -- algebra -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                              self.x2 + other.x2, self.x3 + other.x3)
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 + other, self.x1, self.x2, self.x3)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.x0 - other.x0, self.x1 - other.x1,
                              self.x2 - other.x2, self.x3 - other.x3)
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 - other, self.x1, self.x2, self.x3)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other - self.x0, -self.x1, -self.x2, -self.x3)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        """Hamilton product; scalars act componentwise."""
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self.x0, self.x1, self.x2, self.x3
            b0, b1, b2, b3 = other.x0, other.x1, other.x2, other.x3
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 * other, self.x1 * other,
                              self.x2 * other, self.x3 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 * other, self.x1 * other,
                              self.x2 * other, self.x3 * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 / other, self.x1 / other,
                              self.x2 / other, self.x3 / other)
        if isinstance(other, Quaternion):
            return self * other.inverse()
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        """q-bar: the real part kept, the imaginary part negated."""
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def inverse(self) -> "Quaternion":
        """Multiplicative inverse conj(q)/|q|^2; raises on zero input."""
        n2 = self.norm_sq
        if n2 == 0.0:
            raise ZeroDivisionError("non-invertible: zero quaternion")
        return Quaternion(self.x0 / n2, -self.x1 / n2, -self.x2 / n2, -self.x3 / n2)

    def __str__(self) -> str:
        return self.to_text()


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


class SliceCoords(NamedTuple):
    """Coordinates q = x + y*axis with y >= 0 and axis a unit imaginary."""

    x: float
    y: float
    axis: Quaternion

    def reassemble(self) -> Quaternion:
        return Quaternion(self.x,
                          self.y * self.axis.x1,
                          self.y * self.axis.x2,
                          self.y * self.axis.x3)


def axis(q: Quaternion) -> Quaternion:
    """Unit imaginary direction Im(q)/|Im(q)|.

    (Near-)real inputs have no preferred direction; the canonical unit i is
    returned so that downstream computations stay reproducible.
    """
    y = math.sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3)
    if y <= AXIS_EPS * (1.0 + abs(q)):
        return I
    return Quaternion(0.0, q.x1 / y, q.x2 / y, q.x3 / y)


def slice_coords(q: Quaternion) -> SliceCoords:
    """Split q into x + y*axis(q) with y = |Im(q)| >= 0."""
    y = math.sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3)
    return SliceCoords(q.x0, y, axis(q))


def orthogonal_unit(u: Quaternion) -> Quaternion:
    """Deterministic unit imaginary orthogonal to u (so the two anticommute).

    Gram-Schmidt of the fixed direction j against u, falling back to k when
    u is too close to +/-j for the projection to be well conditioned.  The
    choice is branch-stable: orthogonal_unit(i) == j and
    orthogonal_unit(j) == k exactly.
    """
    v = u.imag_vector
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("orthogonal_unit needs an imaginary direction, got a real value")
    v = v / n
    ref = np.array([0.0, 1.0, 0.0])
    if abs(v[1]) > 1.0 - _FALLBACK_GAP:
        ref = np.array([0.0, 0.0, 1.0])
    w = ref - np.dot(ref, v) * v
    w = w / np.linalg.norm(w)
    return Quaternion(0.0, w[0], w[1], w[2])


def _check_slice_basis(u: Quaternion, v: Quaternion, tol: float = 1e-10) -> None:
    if abs(u.x0) > tol or abs(v.x0) > tol:
        raise ValueError("slice basis units must be purely imaginary")
    if abs(abs(u) - 1.0) > tol or abs(abs(v) - 1.0) > tol:
        raise ValueError("slice basis units must have unit norm")
    anticomm = u * v + v * u
    if abs(anticomm) > tol:
        raise ValueError("slice basis (u, v) is not orthogonal: u*v + v*u != 0")


def decompose_basis(a: Quaternion, u: Quaternion, v: Quaternion) -> tuple[complex, complex]:
    """Write a = z + w*v with z, w in the complex plane spanned by (1, u).

    (1, u, v, u*v) is an orthonormal real basis of the quaternions whenever
    u and v are orthogonal unit imaginaries, so the coordinates are plain
    Euclidean projections.  Raises if (u, v) fail to anticommute.
    """
    _check_slice_basis(u, v)
    uv = u * v
    av = a.as_array()
    z = complex(a.x0, float(av @ u.as_array()))
    w = complex(float(av @ v.as_array()), float(av @ uv.as_array()))
    return z, w


def compose_basis(z: complex, w: complex, u: Quaternion, v: Quaternion) -> Quaternion:
    """Inverse of decompose_basis: (z.re + z.im*u) + (w.re + w.im*u)*v."""
    uv = u * v
    return Quaternion(
        z.real + z.imag * u.x0 + w.real * v.x0 + w.imag * uv.x0,
        z.imag * u.x1 + w.real * v.x1 + w.imag * uv.x1,
        z.imag * u.x2 + w.real * v.x2 + w.imag * uv.x2,
        z.imag * u.x3 + w.real * v.x3 + w.imag * uv.x3,
    )


def random_unit_imaginary(rng: np.random.Generator) -> Quaternion:
    """Uniform random point on the sphere of unit imaginaries."""
    v = rng.standard_normal(3)
    v /= np.linalg.norm(v)
    return Quaternion(0.0, v[0], v[1], v[2])


# -- componentwise helpers on (..., 4) arrays -------------------------------
#
# The scalar class above is convenient but slow in bulk; the grid and series
# code works on float arrays whose last axis holds the four components.

def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product broadcast over leading axes of (..., 4) arrays."""
    a0, a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


def conj_components(a: np.ndarray) -> np.ndarray:
    out = a.copy()
    out[..., 1:] *= -1.0
    return out

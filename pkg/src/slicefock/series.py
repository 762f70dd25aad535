"""Truncated slice-regular power series and their non-commutative algebra.

A series is a finite sum of left powers with right quaternion coefficients,
q^0*a_0 + q^1*a_1 + ... + q^N*a_N.  The star product is the coefficient
convolution (it preserves this form; the pointwise product does not), the
regular conjugate conjugates coefficients, and the star reciprocal inverts
through the real-coefficient symmetrization.  Splitting a series along a
slice yields two ordinary complex series; the extension operator rebuilds
values anywhere from those two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO, Union

import numpy as np

from .quaternions import (
    ONE,
    Quaternion,
    compose_basis,
    hamilton,
    orthogonal_unit,
    slice_coords,
)

__all__ = [
    "SliceSeries",
    "SplitPair",
    "SeriesFormatError",
    "DEGREE_CAP",
    "star_exponential",
    "pointwise_star_residual",
    "read_series",
    "parse_series",
    "write_series",
]

# Hard truncation cap for star products: entire functions have to be
# windowed somewhere, and silently growing degrees would make the grids
# quadratically slower.  Products record how many degrees they dropped.
DEGREE_CAP = 64


def _zero_tol(coeffs: np.ndarray) -> float:
    """Scale-aware threshold for treating a value of this series as zero."""
    return 1e-12 * (1.0 + float(np.abs(coeffs).max(initial=0.0)))


class SeriesFormatError(ValueError):
    """Raised by the text-format parser; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__("line %d: %s" % (line, message))
        self.line = line


@dataclass(frozen=True)
class SliceSeries:
    """Immutable truncated series with quaternion coefficients.

    ``coeffs`` has shape (degree+1, 4); row n holds the components of a_n.
    ``dropped`` is an audit counter: the number of degrees discarded when a
    star product ran past the truncation cap.
    """

    coeffs: np.ndarray
    dropped: int = 0

    def __post_init__(self):
        c = np.atleast_2d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 2 or c.shape[1] != 4 or c.shape[0] == 0:
            raise ValueError("coefficients must form a (degree+1, 4) array")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_quaternions(cls, coeffs: Iterable[Quaternion]) -> "SliceSeries":
        rows = [c.as_array() for c in coeffs]
        if not rows:
            raise ValueError("a series needs at least the degree-0 coefficient")
        return cls(np.stack(rows))

    @classmethod
    def constant(cls, a: Union[Quaternion, float]) -> "SliceSeries":
        if isinstance(a, (int, float)):
            a = Quaternion.real(a)
        return cls(a.as_array()[None, :])

    @classmethod
    def monomial(cls, degree: int, a: Quaternion = ONE) -> "SliceSeries":
        c = np.zeros((degree + 1, 4))
        c[degree] = a.as_array()
        return cls(c)

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def coefficient(self, n: int) -> Quaternion:
        if not 0 <= n <= self.degree:
            return Quaternion()
        return Quaternion.from_components(self.coeffs[n])

    def max_coeff(self) -> float:
        return float(np.linalg.norm(self.coeffs, axis=1).max())

    def __add__(self, other: "SliceSeries") -> "SliceSeries":
        n = max(self.degree, other.degree)
        c = np.zeros((n + 1, 4))
        c[: self.degree + 1] += self.coeffs
        c[: other.degree + 1] += other.coeffs
        return SliceSeries(c)

    def __sub__(self, other: "SliceSeries") -> "SliceSeries":
        return self + (-other)

    def __neg__(self) -> "SliceSeries":
        return SliceSeries(-self.coeffs)

    def scale(self, t: float) -> "SliceSeries":
        return SliceSeries(self.coeffs * float(t))

    def scale_right(self, a: Quaternion) -> "SliceSeries":
        """f * a with a constant quaternion on the right of every coefficient."""
        return SliceSeries(hamilton(self.coeffs, a.as_array()[None, :]))

    def truncate(self, degree: int) -> "SliceSeries":
        """Keep coefficients up to the given degree (at least the constant)."""
        m = max(0, min(degree, self.degree))
        return SliceSeries(self.coeffs[: m + 1])

    # -- evaluation ---------------------------------------------------------

    def eval(self, q: Quaternion) -> Quaternion:
        """Horner evaluation of sum_n q^n a_n (left powers, right coefficients)."""
        acc = Quaternion.from_components(self.coeffs[-1])
        for n in range(self.degree - 1, -1, -1):
            acc = q * acc + Quaternion.from_components(self.coeffs[n])
        return acc

    def eval_many(self, points: np.ndarray) -> np.ndarray:
        """Vectorized eval at an (M, 4) array of points; returns (M, 4)."""
        pts = np.asarray(points, dtype=float)
        acc = np.broadcast_to(self.coeffs[-1], pts.shape).copy()
        for n in range(self.degree - 1, -1, -1):
            acc = hamilton(pts, acc)
            acc += self.coeffs[n]
        return acc

    # -- star algebra --------------------------------------------------------

    def star(self, other: "SliceSeries", cap: int = DEGREE_CAP) -> "SliceSeries":
        """Star product: coefficient convolution c_n = sum_k a_k b_{n-k}.

        Truncates at min(deg f + deg g, cap) and records the dropped degrees
        in the audit field of the result.
        """
        full = self.degree + other.degree
        n = min(full, cap)
        out = np.zeros((n + 1, 4))
        for i in range(self.degree + 1):
            top = min(other.degree, n - i)
            if top < 0:
                break
            prod = hamilton(self.coeffs[i][None, :], other.coeffs[: top + 1])
            out[i: i + top + 1] += prod
        return SliceSeries(out, dropped=full - n)

    def conjugate(self) -> "SliceSeries":
        """Regular conjugate: every coefficient quaternion-conjugated."""
        c = self.coeffs.copy()
        c[:, 1:] *= -1.0
        return SliceSeries(c)

    def star_reciprocal(self, order: int) -> "SliceSeries":
        """Star inverse through the symmetrization, truncated at ``order``.

        Builds s = f * f^c (real coefficients), inverts s as a formal real
        power series by the standard recurrence, and multiplies by f^c.  The
        result r satisfies f * r = 1 + O(q^(order+1)).  Refuses when the
        constant coefficient vanishes (series inversion is impossible).
        """
        if order < 0:
            raise ValueError("order must be non-negative")
        fc = self.conjugate()
        s = self.star(fc, cap=order)
        s0 = s.coeffs[0, 0]
        if s0 <= _zero_tol(self.coeffs):
            raise ValueError("reciprocal undefined at origin: constant coefficient vanishes")
        t = np.zeros(order + 1)
        t[0] = 1.0 / s0
        for n in range(1, order + 1):
            top = min(n, s.degree)
            acc = float(np.dot(s.coeffs[1: top + 1, 0], t[n - 1:: -1][: top]))
            t[n] = -acc / s0
        tq = np.zeros((order + 1, 4))
        tq[:, 0] = t
        return SliceSeries(tq).star(fc, cap=order)

    def dilate(self, r: float) -> "SliceSeries":
        """Radial dilation f(r q): coefficient n picks up the factor r^n."""
        if not 0.0 <= r <= 1.0:
            raise ValueError("dilation factor must lie in [0, 1], got %r" % (r,))
        scale = r ** np.arange(self.degree + 1)
        return SliceSeries(self.coeffs * scale[:, None])

    # -- slice splitting ------------------------------------------------------

    def split(self, u: Quaternion) -> "SplitPair":
        """Split along the slice of u into two complex-coefficient series.

        The companion unit is orthogonal_unit(u), so the pair determines the
        series exactly: a_n = c1_n + c2_n * J in the basis (1, u, J, uJ).
        """
        if abs(u.x0) > 1e-9 or abs(u.norm_sq - 1.0) > 1e-9:
            raise ValueError("slice axis must be a unit imaginary quaternion")
        v = orthogonal_unit(u)
        uv = u * v
        c = self.coeffs
        c1 = c[:, 0] + 1j * np.sum(c * u.as_array()[None, :], axis=1)
        c2 = (np.sum(c * v.as_array()[None, :], axis=1)
              + 1j * np.sum(c * uv.as_array()[None, :], axis=1))
        return SplitPair(c1, c2, u, v)


@dataclass(frozen=True)
class SplitPair:
    """Two complex series (c1, c2) over a slice basis (axis_i, axis_j)."""

    c1: np.ndarray
    c2: np.ndarray
    axis_i: Quaternion
    axis_j: Quaternion

    def __post_init__(self):
        c1 = np.asarray(self.c1, dtype=complex).copy()
        c2 = np.asarray(self.c2, dtype=complex).copy()
        if c1.shape != c2.shape or c1.ndim != 1:
            raise ValueError("split components must be 1-D arrays of equal length")
        c1.flags.writeable = False
        c2.flags.writeable = False
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    @property
    def degree(self) -> int:
        return self.c1.shape[0] - 1

    def recombine(self) -> SliceSeries:
        """Rebuild the quaternion series: a_n = c1_n + c2_n * axis_j."""
        rows = [
            compose_basis(z, w, self.axis_i, self.axis_j).as_array()
            for z, w in zip(self.c1, self.c2)
        ]
        return SliceSeries(np.stack(rows))

    def eval_components(self, z):
        """Evaluate both complex series at z (scalar or array), by Horner."""
        z = np.asarray(z, dtype=complex)
        f1 = np.full_like(z, self.c1[-1])
        f2 = np.full_like(z, self.c2[-1])
        for n in range(self.degree - 1, -1, -1):
            f1 = f1 * z + self.c1[n]
            f2 = f2 * z + self.c2[n]
        return f1, f2

    def eval_slice(self, z: complex) -> Quaternion:
        """Value of the recombined slice function at z in the slice plane."""
        f1, f2 = self.eval_components(z)
        return compose_basis(complex(f1), complex(f2), self.axis_i, self.axis_j)

    def extend(self, q: Quaternion) -> Quaternion:
        """Slice-regular extension evaluated at an arbitrary quaternion.

        Writes q = x + y*axis(q), evaluates the slice function at x + y*u
        and its mirror x - y*u, and averages the two with the projection
        factors (1 -+ axis(q)*u)/2.  On the slice of u this reduces to plain
        evaluation; elsewhere it reproduces the unique slice-regular series
        through the slice values.
        """
        x, y, iq = slice_coords(q)
        z = complex(x, y)
        fz = self.eval_slice(z)
        fzbar = self.eval_slice(z.conjugate())
        u = self.axis_i
        half = Quaternion.real(0.5)
        return half * ((ONE - iq * u) * fz + (ONE + iq * u) * fzbar)


def star_exponential(w: Quaternion, alpha: float, degree: int) -> SliceSeries:
    """Exponential-type kernel section: coefficients (alpha*conj(w))^n / n!.

    Evaluating the result at q gives the degree-truncated sum of
    q^n (alpha conj(w))^n / n!, the Gaussian reproducing kernel in its
    series form.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    base = w.conjugate() * alpha
    rows = np.zeros((degree + 1, 4))
    acc = ONE
    rows[0] = acc.as_array()
    for n in range(1, degree + 1):
        acc = acc * base / n
        rows[n] = acc.as_array()
    return SliceSeries(rows)


def pointwise_star_residual(f: SliceSeries, g: SliceSeries, q: Quaternion) -> float:
    """Residual of the pointwise description of the star product at q.

    When f(q) = 0 (within a scale-aware threshold) the star product must
    vanish at q, so the residual is |(f*g)(q)|.  Otherwise it is the gap
    between (f*g)(q) and f(q) * g(f(q)^-1 q f(q)).
    """
    fq = f.eval(q)
    prod = f.star(g).eval(q)
    if abs(fq) <= _zero_tol(f.coeffs):
        return abs(prod)
    conjugated = fq.inverse() * q * fq
    return abs(prod - fq * g.eval(conjugated))


# -- plain text format --------------------------------------------------------
#
# Header "slice-series v1 N=<deg>" then one line per degree:
# "n x0 x1 x2 x3".  Parsers reject duplicate or missing degrees.

_HEADER_PREFIX = "slice-series v1 N="


def write_series(f: SliceSeries, dest: Union[str, TextIO]) -> None:
    lines = ["%s%d" % (_HEADER_PREFIX, f.degree)]
    for n in range(f.degree + 1):
        lines.append("%d %s" % (n, f.coefficient(n).to_text()))
    text = "\n".join(lines) + "\n"
    if isinstance(dest, str):
        with open(dest, "w") as fh:
            fh.write(text)
    else:
        dest.write(text)


def parse_series(text: str) -> SliceSeries:
    lines = text.splitlines()
    if not lines:
        raise SeriesFormatError(1, "empty input, expected header %r" % _HEADER_PREFIX)
    header = lines[0].strip()
    if not header.startswith(_HEADER_PREFIX):
        raise SeriesFormatError(1, "bad header %r, expected %r" % (header, _HEADER_PREFIX + "<deg>"))
    try:
        deg = int(header[len(_HEADER_PREFIX):])
    except ValueError:
        raise SeriesFormatError(1, "bad truncation degree in header %r" % header) from None
    if deg < 0:
        raise SeriesFormatError(1, "negative truncation degree %d" % deg)
    coeffs = np.zeros((deg + 1, 4))
    seen = set()
    row = 0
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise SeriesFormatError(lineno, "expected 'n x0 x1 x2 x3', got %r" % raw)
        try:
            n = int(parts[0])
        except ValueError:
            raise SeriesFormatError(lineno, "bad degree field %r" % parts[0]) from None
        if not 0 <= n <= deg:
            raise SeriesFormatError(lineno, "degree %d outside 0..%d" % (n, deg))
        if n in seen:
            raise SeriesFormatError(lineno, "duplicate degree %d" % n)
        try:
            coeffs[n] = [float(p) for p in parts[1:]]
        except ValueError:
            raise SeriesFormatError(lineno, "bad coefficient on line %r" % raw) from None
        seen.add(n)
        row += 1
    missing = sorted(set(range(deg + 1)) - seen)
    if missing:
        raise SeriesFormatError(len(lines) + 1, "missing degrees %s" % missing)
    return SliceSeries(coeffs)


def read_series(path: str) -> SliceSeries:
    with open(path) as fh:
        return parse_series(fh.read())

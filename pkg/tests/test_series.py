from __future__ import annotations

import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slicefock import (
    DEGREE_CAP,
    I,
    J,
    K,
    ONE,
    Quaternion,
    SeriesFormatError,
    SliceSeries,
    parse_series,
    pointwise_star_residual,
    star_exponential,
    write_series,
)
from slicefock.quaternions import random_unit_imaginary

from conftest import ball_point, make_series

coeff_lists = st.lists(
    st.tuples(*[st.floats(min_value=-3, max_value=3, allow_nan=False)] * 4),
    min_size=1, max_size=8,
)


def series_from(rows) -> SliceSeries:
    return SliceSeries(np.array(rows, dtype=float))


# -- evaluation -------------------------------------------------------------

def test_eval_examples():
    f = SliceSeries.from_quaternions([ONE, I])
    assert f.eval(J) == Quaternion(1, 0, 0, -1)        # 1 + j*i = 1 - k
    q2 = SliceSeries.monomial(2)
    assert q2.eval(Quaternion(1, 1, 0, 0)) == Quaternion(0, 2, 0, 0)


@settings(max_examples=60, deadline=None)
@given(coeff_lists)
def test_eval_at_zero_is_constant_coefficient(rows):
    f = series_from(rows)
    assert f.eval(Quaternion()) == f.coefficient(0)


def test_eval_many_matches_scalar(rng):
    f = make_series(rng, 7)
    pts = rng.standard_normal((40, 4)) * 0.6
    vals = f.eval_many(pts)
    for k in range(40):
        expect = f.eval(Quaternion.from_components(pts[k]))
        assert np.allclose(vals[k], expect.as_array(), atol=1e-13)


def test_addition_is_pointwise(rng):
    f = make_series(rng, 5)
    g = make_series(rng, 3)
    q = ball_point(rng)
    assert abs((f + g).eval(q) - (f.eval(q) + g.eval(q))) < 1e-13


# -- star product -------------------------------------------------------------

def test_star_monomials_encode_noncommutativity():
    qi = SliceSeries.monomial(1, I)
    qj = SliceSeries.monomial(1, J)
    assert np.allclose(qi.star(qj).coeffs[2], K.as_array())
    assert np.allclose(qj.star(qi).coeffs[2], (-K).as_array())


def test_star_unit():
    one = SliceSeries.constant(ONE)
    f = series_from([(1, 2, 3, 4), (0.5, 0, -1, 0)])
    assert np.array_equal(one.star(f).coeffs, f.coeffs)
    assert np.array_equal(f.star(one).coeffs, f.coeffs)


def test_star_truncation_audit():
    f = SliceSeries.monomial(40)
    g = SliceSeries.monomial(40)
    prod = f.star(g)
    assert prod.degree == DEGREE_CAP
    assert prod.dropped == 80 - DEGREE_CAP
    small = SliceSeries.monomial(3).star(SliceSeries.monomial(2))
    assert small.dropped == 0 and small.degree == 5


@settings(max_examples=40, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_star_associative_and_distributive(ra, rb, rc):
    f, g, h = series_from(ra), series_from(rb), series_from(rc)
    left = f.star(g).star(h)
    right = f.star(g.star(h))
    assert left.degree == right.degree
    assert np.allclose(left.coeffs, right.coeffs, atol=1e-11)
    lhs = f.star(g + h)
    rhs = f.star(g) + f.star(h)
    assert np.allclose(lhs.coeffs, rhs.coeffs, atol=1e-12)


def test_star_matches_pointwise_product_on_a_slice(rng):
    # series with coefficients in the slice of i commute there
    rows = rng.standard_normal((5, 4))
    rows[:, 2:] = 0.0
    f = SliceSeries(rows)
    g = SliceSeries(np.roll(rows, 1, axis=0))
    z = Quaternion(0.3, 0.7, 0, 0)
    assert abs(f.star(g).eval(z) - f.eval(z) * g.eval(z)) < 1e-13


# -- regular conjugate ---------------------------------------------------------

def test_conjugate_examples():
    f = SliceSeries.monomial(1, I)
    assert np.array_equal(f.conjugate().coeffs, SliceSeries.monomial(1, -I).coeffs)
    real = series_from([(1, 0, 0, 0), (2, 0, 0, 0)])
    assert np.array_equal(real.conjugate().coeffs, real.coeffs)
    f = SliceSeries.from_quaternions([I, J])          # i + q j
    sym = f.star(f.conjugate())
    expect = np.zeros((3, 4))
    expect[0, 0] = 1.0
    expect[2, 0] = 1.0
    assert np.allclose(sym.coeffs, expect, atol=1e-15)


def test_conjugate_is_involution_and_antihomomorphism(rng):
    f = make_series(rng, 6)
    g = make_series(rng, 4)
    assert np.array_equal(f.conjugate().conjugate().coeffs, f.coeffs)
    lhs = f.star(g).conjugate()
    rhs = g.conjugate().star(f.conjugate())
    assert np.allclose(lhs.coeffs, rhs.coeffs, atol=1e-12)


def test_symmetrization_is_real(rng):
    for _ in range(50):
        f = make_series(rng, int(rng.integers(0, 11)))
        sym = f.star(f.conjugate())
        assert np.abs(sym.coeffs[:, 1:]).max() <= 1e-13


# -- star reciprocal -----------------------------------------------------------

def test_reciprocal_of_one_is_one():
    one = SliceSeries.constant(ONE)
    rec = one.star_reciprocal(5)
    expect = np.zeros((6, 4))
    expect[0, 0] = 1.0
    assert np.allclose(rec.coeffs, expect, atol=1e-15)


def test_reciprocal_geometric_series(rng):
    a = Quaternion.from_components(rng.standard_normal(4) * 0.4)
    f = SliceSeries.from_quaternions([ONE, -a])       # 1 - q a
    rec = f.star_reciprocal(5)
    acc = ONE
    for n in range(6):
        assert abs(rec.coefficient(n) - acc) < 1e-12
        acc = acc * a
    resid = f.star(rec, cap=5).coeffs.copy()
    resid[0, 0] -= 1.0
    assert np.abs(resid).max() < 1e-12


def test_reciprocal_example_i_plus_qj():
    f = SliceSeries.from_quaternions([I, J])
    rec = f.star_reciprocal(4)
    resid = f.star(rec, cap=4).coeffs.copy()
    resid[0, 0] -= 1.0
    assert np.abs(resid).max() <= 1e-12


def test_reciprocal_requires_nonzero_constant():
    f = SliceSeries.monomial(1, I)
    with pytest.raises(ValueError, match="reciprocal undefined"):
        f.star_reciprocal(4)


def test_reciprocal_residual_contract(rng):
    for _ in range(60):
        f = make_series(rng, 10)
        while abs(f.coefficient(0)) < 0.1:
            f = make_series(rng, 10)
        rec = f.star_reciprocal(10)
        resid = f.star(rec, cap=10).coeffs.copy()
        resid[0, 0] -= 1.0
        scale = 1.0 + float(np.linalg.norm(rec.coeffs, axis=1).max())
        assert np.abs(resid).max() <= 1e-10 * scale


# -- pointwise description of the star product ---------------------------------

def test_pointwise_zero_branch():
    g = series_from([(0.3, 1, 0, 2), (1, 0, 0, 0), (0, 0.5, 0.5, 0)])
    f = SliceSeries.from_quaternions([ONE, -ONE])     # 1 - q, vanishes at 1
    assert pointwise_star_residual(f, g, ONE) <= 1e-12


def test_pointwise_real_coefficients_on_slice(rng):
    rows_f = np.zeros((4, 4)); rows_f[:, 0] = rng.standard_normal(4)
    rows_g = np.zeros((5, 4)); rows_g[:, 0] = rng.standard_normal(5)
    f, g = SliceSeries(rows_f), SliceSeries(rows_g)
    q = Quaternion(0.4, 0.8, 0, 0)
    assert pointwise_star_residual(f, g, q) <= 1e-12


def test_pointwise_random_triples(rng):
    for _ in range(100):
        f = make_series(rng, 4)
        g = make_series(rng, 4)
        q = ball_point(rng)
        assert pointwise_star_residual(f, g, q) <= 1e-10


def test_pointwise_engineered_zero(rng):
    for _ in range(20):
        q0 = ball_point(rng)
        f = SliceSeries.from_quaternions([-q0, ONE]).star(make_series(rng, 3))
        g = make_series(rng, 4)
        assert pointwise_star_residual(f, g, q0) <= 1e-11


# -- splitting and extension -----------------------------------------------------

def test_split_real_coefficients():
    rows = np.zeros((4, 4))
    rows[:, 0] = [1.0, -2.0, 0.5, 3.0]
    f = SliceSeries(rows)
    pair = f.split(I)
    assert np.allclose(pair.c1, rows[:, 0])
    assert np.abs(pair.c2).max() == 0.0


def test_split_constant_example():
    f = SliceSeries.constant(Quaternion(1, 1, 1, 1))
    pair = f.split(I)
    assert pair.c1[0] == 1 + 1j and pair.c2[0] == 1 + 1j


def test_split_monomial_k():
    f = SliceSeries.monomial(1, K)
    pair = f.split(I)
    assert pair.c1[1] == 0 and pair.c2[1] == 1j       # k = i j


def test_split_roundtrip_axes_bit_exact(rng):
    f = make_series(rng, 9)
    for u in (I, J, K):
        assert np.array_equal(f.split(u).recombine().coeffs, f.coeffs)


def test_split_roundtrip_random_axes(rng):
    for _ in range(100):
        f = make_series(rng, int(rng.integers(0, 11)))
        u = random_unit_imaginary(rng)
        back = f.split(u).recombine()
        tol = 1e-14 * (1.0 + np.abs(f.coeffs).max())
        assert np.abs(back.coeffs - f.coeffs).max() <= tol


def test_extend_real_point_gives_slice_value(rng):
    f = make_series(rng, 6)
    pair = f.split(random_unit_imaginary(rng))
    x = 0.37
    assert abs(pair.extend(Quaternion.real(x)) - f.eval(Quaternion.real(x))) < 1e-13


def test_extend_square_example():
    f = SliceSeries.monomial(2)
    pair = f.split(I)
    q = Quaternion(1, 0, 1, 0)
    assert abs(pair.extend(q) - Quaternion(0, 0, 2, 0)) < 1e-14


def test_extension_equals_eval(rng):
    for _ in range(40):
        f = make_series(rng, int(rng.integers(0, 7)))
        pair = f.split(random_unit_imaginary(rng))
        for _ in range(10):
            q = ball_point(rng)
            assert abs(pair.extend(q) - f.eval(q)) <= 1e-12


# -- dilation ---------------------------------------------------------------------

def test_dilate_examples(rng):
    f = make_series(rng, 5)
    assert np.array_equal(f.dilate(1.0).coeffs, f.coeffs)
    assert np.allclose(f.dilate(0.0).coeffs[1:], 0.0)
    assert np.array_equal(f.dilate(0.0).coeffs[0], f.coeffs[0])
    g = series_from([(1, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 0)])
    assert np.allclose(g.dilate(0.5).coeffs[:, 0], [1.0, 0.5, 0.25])


def test_dilate_rejects_bad_factor(rng):
    f = make_series(rng, 2)
    with pytest.raises(ValueError):
        f.dilate(1.5)
    with pytest.raises(ValueError):
        f.dilate(-0.1)


def test_dilate_matches_scaled_argument(rng):
    f = make_series(rng, 8)
    r = 0.73
    q = ball_point(rng)
    assert abs(f.dilate(r).eval(q) - f.eval(q * r)) < 1e-12


# -- exponential series ------------------------------------------------------------

def test_star_exponential_at_zero_weight():
    f = star_exponential(Quaternion(), 1.0, 10)
    assert f.coefficient(0) == ONE
    assert np.abs(f.coeffs[1:]).max() == 0.0


def test_star_exponential_real_case():
    w = Quaternion.real(0.8)
    f = star_exponential(w, 1.3, 30)
    x = 0.9
    val = f.eval(Quaternion.real(x))
    assert abs(val.x0 - math.exp(1.3 * x * 0.8)) < 1e-12
    assert abs(val.imag) == 0.0


def test_star_exponential_termwise_oracle():
    # direct power-sum accumulation, independent of Horner
    w, q, alpha, deg = J, I, 1.0, 20
    f = star_exponential(w, alpha, deg)
    total = Quaternion()
    qn = ONE
    base = w.conjugate() * alpha
    bn = ONE
    fact = 1.0
    for n in range(deg + 1):
        if n > 0:
            qn = qn * q
            bn = bn * base
            fact *= n
        total = total + qn * bn / fact
    assert abs(f.eval(q) - total) < 1e-13


def test_star_exponential_validates():
    with pytest.raises(ValueError):
        star_exponential(ONE, -1.0, 4)
    with pytest.raises(ValueError):
        star_exponential(ONE, 1.0, -2)


# -- text format --------------------------------------------------------------------

def test_format_roundtrip(rng):
    f = make_series(rng, 6)
    buf = io.StringIO()
    write_series(f, buf)
    back = parse_series(buf.getvalue())
    assert np.array_equal(back.coeffs, f.coeffs)


def test_format_accepts_any_line_order():
    text = "slice-series v1 N=1\n1 0 1 0 0\n0 1 0 0 0\n"
    f = parse_series(text)
    assert f.coefficient(0) == ONE and f.coefficient(1) == I


def test_format_rejects_duplicate_degree():
    text = "slice-series v1 N=1\n0 1 0 0 0\n0 2 0 0 0\n"
    with pytest.raises(SeriesFormatError) as err:
        parse_series(text)
    assert err.value.line == 3


def test_format_rejects_missing_degree():
    text = "slice-series v1 N=2\n0 1 0 0 0\n2 1 0 0 0\n"
    with pytest.raises(SeriesFormatError, match="missing degrees"):
        parse_series(text)


def test_format_rejects_malformed_lines():
    with pytest.raises(SeriesFormatError) as err:
        parse_series("slice-series v1 N=0\n0 1 0 0\n")
    assert err.value.line == 2
    with pytest.raises(SeriesFormatError):
        parse_series("not a header\n")
    with pytest.raises(SeriesFormatError):
        parse_series("slice-series v1 N=x\n")
    with pytest.raises(SeriesFormatError) as err:
        parse_series("slice-series v1 N=0\n0 1 0 0 spam\n")
    assert err.value.line == 2

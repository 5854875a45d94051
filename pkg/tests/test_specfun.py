"""Modified-Bessel wrappers against an independent mpmath oracle."""

import math

import mpmath
import numpy as np
import pytest

from casimir_cylinders import specfun
from casimir_cylinders.errors import DomainError

mpmath.mp.dps = 30

# oracle values frozen from 30-digit mpmath evaluations
I_1_1 = 0.56515910399248503
I_0_1 = 1.2660658777520083
K_0_1 = 0.42102443824070833
K_1_1 = 0.60190723019723457
K_0_1EM4 = 9.3262719134502749


def test_frozen_values():
    assert specfun.bessel_i(0, 0.0) == 1.0
    assert specfun.bessel_i(1, 1.0) == pytest.approx(I_1_1, rel=1e-14)
    assert specfun.bessel_i(0, 1.0) == pytest.approx(I_0_1, rel=1e-14)
    assert specfun.bessel_k(0, 1.0) == pytest.approx(K_0_1, rel=1e-14)
    assert specfun.bessel_k(1, 1.0) == pytest.approx(K_1_1, rel=1e-14)
    assert specfun.bessel_k(0, 1e-4) == pytest.approx(K_0_1EM4, rel=1e-13)


def test_small_argument_log_form():
    # K_0(x) -> -ln(x/2) - gamma as x -> 0
    x = 1e-4
    limit = -math.log(x / 2.0) - float(mpmath.euler)
    assert specfun.bessel_k(0, x) == pytest.approx(limit, rel=1e-8)


def test_against_mpmath_grid():
    xs = np.logspace(-6, math.log10(50.0), 25)
    for n in (0, 1, 2, 5, 10):
        for x in xs:
            assert specfun.bessel_i(n, x) == pytest.approx(
                float(mpmath.besseli(n, x)), rel=1e-12)
            assert specfun.bessel_k(n, x) == pytest.approx(
                float(mpmath.besselk(n, x)), rel=1e-12)


def test_scaled_against_mpmath_large_x():
    # unscaled overflows near x ~ 700; the scaled forms must not
    for n in (0, 2, 7):
        for x in (50.0, 300.0, 700.0):
            i_ref = float(mpmath.besseli(n, x) * mpmath.exp(-x))
            k_ref = float(mpmath.besselk(n, x) * mpmath.exp(x))
            assert specfun.bessel_i_scaled(n, x) == pytest.approx(i_ref, rel=1e-12)
            assert specfun.bessel_k_scaled(n, x) == pytest.approx(k_ref, rel=1e-12)


def test_positive_on_domain(rng):
    ns = rng.integers(0, 11, size=200)
    xs = 10.0 ** rng.uniform(-6, math.log10(50.0), size=200)
    for n, x in zip(ns, xs):
        assert specfun.bessel_i(int(n), x) > 0.0
        assert specfun.bessel_k(int(n), x) > 0.0


def test_wronskian_property(rng):
    # I_n K'_n - I'_n K_n = -1/x
    ns = rng.integers(0, 11, size=1000)
    xs = 10.0 ** rng.uniform(-6, math.log10(50.0), size=1000)
    for n, x in zip(ns, xs):
        n = int(n)
        w = (specfun.bessel_i(n, x) * specfun.bessel_deriv("K", n, x)
             - specfun.bessel_deriv("I", n, x) * specfun.bessel_k(n, x))
        assert w == pytest.approx(-1.0 / x, rel=1e-12)


def test_recurrence_consistency():
    for n in (1, 2, 4, 8):
        for x in np.linspace(0.6 * n, 40.0, 12):
            lhs = specfun.bessel_i(n + 1, x)
            rhs = specfun.bessel_i(n - 1, x) - (2.0 * n / x) * specfun.bessel_i(n, x)
            assert lhs == pytest.approx(rhs, rel=1e-10)


def test_scaled_unscaled_consistency(rng):
    xs = 10.0 ** rng.uniform(-3, math.log10(40.0), size=50)
    for n in (0, 1, 3):
        for x in xs:
            assert specfun.bessel_i(n, x) == pytest.approx(
                specfun.bessel_i_scaled(n, x) * math.exp(x), rel=1e-13)
            assert specfun.bessel_k(n, x) == pytest.approx(
                specfun.bessel_k_scaled(n, x) * math.exp(-x), rel=1e-13)


def test_derivative_identities():
    assert specfun.bessel_deriv("I", 0, 1.0) == pytest.approx(I_1_1, rel=1e-14)
    assert specfun.bessel_deriv("K", 0, 1.0) == pytest.approx(-K_1_1, rel=1e-14)
    # recurrence value for I'_1(2)
    expect = 0.5 * (specfun.bessel_i(0, 2.0) + specfun.bessel_i(2, 2.0))
    assert specfun.bessel_deriv("I", 1, 2.0) == expect


def test_derivative_against_finite_difference():
    # independent check of the recurrence derivatives
    h = 1e-6
    for kind, fn in (("I", mpmath.besseli), ("K", mpmath.besselk)):
        for n in (0, 1, 3):
            for x in (0.5, 2.0, 10.0):
                fd = float((fn(n, x + h) - fn(n, x - h)) / (2 * h))
                assert specfun.bessel_deriv(kind, n, x) == pytest.approx(fd, rel=1e-8)


def test_scaled_derivatives():
    for n in (0, 2):
        for x in (1.0, 30.0):
            assert specfun.bessel_deriv_scaled("I", n, x) == pytest.approx(
                specfun.bessel_deriv("I", n, x) * math.exp(-x), rel=1e-12)
            assert specfun.bessel_deriv_scaled("K", n, x) == pytest.approx(
                specfun.bessel_deriv("K", n, x) * math.exp(x), rel=1e-12)


def test_negative_order_folding():
    assert specfun.bessel_i(-3, 2.5) == specfun.bessel_i(3, 2.5)
    assert specfun.bessel_k(-2, 1.3) == specfun.bessel_k(2, 1.3)
    assert specfun.bessel_deriv("I", -1, 2.0) == specfun.bessel_deriv("I", 1, 2.0)


def test_array_broadcasting():
    xs = np.array([0.3, 1.0, 4.5])
    vec = specfun.bessel_i(2, xs)
    assert vec.shape == xs.shape
    for x, v in zip(xs, vec):
        assert v == specfun.bessel_i(2, float(x))


def test_domain_errors():
    with pytest.raises(DomainError):
        specfun.bessel_k(0, 0.0)
    with pytest.raises(DomainError):
        specfun.bessel_k(0, -1.0)
    with pytest.raises(DomainError):
        specfun.bessel_i(0, -1.0)
    with pytest.raises(DomainError):
        specfun.bessel_i(0, math.nan)
    with pytest.raises(DomainError):
        specfun.bessel_i(0.5, 1.0)
    with pytest.raises(DomainError):
        specfun.bessel_deriv("J", 0, 1.0)
    with pytest.raises(DomainError):
        specfun.bessel_deriv("I", 1, 0.0)

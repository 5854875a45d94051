"""Scattering amplitudes of a single cylinder.

Expected numbers were frozen from a 30-digit mpmath evaluation of the
Bessel-function ratios; the module under test uses the scipy backend.
"""

import numpy as np
import pytest

from casimir_cylinders.errors import DomainError
from casimir_cylinders.scatter import (
    t_dirichlet,
    t_dirichlet_scaled,
    t_em_block,
    t_neumann,
    t_neumann_scaled,
)

# frozen mpmath references (30 dps)
T_D_0_SMALL = -0.10722398100550853      # t_D(n=0, pR=1e-4)
T_N_0_Z2 = 11.372586609248592           # t_N(n=0, pR=2)
T_D_0_SCALED_50 = -0.3199057547934506   # e^{-2 pR} t_D at pR=50


def test_frozen_dirichlet_small_argument():
    got = t_dirichlet(0, 1.0, 1e-4)
    assert got == pytest.approx(T_D_0_SMALL, rel=1e-12)
    # leading logarithm: 1/ln(pR) = -0.108574, off by ~1.3% at this radius
    assert got == pytest.approx(1.0 / np.log(1e-4), rel=0.02)


def test_frozen_neumann_order_unity():
    assert t_neumann(0, 2.0, 1.0) == pytest.approx(T_N_0_Z2, rel=1e-12)


def test_frozen_scaled_large_argument():
    assert t_dirichlet_scaled(0, 50.0, 1.0) == pytest.approx(
        T_D_0_SCALED_50, rel=1e-12
    )


def test_signs(rng):
    # Dirichlet amplitudes are negative, Neumann positive, for every order
    for _ in range(1000):
        n = int(rng.integers(-6, 7))
        z = float(10.0 ** rng.uniform(-6, 2))
        assert t_dirichlet_scaled(n, z, 1.0) < 0.0
        assert t_neumann_scaled(n, z, 1.0) > 0.0


def test_small_radius_dirichlet_log_limit():
    # t_D(0) ln(pR) -> 1, but only logarithmically: the subleading term is
    # O(1/ln), so even pR=1e-6 sits ~8e-3 away.  Assert the relaxed bound and
    # that shrinking the radius further moves the product toward 1.
    prod6 = t_dirichlet(0, 1.0, 1e-6) * np.log(1e-6)
    prod12 = t_dirichlet(0, 1.0, 1e-12) * np.log(1e-12)
    assert prod6 == pytest.approx(1.0, abs=1e-2)
    assert abs(prod12 - 1.0) < abs(prod6 - 1.0)
    assert prod12 == pytest.approx(0.99582182889783591, rel=1e-10)


def test_small_radius_neumann_quadratic():
    # t_N -> (pR)^2/2 for |n| <= 1
    for n in (0, 1, -1):
        got = t_neumann(n, 1.0, 0.01)
        assert got == pytest.approx(0.5 * 0.01**2, rel=1e-3)


def test_dirichlet_small_z_scaling():
    # higher orders scale as z^{2n}: doubling z multiplies t_D(1) by ~4
    ratio = t_dirichlet(1, 1.0, 0.02) / t_dirichlet(1, 1.0, 0.01)
    assert ratio == pytest.approx(4.0, rel=0.01)


def test_order_symmetry(rng):
    for _ in range(200):
        n = int(rng.integers(1, 8))
        z = float(10.0 ** rng.uniform(-4, 1.5))
        assert t_dirichlet(n, z, 1.0) == t_dirichlet(-n, z, 1.0)
        assert t_neumann(n, z, 1.0) == t_neumann(-n, z, 1.0)


def test_scaled_unscaled_consistency():
    for n in (0, 2, 5):
        for z in (0.3, 1.0, 7.0):
            expected = t_dirichlet(n, z, 1.0) * np.exp(-2.0 * z)
            assert t_dirichlet_scaled(n, z, 1.0) == pytest.approx(
                expected, rel=1e-13
            )
            expected = t_neumann(n, z, 1.0) * np.exp(-2.0 * z)
            assert t_neumann_scaled(n, z, 1.0) == pytest.approx(
                expected, rel=1e-13
            )


def test_radius_momentum_product():
    # amplitudes depend on p and R only through pR
    assert t_dirichlet(2, 4.0, 0.25) == pytest.approx(
        t_dirichlet(2, 1.0, 1.0), rel=1e-14
    )
    assert t_neumann_scaled(1, 10.0, 0.3) == pytest.approx(
        t_neumann_scaled(1, 3.0, 1.0), rel=1e-14
    )


def test_em_block_structure():
    blk = t_em_block(0, 1.0, 0.5)
    assert blk.shape == (2, 2)
    assert blk[0, 1] == 0.0 and blk[1, 0] == 0.0
    # electric channel first (Dirichlet), magnetic second (Neumann)
    assert blk[0, 0] == pytest.approx(t_dirichlet(0, 1.0, 0.5), rel=1e-14)
    assert blk[1, 1] == pytest.approx(t_neumann(0, 1.0, 0.5), rel=1e-14)
    blk2 = t_em_block(2, 1.0, 0.5)
    assert blk2[0, 0] == pytest.approx(t_dirichlet(2, 1.0, 0.5), rel=1e-14)
    assert blk2[1, 1] == pytest.approx(t_neumann(2, 1.0, 0.5), rel=1e-14)


def test_array_momentum():
    p = np.array([0.5, 1.0, 2.0, 8.0])
    got = t_dirichlet_scaled(1, p, 0.7)
    want = [t_dirichlet_scaled(1, float(x), 0.7) for x in p]
    np.testing.assert_allclose(got, want, rtol=1e-14)
    got = t_neumann_scaled(3, p, 0.7)
    want = [t_neumann_scaled(3, float(x), 0.7) for x in p]
    np.testing.assert_allclose(got, want, rtol=1e-14)


def test_unscaled_overflow_guard():
    with pytest.raises(DomainError):
        t_dirichlet(0, 400.0, 1.0)
    with pytest.raises(DomainError):
        t_neumann(0, 1.0, 400.0)
    # the scaled forms stay finite far beyond that point
    assert np.isfinite(t_dirichlet_scaled(0, 1e4, 1.0))
    assert np.isfinite(t_neumann_scaled(0, 1e4, 1.0))


def test_validation_errors():
    with pytest.raises(DomainError):
        t_dirichlet(0, -1.0, 1.0)
    with pytest.raises(DomainError):
        t_dirichlet(0, 0.0, 1.0)
    with pytest.raises(DomainError):
        t_neumann(0, 1.0, -2.0)
    with pytest.raises(DomainError):
        t_dirichlet(0, np.inf, 1.0)
    with pytest.raises(DomainError):
        t_em_block(0, np.nan, 1.0)

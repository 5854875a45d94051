"""Scattering amplitudes of a single cylinder in the rotating-wave basis.

For a scalar field with imaginary-frequency radial wavenumber p and cylinder
radius R the reflection amplitudes in the angular-momentum channel n are

    Dirichlet:  t^D_n(p, R) = - I_n(pR) / K_n(pR)          (< 0)
    Neumann:    t^N_n(p, R) = - I'_n(pR) / K'_n(pR)        (> 0)

and the perfect-metal amplitude is diagonal in the two vector harmonics,
``diag(t^D, t^N)`` in (electric, magnetic) ordering: the electric harmonic
(no axial magnetic field) reflects like Dirichlet, the magnetic one like
Neumann.

The bare amplitudes grow like e^{2pR}; the ``*_scaled`` variants return
t * e^{-2pR}, which is what the round-trip assembly consumes after folding
the factor into the translation exponentials. ``x`` arguments vectorize.
"""

from __future__ import annotations

import numpy as np

from . import specfun
from .errors import DomainError

__all__ = [
    "t_dirichlet",
    "t_neumann",
    "t_em_block",
    "t_dirichlet_scaled",
    "t_neumann_scaled",
]

# 2*p*R beyond this would overflow the unscaled amplitude
_MAX_UNSCALED_EXPONENT = 700.0


def _z(p, R):
    p = np.asarray(p, dtype=float)
    if not np.all(np.isfinite(p)) or np.any(p <= 0.0):
        raise DomainError("radial wavenumber p must be finite and > 0")
    if not (np.isfinite(R) and R > 0.0):
        raise DomainError("radius R must be finite and > 0")
    z = p * R
    return z if z.ndim else float(z)


def t_dirichlet_scaled(n: int, p, R):
    """e^{-2pR} t^D_n(p, R); safe for arbitrarily large pR."""
    z = _z(p, R)
    return -specfun.bessel_i_scaled(n, z) / specfun.bessel_k_scaled(n, z)


def t_neumann_scaled(n: int, p, R):
    """e^{-2pR} t^N_n(p, R); safe for arbitrarily large pR."""
    z = _z(p, R)
    num = specfun.bessel_deriv_scaled("I", n, z)
    den = specfun.bessel_deriv_scaled("K", n, z)
    return -num / den


def t_dirichlet(n: int, p, R):
    """Dirichlet reflection amplitude; always negative."""
    z = _z(p, R)
    if np.any(np.asarray(2.0 * z) > _MAX_UNSCALED_EXPONENT):
        raise DomainError(
            "unscaled amplitude overflows for 2*p*R > 700; use t_dirichlet_scaled"
        )
    return t_dirichlet_scaled(n, p, R) * np.exp(2.0 * z)


def t_neumann(n: int, p, R):
    """Neumann reflection amplitude; always positive."""
    z = _z(p, R)
    if np.any(np.asarray(2.0 * z) > _MAX_UNSCALED_EXPONENT):
        raise DomainError(
            "unscaled amplitude overflows for 2*p*R > 700; use t_neumann_scaled"
        )
    return t_neumann_scaled(n, p, R) * np.exp(2.0 * z)


def t_em_block(n: int, p, R):
    """Perfect-metal amplitude, diagonal 2x2 in (electric, magnetic) order."""
    return np.diag([t_dirichlet(n, p, R), t_neumann(n, p, R)])

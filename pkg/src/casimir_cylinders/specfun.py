"""Modified Bessel functions of integer order.

Thin validated wrappers around scipy.special with the sign/order conventions
used by the scattering code fixed in one place:

* orders are integers, negative orders fold via I_{-n} = I_n, K_{-n} = K_n;
* ``bessel_i`` accepts x >= 0, ``bessel_k`` requires x > 0;
* exponentially scaled variants (e^{-x} I_n, e^{+x} K_n) are exposed for
  arguments where the bare functions over/underflow;
* first derivatives come from the two-term recurrences
  I'_n = (I_{n-1} + I_{n+1})/2 and K'_n = -(K_{n-1} + K_{n+1})/2.

All functions accept scalars or ndarrays in ``x`` and broadcast like the
underlying scipy routines.
"""

from __future__ import annotations

import numpy as np
from scipy import special as _sp

from .errors import DomainError

__all__ = [
    "bessel_i",
    "bessel_k",
    "bessel_i_scaled",
    "bessel_k_scaled",
    "bessel_deriv",
    "bessel_deriv_scaled",
]


def _check_order(n) -> int:
    if not isinstance(n, (int, np.integer)):
        raise DomainError(f"order must be an integer, got {n!r}")
    return abs(int(n))


def _check_x(x, *, positive: bool):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    if positive:
        if np.any(arr <= 0.0):
            raise DomainError("argument must be > 0 for K-type functions")
    elif np.any(arr < 0.0):
        raise DomainError("argument must be >= 0 for I-type functions")
    return arr if arr.ndim else float(arr)


def bessel_i(n: int, x):
    """I_n(x) for integer n and x >= 0."""
    n = _check_order(n)
    x = _check_x(x, positive=False)
    return _sp.iv(n, x)


def bessel_k(n: int, x):
    """K_n(x) for integer n and x > 0."""
    n = _check_order(n)
    x = _check_x(x, positive=True)
    return _sp.kv(n, x)


def bessel_i_scaled(n: int, x):
    """e^{-x} I_n(x); stays representable for large x."""
    n = _check_order(n)
    x = _check_x(x, positive=False)
    return _sp.ive(n, x)


def bessel_k_scaled(n: int, x):
    """e^{+x} K_n(x); stays representable for large x."""
    n = _check_order(n)
    x = _check_x(x, positive=True)
    return _sp.kve(n, x)


def bessel_deriv(kind: str, n: int, x):
    """d/dx of I_n or K_n via the two-term recurrence.

    @param kind: "I" or "K"
    @param n: integer order (negative orders fold by symmetry)
    @param x: argument; x > 0 for both kinds (the K recurrence needs it, and
        I'_n at 0 is only finite for |n| != 1 -- callers needing x = 0 can use
        the series directly)
    """
    n = _check_order(n)
    x = _check_x(x, positive=True)
    if kind == "I":
        return 0.5 * (_sp.iv(abs(n - 1), x) + _sp.iv(n + 1, x))
    if kind == "K":
        return -0.5 * (_sp.kv(abs(n - 1), x) + _sp.kv(n + 1, x))
    raise DomainError(f"kind must be 'I' or 'K', got {kind!r}")


def bessel_deriv_scaled(kind: str, n: int, x):
    """Scaled derivatives: e^{-x} I'_n(x) for kind "I", e^{+x} K'_n(x) for "K"."""
    n = _check_order(n)
    x = _check_x(x, positive=True)
    if kind == "I":
        return 0.5 * (_sp.ive(abs(n - 1), x) + _sp.ive(n + 1, x))
    if kind == "K":
        return -0.5 * (_sp.kve(abs(n - 1), x) + _sp.kve(n + 1, x))
    raise DomainError(f"kind must be 'I' or 'K', got {kind!r}")

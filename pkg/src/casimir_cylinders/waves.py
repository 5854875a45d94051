"""Translation of cylindrical partial waves between two inclined frames.

Geometry: cylinder 1 lies along the z axis, cylinder 2 is displaced by d
along y and rotated by theta about y. A regular wave of cylinder 1 with
angular index n and axial wavenumber k_z is re-expanded in outgoing waves of
cylinder 2 (and vice versa). On the imaginary frequency axis (Euclidean
frequency kappa) the transform kernel for the scalar field is

    u_{n'n}(k'_z, k_z) = (-i)^{n+n'} beta(xi')^{n'} beta(xi)^{-n}
                         * exp(-d*Q) / (2*Q*sin(theta))

with

    p   = sqrt(kappa^2 + k_z^2)          p'  = sqrt(kappa^2 + k'_z^2)
    k_x = (cos(theta) k_z - k'_z)/sin(theta)
    k'_x = (k_z - cos(theta) k'_z)/sin(theta)
    xi  = k_x/p                           xi' = k'_x/p'
    Q   = sqrt(k'_x^2 + p'^2) = sqrt(k_x^2 + p^2)
    beta(x) = x - sqrt(x^2 + 1)

The inverse transform (object 2 -> object 1) carries an extra (-1)^{n+n'}.
Everything after the (-i)^{n+n'} phase is real; the engine consumes that
real part through the vectorized helpers at the bottom, the element-level
functions return the full complex values.

Primed quantities belong to the output (re-expansion) frame throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "FrameTransform",
    "ScalarKernelArgs",
    "scalar_translation",
    "scalar_translation_dderiv",
    "index_shift_check",
    "em_translation_block",
    "kernel_kinematics",
    "bracket_power_table",
    "em_geometric_factors",
]

# (-i)^m for m mod 4
_PHASE = (1.0 + 0.0j, -1.0j, -1.0 + 0.0j, 1.0j)


@dataclass(frozen=True)
class FrameTransform:
    """Displacement d > 0 along the frame axis and tilt angle theta in (0, pi).

    direction "forward" translates waves of object 1 into the frame of
    object 2; "inverse" is the reverse path and differs by (-1)^{n+n'}.
    """

    d: float
    theta: float
    direction: str = "forward"

    def __post_init__(self):
        if not (math.isfinite(self.d) and self.d > 0.0):
            raise DomainError(f"displacement d must be finite and > 0, got {self.d}")
        if not (math.isfinite(self.theta) and 0.0 < self.theta < math.pi):
            raise DomainError(
                f"tilt angle must lie strictly between 0 and pi, got {self.theta}"
            )
        if self.direction not in ("forward", "inverse"):
            raise DomainError(f"direction must be 'forward' or 'inverse', got {self.direction!r}")


@dataclass(frozen=True)
class ScalarKernelArgs:
    """One kernel element: output channel (n_out, kz_out), input channel
    (n_in, kz_in), at Euclidean frequency kappa >= 0."""

    n_out: int
    kz_out: float
    n_in: int
    kz_in: float
    kappa: float

    def __post_init__(self):
        for name in ("n_out", "n_in"):
            if not isinstance(getattr(self, name), (int, np.integer)):
                raise DomainError(f"{name} must be an integer")
        for name in ("kz_out", "kz_in", "kappa"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.kappa < 0.0:
            raise DomainError("kappa must be >= 0")


def _beta(x):
    """x - sqrt(x^2 + 1), evaluated without cancellation for x > 0."""
    x = np.asarray(x, dtype=float)
    r = np.hypot(x, 1.0)
    out = np.where(x > 0.0, -1.0 / (x + r), x - r)
    return out if out.ndim else float(out)


def _kinematics_scalar(args: ScalarKernelArgs, xform: FrameTransform):
    st, ct = math.sin(xform.theta), math.cos(xform.theta)
    p_in = math.hypot(args.kappa, args.kz_in)
    p_out = math.hypot(args.kappa, args.kz_out)
    if p_in == 0.0 or p_out == 0.0:
        raise DomainError("kernel undefined at kappa = k_z = 0 (p or p' vanishes)")
    kx_in = (ct * args.kz_in - args.kz_out) / st
    kx_out = (args.kz_in - ct * args.kz_out) / st
    q = math.hypot(kx_out, p_out)
    return st, p_in, p_out, kx_in / p_in, kx_out / p_out, q


def _real_kernel(args: ScalarKernelArgs, xform: FrameTransform) -> float:
    st, _, _, xi_in, xi_out, q = _kinematics_scalar(args, xform)
    val = (
        _beta(xi_out) ** args.n_out
        * _beta(xi_in) ** (-args.n_in)
        * math.exp(-xform.d * q)
        / (2.0 * q * st)
    )
    if xform.direction == "inverse":
        val *= (-1.0) ** ((args.n_in + args.n_out) % 2)
    return val


def scalar_translation(args: ScalarKernelArgs, xform: FrameTransform) -> complex:
    """One matrix element of the scalar translation kernel."""
    return _PHASE[(args.n_in + args.n_out) % 4] * _real_kernel(args, xform)


def scalar_translation_dderiv(args: ScalarKernelArgs, xform: FrameTransform) -> complex:
    """d/d(d) of scalar_translation; equals -Q times the element."""
    q = _kinematics_scalar(args, xform)[5]
    return -q * scalar_translation(args, xform)


def index_shift_check(args: ScalarKernelArgs, xform: FrameTransform, shift: int = 1) -> float:
    """Relative residual of the one-step recurrence in the input index:

        u_{n', n+1} = -i * beta(xi)^{-1} * u_{n', n}
        u_{n', n-1} = +i * beta(xi)      * u_{n', n}

    (for the inverse direction each step carries an extra -1). Returns
    |u_shifted - factor * u| / |u|; zero up to rounding for a correct kernel.
    """
    if shift not in (1, -1):
        raise DomainError("shift must be +1 or -1")
    xi_in = _kinematics_scalar(args, xform)[3]
    b = _beta(xi_in)
    factor = (-1.0j / b) if shift == 1 else (1.0j * b)
    if xform.direction == "inverse":
        factor = -factor
    u0 = scalar_translation(args, xform)
    shifted = ScalarKernelArgs(args.n_out, args.kz_out, args.n_in + shift, args.kz_in, args.kappa)
    u1 = scalar_translation(shifted, xform)
    return abs(u1 - factor * u0) / abs(u0)


def em_translation_block(args: ScalarKernelArgs, xform: FrameTransform) -> np.ndarray:
    """2x2 polarization block of the electromagnetic kernel.

    Rows and columns are ordered (magnetic, electric) multipole; the magnetic
    harmonic scatters off a perfect metal like a Neumann scalar, the electric
    one like Dirichlet. The block is the scalar element times

        (p/p') [[ c,  s],
                [-s,  c]]

    with c = cos(theta) - sin(theta) (k_z/p) xi and
    s = sin(theta) (kappa/p) sqrt(1 + xi^2).  The code evaluates the
    algebraically equivalent forms

        (p/p') c = (cos(theta) kappa^2 + k_z k'_z) / (p p')
        (p/p') s = sin(theta) kappa Q / (p p')

    which stay exact where the textbook expressions cancel catastrophically
    (in particular at kappa = 0, where the off-diagonal vanishes identically
    and the diagonal reduces to sign(k_z k'_z)).
    """
    st = math.sin(xform.theta)
    ct = math.cos(xform.theta)
    p_in = math.hypot(args.kappa, args.kz_in)
    p_out = math.hypot(args.kappa, args.kz_out)
    if p_in == 0.0 or p_out == 0.0:
        raise DomainError("kernel undefined at kappa = k_z = 0 (p or p' vanishes)")
    q = _kinematics_scalar(args, xform)[5]
    pp = p_in * p_out
    cfac = (ct * args.kappa**2 + args.kz_in * args.kz_out) / pp
    sfac = st * args.kappa * q / pp
    u = scalar_translation(args, xform)
    return u * np.array([[cfac, sfac], [-sfac, cfac]], dtype=float)


# ---------------------------------------------------------------------------
# vectorized helpers for the round-trip assembly (phase-stripped, all real)

def kernel_kinematics(kz_out, kz_in, kappa: float, theta: float):
    """Broadcast kinematic factors for node arrays.

    @param kz_out: output-frame axial wavenumbers, shape broadcastable
        against kz_in (typically (N, 1) against (1, M))
    @return (q, xi_out, xi_in, p_out, p_in)
    """
    if not 0.0 < theta < math.pi:
        raise DomainError("tilt angle must lie strictly between 0 and pi")
    st, ct = math.sin(theta), math.cos(theta)
    kz_out = np.asarray(kz_out, dtype=float)
    kz_in = np.asarray(kz_in, dtype=float)
    p_out = np.hypot(kappa, kz_out)
    p_in = np.hypot(kappa, kz_in)
    if np.any(p_out == 0.0) or np.any(p_in == 0.0):
        raise DomainError("kernel undefined at kappa = k_z = 0")
    kx_in = (ct * kz_in - kz_out) / st
    kx_out = (kz_in - ct * kz_out) / st
    q = np.hypot(kx_out, p_out)
    return q, kx_out / p_out, kx_in / p_in, p_out, p_in


def bracket_power_table(xi, n_max: int) -> np.ndarray:
    """beta(xi)^e for e = -n_max..n_max.

    Returns shape (2*n_max+1, *xi.shape); index e + n_max selects the
    exponent e. beta never vanishes, so negative powers are safe.
    """
    xi = np.asarray(xi, dtype=float)
    b = _beta(xi)
    table = np.empty((2 * n_max + 1,) + xi.shape, dtype=float)
    table[n_max] = 1.0
    for k in range(1, n_max + 1):
        table[n_max + k] = table[n_max + k - 1] * b
        table[n_max - k] = table[n_max - k + 1] / b
    return table


def em_geometric_factors(kz_out, kz_in, kappa: float, theta: float):
    """Polarization mixing factors with the p/p' ratio folded in.

    Returns (cfac, sfac) so that the (magnetic, electric) block of the EM
    kernel is scalar_kernel * [[cfac, sfac], [-sfac, cfac]]; see
    em_translation_block for the closed forms.
    """
    q, _, _, p_out, p_in = kernel_kinematics(kz_out, kz_in, kappa, theta)
    st, ct = math.sin(theta), math.cos(theta)
    pp = p_in * p_out
    kz_out = np.asarray(kz_out, dtype=float)
    kz_in = np.asarray(kz_in, dtype=float)
    cfac = (ct * kappa**2 + kz_in * kz_out) / pp
    sfac = st * kappa * q / pp
    return cfac, sfac

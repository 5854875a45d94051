"""Round-trip scattering between two inclined cylinders.

The interaction energy is a frequency integral (or Matsubara sum) of
log det(I - N(kappa)), where the round-trip operator

    N = T1 U12 T2 U21

chains the reflection amplitudes T_i of the two cylinders with the
translation kernels U of :mod:`.waves`. Discretized on a common axial
wavenumber grid and truncated at |n| <= n_max, N becomes a dense matrix.

Two exact rearrangements shape the implementation:

* the (-i)^{n+n'} phases of U12 and the extra parity of U21 are removed by a
  diagonal similarity, leaving the real kernel G; determinants, traces of
  powers, and the force trace are unchanged, so everything is assembled in
  real float64;
* each reflection amplitude grows like e^{2 p R} while the adjacent
  translation decays like e^{-d Q} with Q >= p; the amplitude exponent is
  folded into the translation exponential (exp(-d Q + 2 R p)), which keeps
  every matrix entry finite for d > R1 + R2 at any frequency.

After both steps the stored operator is

    N_cyc = (G T2) (G T1)

a cyclic permutation of N with identical spectrum. t-columns use the scaled
amplitudes of :mod:`.scatter`. Matrix indices are ordered (n, polarization,
node), node fastest; scalar fields have a single polarization, the
electromagnetic field two, ordered (magnetic, electric) -- magnetic
multipoles reflect with the Neumann amplitude, electric ones with Dirichlet.

Units: lengths are whatever unit d and the radii are expressed in; zero
temperature energies are reported in hbar*c per that unit, classical ones in
k_B T, forces in the energy unit per length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import lu_factor, lu_solve, matrix_balance

from . import asympt, scatter, waves
from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    PhaseError,
    ProximityError,
    ZeroModeError,
)

__all__ = [
    "FIELDS",
    "REGIMES",
    "THETA_MIN",
    "Geometry",
    "KzGrid",
    "RoundTrip",
    "EnergyResult",
    "make_kz_grid",
    "default_map_scale",
    "assemble_roundtrip",
    "logdet_one_minus",
    "multiple_scattering_energy",
    "matsubara_kappa",
    "energy_zero_T",
    "energy_finite_T",
    "force_classical",
    "energy_classical",
    "torque",
]

FIELDS = ("dirichlet", "neumann", "em")
REGIMES = ("zero_t", "classical", "finite_t")

# smallest tilt the truncated round trip resolves reliably (5 degrees)
THETA_MIN = math.pi / 36.0

# refinement stops rather than assemble anything larger than this
_DIM_BUDGET = 5000


@dataclass(frozen=True)
class Geometry:
    """Two cylinders of radii r1, r2; axes d apart, tilted by theta.

    theta may lie anywhere in (THETA_MIN, pi - THETA_MIN); accuracy contracts
    are stated for [THETA_MIN, pi/2], the upper half is reached through the
    exact mirror symmetry E(theta) = E(pi - theta).
    """

    d: float
    theta: float
    r1: float = 1.0
    r2: float = 1.0

    def __post_init__(self):
        for name in ("d", "theta", "r1", "r2"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be finite and > 0, got {v!r}")
        if self.d <= self.r1 + self.r2:
            raise DomainError(
                f"axes distance d={self.d} must exceed r1+r2={self.r1 + self.r2} "
                "(cylinders would touch or overlap)"
            )
        if not (THETA_MIN <= self.theta <= math.pi - THETA_MIN):
            raise DomainError(
                f"theta={self.theta} outside supported range "
                f"[{THETA_MIN:.4f}, {math.pi - THETA_MIN:.4f}]"
            )

    @property
    def gap(self) -> float:
        """Closest surface-to-surface distance d - r1 - r2."""
        return self.d - self.r1 - self.r2


@dataclass
class KzGrid:
    """Axial-wavenumber quadrature: compactified Gauss-Legendre nodes on
    (-inf, inf) via k = map_scale * t / (1 - t^2)."""

    nodes: np.ndarray
    weights: np.ndarray
    map_scale: float


def make_kz_grid(n_k: int, map_scale: float) -> KzGrid:
    """Build a symmetric grid with n_k nodes (even, >= 8)."""
    if not isinstance(n_k, (int, np.integer)) or n_k < 8 or n_k % 2:
        raise ConfigError(f"n_k must be an even integer >= 8, got {n_k!r}")
    if not (math.isfinite(map_scale) and map_scale > 0):
        raise ConfigError(f"map_scale must be finite and > 0, got {map_scale!r}")
    t, w = leggauss(int(n_k))
    denom = 1.0 - t * t
    nodes = map_scale * t / denom
    weights = map_scale * (1.0 + t * t) / denom**2 * w
    return KzGrid(nodes, weights, float(map_scale))


def default_map_scale(kappa: float, geom: Geometry) -> float:
    """Scale matching the kernel's decay: the larger of kappa and 2/d."""
    return max(kappa, 2.0 / geom.d)


@dataclass
class RoundTrip:
    """Assembled round-trip operator at one Euclidean frequency.

    blocks holds N_cyc = (G T2)(G T1); m1, m2 are the two factors and
    q_matrix the per-node-pair translation decay rates, from which the exact
    distance derivative of every entry is -q * entry.
    """

    kappa: float
    field: str
    geometry: Geometry
    n_max: int
    grid: KzGrid
    blocks: np.ndarray
    m1: np.ndarray = dc_field(repr=False, default=None)
    m2: np.ndarray = dc_field(repr=False, default=None)
    q_matrix: np.ndarray = dc_field(repr=False, default=None)

    def spectral_radius(self, iters: int = 80) -> float:
        """Power-iteration estimate of the largest eigenvalue magnitude."""
        rng = np.random.default_rng(7)
        v = rng.standard_normal(self.blocks.shape[0])
        v /= np.linalg.norm(v)
        lam = 0.0
        for _ in range(iters):
            w = self.blocks @ v
            lam = np.linalg.norm(w)
            if lam == 0.0:
                return 0.0
            v = w / lam
        return float(lam)


def _check_field(field: str):
    if field not in FIELDS:
        raise ConfigError(f"field must be one of {FIELDS}, got {field!r}")


def _t_columns(field_part: str, n_max: int, p: np.ndarray, radius: float):
    """Scaled reflection amplitudes per channel, [t(|n|, p_j R)] for n=0..n_max."""
    fn = scatter.t_dirichlet_scaled if field_part == "dirichlet" else scatter.t_neumann_scaled
    return [fn(n, p, radius) for n in range(n_max + 1)]


def assemble_roundtrip(kappa: float, geom: Geometry, field: str, n_max: int,
                       grid: KzGrid) -> RoundTrip:
    """Assemble N_cyc on the given grid, truncated at |n| <= n_max."""
    _check_field(field)
    if not isinstance(n_max, (int, np.integer)) or n_max < 0:
        raise ConfigError(f"n_max must be an integer >= 0, got {n_max!r}")
    if not (math.isfinite(kappa) and kappa >= 0.0):
        raise DomainError(f"kappa must be finite and >= 0, got {kappa!r}")

    k = grid.nodes
    nk = k.size
    nb = 2 * n_max + 1
    npol = 2 if field == "em" else 1
    dim = nb * npol * nk
    if dim > 16384:
        raise ConfigError(f"matrix dimension {dim} exceeds the hard budget")

    q, xi_out, xi_in, _, _ = waves.kernel_kinematics(k[:, None], k[None, :],
                                                     kappa, geom.theta)
    p = np.hypot(kappa, k)
    sqw = np.sqrt(grid.weights)
    # symmetrized weights and the translation prefactor, exponent folded with
    # the column amplitude's growth (always negative: Q >= p, d > r1 + r2)
    core = sqw[:, None] * sqw[None, :] / (2.0 * q * math.sin(geom.theta))
    g1 = core * np.exp(-geom.d * q + 2.0 * geom.r2 * p[None, :])
    g2 = core * np.exp(-geom.d * q + 2.0 * geom.r1 * p[None, :])

    t_out = waves.bracket_power_table(xi_out, n_max)
    t_in = waves.bracket_power_table(xi_in, n_max)

    if field == "em":
        cfac, sfac = waves.em_geometric_factors(k[:, None], k[None, :],
                                                kappa, geom.theta)
        # polarization 0 = magnetic (Neumann amplitude), 1 = electric (Dirichlet)
        tn1 = _t_columns("neumann", n_max, p, geom.r1)
        td1 = _t_columns("dirichlet", n_max, p, geom.r1)
        tn2 = _t_columns("neumann", n_max, p, geom.r2)
        td2 = _t_columns("dirichlet", n_max, p, geom.r2)
    else:
        tc1 = _t_columns(field, n_max, p, geom.r1)
        tc2 = _t_columns(field, n_max, p, geom.r2)

    m1 = np.empty((dim, dim))
    m2 = np.empty((dim, dim))
    for a in range(nb):
        for b in range(nb):
            na = abs(b - n_max)
            scal = t_out[a] * t_in[2 * n_max - b]
            if field == "em":
                bf = (cfac, sfac, -sfac, cfac)
                t2 = (tn2[na], td2[na])
                t1 = (tn1[na], td1[na])
                for pr in range(2):
                    for pc in range(2):
                        r0 = (a * 2 + pr) * nk
                        c0 = (b * 2 + pc) * nk
                        geo = bf[pr * 2 + pc]
                        m1[r0:r0 + nk, c0:c0 + nk] = scal * g1 * geo * t2[pc][None, :]
                        m2[r0:r0 + nk, c0:c0 + nk] = scal * g2 * geo * t1[pc][None, :]
            else:
                r0, c0 = a * nk, b * nk
                m1[r0:r0 + nk, c0:c0 + nk] = scal * g1 * tc2[na][None, :]
                m2[r0:r0 + nk, c0:c0 + nk] = scal * g2 * tc1[na][None, :]

    return RoundTrip(kappa=float(kappa), field=field, geometry=geom,
                     n_max=int(n_max), grid=grid, blocks=m1 @ m2,
                     m1=m1, m2=m2, q_matrix=q)


def logdet_one_minus(rt) -> float:
    """log det(I - N) for a RoundTrip (or a bare matrix).

    Real input must yield a positive determinant, otherwise the surfaces are
    closer than the truncation resolves (ProximityError). Complex input is
    accepted for cross-checks; its determinant must be real to 1e-8 or the
    assembly itself is at fault (PhaseError).
    """
    m = rt.blocks if isinstance(rt, RoundTrip) else np.asarray(rt)
    if not np.iscomplexobj(m):
        # exact powers-of-two similarity: det(I - N) unchanged, but the LU no
        # longer sees the bracket-ladder entry spread of ~beta^(4 n_max);
        # scale factors beyond 2**63 trip a harmless int-cast warning inside
        # scipy's permutation bookkeeping, which permute=False never uses
        with np.errstate(invalid="ignore"):
            m, _ = matrix_balance(m, permute=False)
    a = np.eye(m.shape[0], dtype=m.dtype) - m
    sign, lad = np.linalg.slogdet(a)
    if np.iscomplexobj(a):
        phase = abs(float(np.angle(sign)))
        if phase >= 1e-8:
            raise PhaseError(
                f"determinant phase {phase:.3e} exceeds 1e-8; assembly inconsistent"
            )
        return float(lad)
    if sign <= 0.0:
        raise ProximityError(
            "det(I - N) is not positive: spectral radius reached 1 "
            "(surfaces too close for this truncation, or grid too coarse)"
        )
    return float(lad)


def _kappa_quadrature(n_kappa: int, scale: float):
    """Nodes/weights for int_0^inf dkappa via kappa = scale * s/(1-s)."""
    if not isinstance(n_kappa, (int, np.integer)) or n_kappa < 4:
        raise ConfigError(f"n_kappa must be an integer >= 4, got {n_kappa!r}")
    t, w = leggauss(int(n_kappa))
    s = 0.5 * (t + 1.0)
    ws = 0.5 * w
    kappa = scale * s / (1.0 - s)
    jac = scale / (1.0 - s) ** 2
    return kappa, ws * jac


def _zero_t_single(geom: Geometry, field: str, n_max: int, n_k: int,
                   n_kappa: int) -> float:
    """(1/2pi) int dkappa logdet(I - N(kappa)) on fixed parameters."""
    kappas, kw = _kappa_quadrature(n_kappa, 2.0 / geom.gap)
    total = 0.0
    for kap, wgt in zip(kappas, kw):
        grid = make_kz_grid(n_k, default_map_scale(kap, geom))
        rt = assemble_roundtrip(kap, geom, field, n_max, grid)
        total += wgt * logdet_one_minus(rt)
    return total / (2.0 * math.pi)


@dataclass
class EnergyResult:
    """A computed interaction quantity and the knobs that produced it.

    value units: hbar*c/length for regime "zero_t" and "finite_t", k_B T for
    "classical" energies, k_B T/length for classical forces.
    """

    value: float
    n_max: int
    N_k: int
    kappa_nodes: int
    est_error: float
    regime: str
    quantity: str = "energy"


def energy_zero_T(geom: Geometry, field: str, n_max: int = 3, n_k: int = 64,
                  n_kappa: int = 40, tol: float | None = 1e-4,
                  max_refine: int = 4) -> EnergyResult:
    """Zero-temperature interaction energy, in hbar*c per length unit.

    With tol set, (n_max, n_k, n_kappa) are jointly doubled until the value
    changes by less than tol relatively (ConvergenceError after max_refine
    doublings, or earlier if the matrix would outgrow the memory budget).
    tol=None evaluates the given parameters once, with est_error nan --
    the mode used for finite differencing, where adaptivity would break the
    smoothness of the parameter dependence.
    """
    _check_field(field)
    if tol is None:
        val = _zero_t_single(geom, field, n_max, n_k, n_kappa)
        return EnergyResult(val, n_max, n_k, n_kappa, math.nan, "zero_t")
    history = []
    prev = _zero_t_single(geom, field, n_max, n_k, n_kappa)
    history.append(prev)
    for _ in range(max_refine):
        n_max, n_k, n_kappa = 2 * n_max, 2 * n_k, 2 * n_kappa
        npol = 2 if field == "em" else 1
        if (2 * n_max + 1) * npol * n_k > _DIM_BUDGET:
            raise ConvergenceError(
                "refinement would exceed the matrix-dimension budget "
                f"({_DIM_BUDGET}) before reaching tol={tol}",
                history,
            )
        cur = _zero_t_single(geom, field, n_max, n_k, n_kappa)
        history.append(cur)
        if abs(cur - prev) <= tol * abs(cur):
            return EnergyResult(cur, n_max, n_k, n_kappa, abs(cur - prev), "zero_t")
        prev = cur
    raise ConvergenceError(
        f"zero-T energy did not converge to tol={tol} after {max_refine} doublings",
        history,
    )


def multiple_scattering_energy(geom: Geometry, field: str, p_max: int,
                               n_max: int = 3, n_k: int = 64,
                               n_kappa: int = 40) -> EnergyResult:
    """Zero-T energy from the first p_max round trips:
    -(1/2pi) sum_p (1/p) int dkappa Tr N^p.

    est_error is the magnitude of the last retained term; terms must shrink
    monotonically or the expansion is diverging (spectral radius >= 1) and a
    ConvergenceError reports the term history.
    """
    _check_field(field)
    if not isinstance(p_max, (int, np.integer)) or p_max < 1:
        raise ConfigError(f"p_max must be an integer >= 1, got {p_max!r}")
    kappas, kw = _kappa_quadrature(n_kappa, 2.0 / geom.gap)
    terms = np.zeros(p_max)
    for kap, wgt in zip(kappas, kw):
        grid = make_kz_grid(n_k, default_map_scale(kap, geom))
        rt = assemble_roundtrip(kap, geom, field, n_max, grid)
        power = rt.blocks
        for p in range(1, p_max + 1):
            terms[p - 1] += wgt * float(np.trace(power)) / p
            if p < p_max:
                power = power @ rt.blocks
    terms /= -(2.0 * math.pi)
    mags = np.abs(terms)
    if np.any(np.diff(mags) >= 0.0):
        raise ConvergenceError(
            "multiple-scattering terms are not decreasing; expansion diverges "
            "(spectral radius >= 1)",
            terms.tolist(),
        )
    return EnergyResult(float(terms.sum()), n_max, n_k, n_kappa,
                        float(mags[-1]), "zero_t")


def _classical_logdet(geom: Geometry, field: str, n_max: int, n_k: int,
                      grid: KzGrid | None = None) -> float:
    if grid is None:
        grid = make_kz_grid(n_k, default_map_scale(0.0, geom))
    rt = assemble_roundtrip(0.0, geom, field, n_max, grid)
    return logdet_one_minus(rt)


def matsubara_kappa(n: int, temperature: float) -> float:
    """n-th Matsubara frequency 2*pi*n*T in the working inverse-length unit."""
    if not (isinstance(n, (int, np.integer)) and n >= 0):
        raise ConfigError(f"Matsubara index must be an integer >= 0, got {n!r}")
    if not (isinstance(temperature, (int, float)) and math.isfinite(temperature)
            and temperature > 0.0):
        raise DomainError(f"temperature must be finite and > 0, got {temperature!r}")
    return 2.0 * math.pi * n * temperature


def energy_finite_T(geom: Geometry, field: str, temperature: float,
                    n_max: int = 3, n_k: int = 64, n_matsubara: int = 1000,
                    rel_cutoff: float = 1e-8) -> EnergyResult:
    """Matsubara-sum energy at dimensionless temperature k_B T * (length unit)/(hbar c).

    E = That * [ (1/2) logdet(0) + sum_{n>=1} logdet(kappa_n) ],
    kappa_n = 2 pi n That (in the inverse length unit); reported in
    hbar*c/length so the T->0 limit compares directly with energy_zero_T.

    The n=0 term exists only for the Neumann scalar; Dirichlet and EM zero
    modes are not trace class on the open kz line and raise ZeroModeError
    (their classical physics comes from force_classical / energy_classical).
    """
    _check_field(field)
    if not (isinstance(temperature, (int, float)) and math.isfinite(temperature)
            and temperature > 0.0):
        raise DomainError(f"temperature must be finite and > 0, got {temperature!r}")
    if field != "neumann":
        raise ZeroModeError(
            f"the {field} zero-frequency round trip is not trace class; "
            "use force_classical / energy_classical for the n=0 physics"
        )
    total = 0.5 * _classical_logdet(geom, field, n_max, n_k)
    n_used = 0
    last = math.inf
    for n in range(1, n_matsubara + 1):
        kappa_n = matsubara_kappa(n, temperature)
        grid = make_kz_grid(n_k, default_map_scale(kappa_n, geom))
        rt = assemble_roundtrip(kappa_n, geom, field, n_max, grid)
        term = logdet_one_minus(rt)
        total += term
        n_used, last = n, abs(term)
        if last < rel_cutoff * abs(total):
            break
    else:
        raise ConvergenceError(
            f"Matsubara sum not converged after {n_matsubara} terms "
            f"(last relative term {last / abs(total):.2e})",
            [total],
        )
    return EnergyResult(temperature * total, n_max, n_k, n_used,
                        temperature * last, "finite_t")


def force_classical(geom: Geometry, field: str, n_max: int = 3, n_k: int = 64,
                    grid: KzGrid | None = None) -> EnergyResult:
    """Classical (high-T) force per k_B T, from the derivative of the
    zero-frequency determinant:

        F = -dE/dd = (1/2) Tr[(I - N)^{-1} dN/dd]   (in k_B T / length; < 0)

    dN/dd is exact: every entry of the two round-trip factors carries
    exp(-d Q), so the derivative multiplies entries by -Q. An explicit grid
    pins the quadrature (for finite-difference cross-checks); by default the
    grid follows the geometry.
    """
    _check_field(field)
    if grid is None:
        grid = make_kz_grid(n_k, default_map_scale(0.0, geom))
    rt = assemble_roundtrip(0.0, geom, field, n_max, grid)
    reps = rt.blocks.shape[0] // rt.q_matrix.shape[0]
    qb = np.tile(rt.q_matrix, (reps, reps))
    dn = -((qb * rt.m1) @ rt.m2 + rt.m1 @ (qb * rt.m2))
    # balance N and dN by the same similarity; the trace is invariant
    with np.errstate(invalid="ignore"):
        bal, scale = matrix_balance(rt.blocks, permute=False, separate=True)
    srow = scale[0] if isinstance(scale, tuple) else scale
    dn = dn * (srow[None, :] / srow[:, None])
    a = np.eye(bal.shape[0]) - bal
    solved = lu_solve(lu_factor(a), dn)
    force = 0.5 * float(np.trace(solved))
    return EnergyResult(force, n_max, n_k, 0, math.nan, "classical",
                        quantity="force")


def energy_classical(geom: Geometry, field: str, n_max: int = 3, n_k: int = 64,
                     n_dist: int = 48, d_max_factor: float = 1e4,
                     grid: KzGrid | None = None) -> EnergyResult:
    """Classical (high-T) interaction energy in k_B T.

    Neumann: directly (1/2) logdet(I - N(0)).

    Dirichlet / EM: the zero mode has no trace-class determinant, but the
    force does have a well-defined trace, so the energy is recovered from it:

        E(d) = int_d^{d_max} F(d') dd' + E_tail(d_max)

    with d_max = d_max_factor * r1 and the analytic large-distance tail.
    The tail is known in closed form only for equal radii; unequal radii
    raise DomainError on this route. The d'-integral runs on a log-spaced
    Gauss-Legendre rule with n_dist nodes; est_error compares against the
    half-resolution rule.
    """
    _check_field(field)
    if field == "neumann":
        val = 0.5 * _classical_logdet(geom, field, n_max, n_k, grid=grid)
        return EnergyResult(val, n_max, n_k, 0, math.nan, "classical")
    if grid is not None:
        raise ConfigError("pinned grids apply only to the Neumann direct route")
    if geom.r1 != geom.r2:
        raise DomainError(
            "classical energy for dirichlet/em needs the analytic tail, "
            "known only for equal radii"
        )
    d_max = d_max_factor * geom.r1
    if geom.d >= d_max:
        raise DomainError(f"d must be below the tail matching point {d_max}")

    def force_at(dp: float) -> float:
        g = Geometry(dp, geom.theta, geom.r1, geom.r2)
        return force_classical(g, field, n_max=n_max, n_k=n_k).value

    def integral(nn: int) -> float:
        t, w = leggauss(nn)
        lo, hi = math.log(geom.d), math.log(d_max)
        x = 0.5 * (hi - lo) * t + 0.5 * (hi + lo)
        acc = 0.0
        for xi, wi in zip(x, w):
            acc += wi * force_at(math.exp(xi)) * math.exp(xi)
        return 0.5 * (hi - lo) * acc

    full = integral(n_dist)
    half = integral(n_dist // 2)
    tail = asympt.dirichlet_classical(d_max, geom.r1, geom.theta)[1]
    if field == "em":
        tail += asympt.neumann_classical(d_max, geom.r1, geom.theta)
    value = full + tail
    return EnergyResult(value, n_max, n_k, 0, abs(full - half), "classical")


def _energy_fixed(geom: Geometry, field: str, regime: str, n_max: int,
                  n_k: int, n_kappa: int, temperature: float | None) -> float:
    if regime == "zero_t":
        return _zero_t_single(geom, field, n_max, n_k, n_kappa)
    if regime == "classical":
        return energy_classical(geom, field, n_max=n_max, n_k=n_k).value
    if regime == "finite_t":
        if temperature is None:
            raise ConfigError("finite_t torque needs a temperature")
        return energy_finite_T(geom, field, temperature, n_max=n_max,
                               n_k=n_k).value
    raise ConfigError(f"regime must be one of {REGIMES}, got {regime!r}")


def torque(geom: Geometry, field: str, regime: str = "zero_t", n_max: int = 3,
           n_k: int = 64, n_kappa: int = 40, dtheta: float = 1e-3,
           temperature: float | None = None) -> EnergyResult:
    """Torque about the displacement axis, tau = -dE/dtheta.

    Central differences at steps dtheta and dtheta/2 on fixed quadrature
    parameters (the integrand depends on theta smoothly only if the grids do
    not adapt), combined by one Richardson extrapolation; est_error is the
    size of the extrapolation correction. Negative values drive the
    cylinders toward alignment; tau vanishes at theta = pi/2 by symmetry.
    """
    lo, hi = THETA_MIN + dtheta, math.pi - THETA_MIN - dtheta
    if not (lo < geom.theta < hi):
        raise DomainError(
            f"theta={geom.theta} too close to the supported boundary for "
            f"step {dtheta}"
        )

    def energy_at(theta: float) -> float:
        g = Geometry(geom.d, theta, geom.r1, geom.r2)
        return _energy_fixed(g, field, regime, n_max, n_k, n_kappa, temperature)

    def central(h: float) -> float:
        return -(energy_at(geom.theta + h) - energy_at(geom.theta - h)) / (2.0 * h)

    t1 = central(dtheta)
    t2 = central(0.5 * dtheta)
    extr = (4.0 * t2 - t1) / 3.0
    return EnergyResult(extr, n_max, n_k, n_kappa, abs(extr - t2), regime,
                        quantity="torque")

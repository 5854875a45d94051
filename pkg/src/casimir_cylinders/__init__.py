"""Casimir interactions between two inclined cylinders.

Scattering-theory round-trip determinants for the Dirichlet and Neumann
scalar fields and the perfect-metal electromagnetic field, with the
closed-form large-distance asymptotics and proximity-force approximations
they are validated against, plus a batch CLI (``cylcas``).
"""

from . import asympt, cli, engine, pfa, scatter, specfun, waves
from .engine import (
    EnergyResult,
    Geometry,
    KzGrid,
    assemble_roundtrip,
    energy_classical,
    energy_finite_T,
    energy_zero_T,
    force_classical,
    logdet_one_minus,
    make_kz_grid,
    matsubara_kappa,
    multiple_scattering_energy,
    torque,
)
from .errors import (
    CasimirError,
    ConfigError,
    ConvergenceError,
    DomainError,
    PhaseError,
    ProximityError,
    ZeroModeError,
)

__version__ = "0.1.0"

__all__ = [
    "asympt",
    "cli",
    "engine",
    "pfa",
    "scatter",
    "specfun",
    "waves",
    "EnergyResult",
    "Geometry",
    "KzGrid",
    "assemble_roundtrip",
    "energy_classical",
    "energy_finite_T",
    "energy_zero_T",
    "force_classical",
    "logdet_one_minus",
    "make_kz_grid",
    "matsubara_kappa",
    "multiple_scattering_energy",
    "torque",
    "CasimirError",
    "ConfigError",
    "ConvergenceError",
    "DomainError",
    "PhaseError",
    "ProximityError",
    "ZeroModeError",
    "__version__",
]

"""Exception types shared across the package.

Domain and configuration problems derive from ValueError so that callers
doing plain input validation can catch them the usual way; numerical
failures derive from RuntimeError.
"""


class CasimirError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CasimirError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigError(CasimirError, ValueError):
    """A configuration value is structurally invalid (sizes, choices, files)."""


class ConvergenceError(CasimirError, RuntimeError):
    """An iterative or adaptive computation failed to reach its tolerance."""

    def __init__(self, message, history=None):
        super().__init__(message)
        # successive estimates (or term magnitudes) for post-mortem inspection
        self.history = list(history) if history is not None else []


class ProximityError(CasimirError, RuntimeError):
    """det(I - N) lost positivity: surfaces too close for the truncation,
    or the grid is too coarse to resolve the round trip."""


class ZeroModeError(CasimirError, RuntimeError):
    """The zero-frequency round trip has no trace-class determinant for the
    requested field; the force-based classical route must be used instead."""


class PhaseError(CasimirError, RuntimeError):
    """A determinant that must be real acquired a non-negligible phase,
    indicating an assembly bug."""

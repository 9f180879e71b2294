"""Exception hierarchy for the flatbody package."""


class FlatBodyError(Exception):
    """Base class for all flatbody errors."""


class DomainError(FlatBodyError, ValueError):
    """Input outside the mathematical domain (non-finite, non-positive stretch, ...)."""


class OrientationError(FlatBodyError, ValueError):
    """Placement matrix has non-positive determinant."""


class StructureError(FlatBodyError, ValueError):
    """Matrix admits no decomposition with an in-plane right rotation factor."""


class DegeneracyError(FlatBodyError, ValueError):
    """Equal in-plane stretches: the in-plane angle and the canonical
    denominators are undefined there."""


class ConstraintViolationError(FlatBodyError, ValueError):
    """Third column is not a positive multiple of the cross product of the
    first two (thickness-orthogonality constraint broken)."""


class DegenerateColumnsError(FlatBodyError, ValueError):
    """First two columns are parallel; the constraint direction is undefined."""


class RankDeficiencyError(FlatBodyError, ValueError):
    """Rectangular factor does not have full column rank."""


class SingularMatrixError(FlatBodyError, ValueError):
    """Square matrix is singular where an invertible one is required."""


class MisuseError(FlatBodyError, TypeError):
    """API called outside its contract (e.g. anisotropic inertia passed to an
    isotropic-only routine, or attitude requested from a sample without one)."""


class NoSolutionError(FlatBodyError):
    """Stationary solve did not converge to a root.

    Attributes:
        reason: short machine-readable cause ("iteration-cap",
            "stalled-line-search" or "degeneracy-trap").
        best_point: (lam, mu, rho) with the smallest residual seen.
        residual_norm: max-norm of the residual at best_point.
        iterations: Newton iterations performed.
    """

    def __init__(self, reason, best_point, residual_norm, iterations):
        self.reason = reason
        self.best_point = best_point
        self.residual_norm = residual_norm
        self.iterations = iterations
        super().__init__(
            f"no stationary solution found ({reason}); best residual "
            f"{residual_norm:.3e} at {best_point} after {iterations} iterations"
        )


class ConfigError(FlatBodyError, ValueError):
    """Invalid run configuration; carries the offending key path."""

    def __init__(self, key, message):
        self.key = key
        super().__init__(f"config key '{key}': {message}")

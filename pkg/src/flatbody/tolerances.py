"""Shared numerical tolerances.

The degeneracy tolerance defines the singular set lam == mu on which the
in-plane angle is undefined and the canonical denominators (lam^2 - mu^2)
vanish.  Every module uses this single definition.  The environment variable
FLATBODY_EPS overrides the default (documented escape hatch for the CLI).
"""

import os

from .errors import DegeneracyError

DEFAULT_DEGENERACY_EPS = 1e-9
ENV_VAR = "FLATBODY_EPS"

# orthogonality / determinant tolerance for rotation matrices
ROTATION_TOL = 1e-12
# relative tolerance for the thickness-orthogonality (constraint) checks
CONSTRAINT_TOL = 1e-9


def degeneracy_eps(override=None):
    """Active degeneracy tolerance: explicit override, else FLATBODY_EPS, else default."""
    if override is not None:
        return float(override)
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return float(env)
    return DEFAULT_DEGENERACY_EPS


def degeneracy_gap(lam, mu):
    """Absolute gap |lam^2 - mu^2| separating a point from the singular set."""
    return abs(lam * lam - mu * mu)


def is_degenerate(lam, mu, eps=None):
    """True when |lam^2 - mu^2| < eps * max(lam^2, mu^2)."""
    tol = degeneracy_eps(eps)
    return degeneracy_gap(lam, mu) < tol * max(lam * lam, mu * mu)


def check_nondegenerate(lam, mu, eps=None, where=""):
    """Raise DegeneracyError when (lam, mu) lies inside the degeneracy tolerance."""
    if is_degenerate(lam, mu, eps):
        suffix = f" in {where}" if where else ""
        raise DegeneracyError(
            f"in-plane stretches degenerate{suffix}: lam={lam!r}, mu={mu!r} "
            f"(|lam^2-mu^2| below tolerance)"
        )

"""Kinematics of the constrained 3x3 placement matrix.

A flat body with finite thickness is placed in space by a 3x3 matrix whose
third column stays orthogonal to the deformed central plane (it equals a
positive multiple ell of the cross product of the first two columns).  Such
matrices factor as

    Phi = R @ diag(lam, mu, rho) @ Uinv(theta)

with R a proper rotation and Uinv(theta) the transposed rotation by theta
about the third axis.  This module builds and inverts that factorization and
computes the deformation tensors and their invariants.

All matrices are plain (3, 3) float ndarrays; values are never mutated.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstraintViolationError,
    DegenerateColumnsError,
    DomainError,
    OrientationError,
    RankDeficiencyError,
    SingularMatrixError,
    StructureError,
)
from .tolerances import CONSTRAINT_TOL, ROTATION_TOL, check_nondegenerate

__all__ = [
    "ShapeCoords",
    "material_rotation",
    "rotation_about_3",
    "angular_velocity_matrix",
    "theta_rate_matrix",
    "check_rotation",
    "assemble_placement",
    "two_polar_decompose",
    "green_tensor",
    "cauchy_tensor",
    "deformation_invariants",
    "kirchhoff_love_parameter",
    "left_inverse",
    "green_tensor_rate",
]


@dataclass(frozen=True)
class ShapeCoords:
    """Principal stretches and in-plane angle (lam, mu, rho, theta).

    lam and mu stretch the central plane, rho the thickness; theta rotates
    the material axes of the plane.  All stretches must be positive.  The
    canonical (ordered) chart additionally has lam > mu; construct with
    ``ordered=True`` to enforce it.
    """

    lam: float
    mu: float
    rho: float
    theta: float

    def __init__(self, lam, mu, rho, theta, ordered=False):
        for name, value in (("lam", lam), ("mu", mu), ("rho", rho)):
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"stretch {name} must be positive and finite, got {value!r}")
        if not math.isfinite(theta):
            raise DomainError(f"theta must be finite, got {theta!r}")
        if ordered and not lam > mu:
            raise DomainError(f"ordered shape requires lam > mu, got lam={lam!r}, mu={mu!r}")
        object.__setattr__(self, "lam", float(lam))
        object.__setattr__(self, "mu", float(mu))
        object.__setattr__(self, "rho", float(rho))
        object.__setattr__(self, "theta", float(theta))

    @property
    def is_ordered(self):
        return self.lam > self.mu

    def stretch_matrix(self):
        """diag(lam, mu, rho)."""
        return np.diag([self.lam, self.mu, self.rho])


def rotation_about_3(alpha):
    """Proper rotation by alpha about the third axis."""
    c, s = math.cos(alpha), math.sin(alpha)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def material_rotation(theta):
    """Inverse material-rotation factor Uinv(theta) of the placement product.

    This is the transposed rotation by theta about the third axis,
    [[cos, sin, 0], [-sin, cos, 0], [0, 0, 1]]; the placement is
    R @ D @ Uinv(theta).
    """
    if not math.isfinite(theta):
        raise DomainError(f"theta must be finite, got {theta!r}")
    return rotation_about_3(theta).T


def angular_velocity_matrix(omega1, omega2, omega3):
    """Antisymmetric co-moving angular velocity of the spatial gyroscope.

    Component layout: [[0, w3, -w2], [-w3, 0, w1], [w2, -w1, 0]], so that
    dR/dt = R @ angular_velocity_matrix(w1, w2, w3).
    """
    return np.array(
        [
            [0.0, omega3, -omega2],
            [-omega3, 0.0, omega1],
            [omega2, -omega1, 0.0],
        ]
    )


def theta_rate_matrix(theta_dot):
    """Antisymmetric rate of the material rotation: dU/dt = U @ theta_rate_matrix."""
    return theta_dot * np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])


def check_rotation(r, tol=ROTATION_TOL):
    """Validate that r is a proper rotation; returns r as a float ndarray.

    Orthogonality and det = +1 are required entrywise to ``tol``.
    """
    r = np.asarray(r, dtype=float)
    if r.shape != (3, 3) or not np.all(np.isfinite(r)):
        raise DomainError("rotation must be a finite 3x3 matrix")
    defect = np.max(np.abs(r.T @ r - np.eye(3)))
    if defect > tol:
        raise DomainError(f"matrix is not orthogonal (max defect {defect:.3e})")
    det = np.linalg.det(r)
    if abs(det - 1.0) > tol:
        raise DomainError(f"rotation must have det +1, got {det!r}")
    return r


def assemble_placement(rotation, shape):
    """Placement matrix R @ diag(lam, mu, rho) @ Uinv(theta)."""
    r = check_rotation(rotation)
    return r @ shape.stretch_matrix() @ material_rotation(shape.theta)


def two_polar_decompose(phi, eps=None):
    """Factor a placement into (rotation, ShapeCoords).

    Returns the canonical factors with lam > mu and theta in (-pi/2, pi/2],
    both rotation factors proper.  Raises OrientationError for det <= 0,
    StructureError when no right factor aligned with the third axis exists,
    and DegeneracyError when lam and mu coincide within tolerance (the angle
    is not unique there).
    """
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (3, 3) or not np.all(np.isfinite(phi)):
        raise DomainError("placement must be a finite 3x3 matrix")
    if np.linalg.det(phi) <= 0.0:
        raise OrientationError(f"placement must have positive determinant, got {np.linalg.det(phi)!r}")

    g = phi.T @ phi
    scale = np.max(np.abs(g))
    if max(abs(g[0, 2]), abs(g[1, 2])) > CONSTRAINT_TOL * scale:
        raise StructureError(
            "third material axis is not a principal direction; no decomposition "
            "with an in-plane right rotation exists"
        )

    rho = math.sqrt(g[2, 2])
    trace2 = g[0, 0] + g[1, 1]
    diff = math.hypot(g[0, 0] - g[1, 1], 2.0 * g[0, 1])
    lam_sq = 0.5 * (trace2 + diff)
    mu_sq = 0.5 * (trace2 - diff)
    if mu_sq <= 0.0:
        # cannot happen for det > 0, but guard the sqrt
        raise DomainError("in-plane block is not positive-definite")
    lam = math.sqrt(lam_sq)
    mu = math.sqrt(mu_sq)
    check_nondegenerate(lam, mu, eps, where="two_polar_decompose")

    theta = 0.5 * math.atan2(2.0 * g[0, 1], g[0, 0] - g[1, 1])
    shape = ShapeCoords(lam, mu, rho, theta)
    # right factor fixed, rotation follows: R = Phi @ U(theta) @ D^{-1}
    rotation = phi @ rotation_about_3(theta) @ np.diag([1.0 / lam, 1.0 / mu, 1.0 / rho])
    return check_rotation(rotation, tol=1e-9), shape


def green_tensor(shape):
    """Material deformation tensor Phi^T Phi in closed form.

    Block structure: the (1,2) block mixes lam^2 and mu^2 through theta, the
    thickness entry is rho^2, the off-plane entries vanish.
    """
    lam2, mu2 = shape.lam**2, shape.mu**2
    c, s = math.cos(shape.theta), math.sin(shape.theta)
    g12 = (lam2 - mu2) * s * c
    return np.array(
        [
            [lam2 * c * c + mu2 * s * s, g12, 0.0],
            [g12, lam2 * s * s + mu2 * c * c, 0.0],
            [0.0, 0.0, shape.rho**2],
        ]
    )


def cauchy_tensor(phi):
    """Spatial deformation tensor Phi @ Phi^T.

    For a placement R D Uinv this equals R D^2 R^T: same eigenvalues
    {lam^2, mu^2, rho^2} as the material tensor, rotated by R instead of U.
    (The inverse-transpose construction would produce the inverse spectrum;
    this form is the one whose eigenvalues are the squared stretches.)
    """
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (3, 3) or not np.all(np.isfinite(phi)):
        raise DomainError("placement must be a finite 3x3 matrix")
    if abs(np.linalg.det(phi)) < 1e-300:
        raise SingularMatrixError("placement is singular")
    return phi @ phi.T


def deformation_invariants(g):
    """Roots of det(G - K I) = 0, sorted descending.

    For a tensor built from shape coordinates these are
    (max, mid, min) of {lam^2, mu^2, rho^2}.
    """
    g = np.asarray(g, dtype=float)
    if g.shape != (3, 3) or not np.all(np.isfinite(g)):
        raise DomainError("deformation tensor must be a finite 3x3 matrix")
    if np.max(np.abs(g - g.T)) > 1e-12 * max(1.0, np.max(np.abs(g))):
        raise DomainError("deformation tensor must be symmetric")
    eigenvalues = np.linalg.eigvalsh(g)
    if eigenvalues[0] <= 0.0:
        raise DomainError("deformation tensor must be positive-definite")
    k3, k2, k1 = eigenvalues
    return (k1, k2, k3)


def kirchhoff_love_parameter(phi):
    """Proportionality factor ell with column3 = ell * (column1 x column2).

    For two-polar placements ell = rho / (lam * mu).  Raises
    ConstraintViolationError when the third column deviates from the cross
    product direction by more than the constraint tolerance, and
    DegenerateColumnsError when the first two columns are parallel.
    """
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (3, 3) or not np.all(np.isfinite(phi)):
        raise DomainError("placement must be a finite 3x3 matrix")
    col1, col2, col3 = phi[:, 0], phi[:, 1], phi[:, 2]
    cross = np.cross(col1, col2)
    cross_norm = np.linalg.norm(cross)
    col_scale = max(np.linalg.norm(col1), np.linalg.norm(col2))
    if cross_norm <= 1e-14 * max(1.0, col_scale**2):
        raise DegenerateColumnsError("first two columns are parallel")
    ell = float(np.dot(col3, cross) / np.dot(cross, cross))
    deviation = np.linalg.norm(col3 - ell * cross)
    if deviation > CONSTRAINT_TOL * max(np.linalg.norm(col3), abs(ell) * cross_norm, 1e-30):
        raise ConstraintViolationError(
            f"third column is not proportional to the cross product "
            f"(relative deviation {deviation / max(np.linalg.norm(col3), 1e-30):.3e})"
        )
    if ell <= 0.0:
        raise ConstraintViolationError(f"thickness factor must be positive, got {ell!r}")
    return ell


def left_inverse(phi_rect):
    """Minimal-norm left inverse of a full-rank 3x2 matrix.

    Left inverses of an injection form an infinite family; the returned
    (phi^T phi)^{-1} phi^T is the canonical minimal-norm member, satisfying
    left_inverse(phi) @ phi = I_2.
    """
    phi_rect = np.asarray(phi_rect, dtype=float)
    if phi_rect.shape != (3, 2) or not np.all(np.isfinite(phi_rect)):
        raise DomainError("expected a finite 3x2 matrix")
    singular_values = np.linalg.svd(phi_rect, compute_uv=False)
    if singular_values[-1] <= 1e-12 * singular_values[0]:
        raise RankDeficiencyError("matrix does not have rank 2")
    return np.linalg.solve(phi_rect.T @ phi_rect, phi_rect.T)


def green_tensor_rate(shape, theta_dot):
    """Rate of the material deformation tensor along a pure theta motion.

    With the stretches frozen, dG/dt = U (K D^2 - D^2 K) Uinv where K is the
    theta-rate generator; the commutator is symmetric, traceless in the
    in-plane block and vanishes entirely when lam == mu.
    """
    if not math.isfinite(theta_dot):
        raise DomainError(f"theta_dot must be finite, got {theta_dot!r}")
    gap = shape.lam**2 - shape.mu**2
    commutator = theta_dot * gap * np.array(
        [[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]
    )
    u = rotation_about_3(shape.theta)
    return u @ commutator @ u.T

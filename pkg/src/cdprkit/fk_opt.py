"""Optimization-based forward kinematics: bounded nonlinear least squares.

Forward kinematics inverts the IK map: given target cable lengths L, find
the pose Q minimizing ``|| L - ik(Q) ||^2`` subject to box bounds on Q.
The solver is Levenberg-Marquardt with steps projected onto the bounds.
Coordinates whose lower and upper bound coincide (yaw on the bundled
spatial configs, z/roll/pitch on planar ones) are eliminated from the
optimization rather than penalized.

The Jacobian is analytic; :func:`fd_jacobian` provides the central-difference
fallback used to cross-check it in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Pose, rotation_matrix
from .errors import ConfigMismatch, InfeasibleBounds

__all__ = [
    "FkOptSettings",
    "FkSolution",
    "default_settings",
    "residuals",
    "jacobian",
    "fd_jacobian",
    "solve_fk_opt",
]


@dataclass
class FkOptSettings:
    """Box bounds, initial guess and stopping rules for the FK solver."""

    lower: np.ndarray
    upper: np.ndarray
    initial_guess: np.ndarray
    max_iterations: int = 200
    residual_tolerance: float = 1e-9  # mm
    step_tolerance: float = 1e-12

    def __post_init__(self):
        self.lower = np.asarray(self.lower, dtype=float).reshape(6)
        self.upper = np.asarray(self.upper, dtype=float).reshape(6)
        self.initial_guess = np.asarray(self.initial_guess, dtype=float).reshape(6)
        if np.any(self.lower > self.upper):
            raise InfeasibleBounds("lower bound exceeds upper bound")
        if np.any(self.initial_guess < self.lower) or np.any(self.initial_guess > self.upper):
            raise InfeasibleBounds("initial guess outside bounds")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.residual_tolerance <= 0 or self.step_tolerance <= 0:
            raise ValueError("tolerances must be positive")


@dataclass
class FkSolution:
    pose: Pose
    residual_norm: float  # mm, euclidean norm of the length residuals
    iterations: int
    converged: bool


def default_settings(config, **overrides):
    """Solver settings for a config: its pose box, initial guess at the center."""
    return FkOptSettings(
        lower=config.pose_lower,
        upper=config.pose_upper,
        initial_guess=0.5 * (config.pose_lower + config.pose_upper),
        **overrides,
    )


def _as_q(pose):
    return pose.as_array() if isinstance(pose, Pose) else np.asarray(pose, dtype=float).reshape(6)


def _ik_q(config, q):
    # inverse kinematics without Pose validation, for solver iterates
    R = rotation_matrix(q[3], q[4], q[5])
    vectors = q[:3] + config.ee_offsets @ R.T - config.frame_anchors
    return np.linalg.norm(vectors, axis=1)


def residuals(config, pose, target):
    """Length residuals r_i = target_i - ||l_i(pose)||, shape (m,), mm."""
    target = np.asarray(target, dtype=float)
    if target.shape != (config.cable_count,):
        raise ConfigMismatch(
            f"target has {target.shape} entries, config '{config.name}' has m={config.cable_count}"
        )
    return target - _ik_q(config, _as_q(pose))


def jacobian(config, pose):
    """Analytic Jacobian of the residuals w.r.t. the pose, shape (m, 6)."""
    q = _as_q(pose)
    roll, pitch, yaw = q[3], q[4], q[5]
    cr, sr = math.cos(roll), math.sin(roll)
    cp, sp = math.cos(pitch), math.sin(pitch)
    cy, sy = math.cos(yaw), math.sin(yaw)
    Rx = np.array([[1, 0, 0], [0, cr, -sr], [0, sr, cr]])
    Ry = np.array([[cp, 0, sp], [0, 1, 0], [-sp, 0, cp]])
    Rz = np.array([[cy, -sy, 0], [sy, cy, 0], [0, 0, 1]])
    dRx = np.array([[0, 0, 0], [0, -sr, -cr], [0, cr, -sr]])
    dRy = np.array([[-sp, 0, cp], [0, 0, 0], [-cp, 0, -sp]])
    dRz = np.array([[-sy, -cy, 0], [cy, -sy, 0], [0, 0, 0]])

    vectors = q[:3] + config.ee_offsets @ (Rz @ Ry @ Rx).T - config.frame_anchors
    norms = np.linalg.norm(vectors, axis=1)
    safe = np.where(norms > 0.0, norms, 1.0)
    units = vectors / safe[:, None]
    units[norms == 0.0] = 0.0  # degenerate cable: treat gradient as zero

    J = np.empty((config.cable_count, 6))
    J[:, :3] = -units
    for k, dR in enumerate((Rz @ Ry @ dRx, Rz @ dRy @ Rx, dRz @ Ry @ Rx)):
        J[:, 3 + k] = -np.sum(units * (config.ee_offsets @ dR.T), axis=1)
    return J


def fd_jacobian(config, pose, rel_step=1e-6):
    """Central-difference Jacobian of the residuals, for cross-checking."""
    q = _as_q(pose).copy()
    J = np.empty((config.cable_count, 6))
    for k in range(6):
        h = rel_step * max(1.0, abs(q[k]))
        qp, qm = q.copy(), q.copy()
        qp[k] += h
        qm[k] -= h
        # residual = target - ik; the target cancels in the difference
        J[:, k] = -(_ik_q(config, qp) - _ik_q(config, qm)) / (2.0 * h)
    return J


_LAMBDA_INIT = 1e-3
_LAMBDA_GROW = 10.0
_LAMBDA_SHRINK = 0.1
_LAMBDA_MAX = 1e14


def solve_fk_opt(config, target, settings=None):
    """Solve FK as bounded least squares over the pose.

    Levenberg-Marquardt on the free coordinates (bounds with lower < upper),
    candidate steps clipped to the box, accepted only on strict objective
    decrease. Convergence: residual norm below ``residual_tolerance`` or
    proposed step below ``step_tolerance``. Hitting ``max_iterations``
    returns the best iterate with ``converged=False``.
    """
    if settings is None:
        settings = default_settings(config)
    target = np.asarray(target, dtype=float)
    if target.shape != (config.cable_count,):
        raise ConfigMismatch(
            f"target has {target.shape} entries, config '{config.name}' has m={config.cable_count}"
        )

    lower, upper = settings.lower, settings.upper
    free = upper > lower
    q = np.clip(settings.initial_guess, lower, upper)
    r = target - _ik_q(config, q)
    S = float(r @ r)
    lam = _LAMBDA_INIT
    iterations = 0
    converged = math.sqrt(S) < settings.residual_tolerance

    while not converged and iterations < settings.max_iterations:
        iterations += 1
        J = jacobian(config, q)[:, free]
        A = J.T @ J
        g = J.T @ r
        D = np.diag(np.maximum(np.diag(A), 1e-12))
        accepted = False
        while lam <= _LAMBDA_MAX:
            try:
                delta = np.linalg.solve(A + lam * D, -g)
            except np.linalg.LinAlgError:
                delta = np.linalg.lstsq(A + lam * D, -g, rcond=None)[0]
            q_new = q.copy()
            q_new[free] = np.clip(q[free] + delta, lower[free], upper[free])
            step = float(np.linalg.norm(q_new[free] - q[free]))
            if step < settings.step_tolerance:
                converged = True
                break
            r_new = target - _ik_q(config, q_new)
            S_new = float(r_new @ r_new)
            if S_new < S:
                q, r, S = q_new, r_new, S_new
                lam = max(lam * _LAMBDA_SHRINK, 1e-12)
                accepted = True
                break
            lam *= _LAMBDA_GROW
        if converged:
            break
        if not accepted:
            break  # damping exhausted without descent: stationary point
        if math.sqrt(S) < settings.residual_tolerance:
            converged = True

    return FkSolution(
        pose=Pose.from_array(q),
        residual_norm=math.sqrt(S),
        iterations=iterations,
        converged=converged,
    )

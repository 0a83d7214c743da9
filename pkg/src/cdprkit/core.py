"""Geometric model of a cable-driven parallel robot (CDPR) and exact inverse kinematics.

A CDPR suspends an end-effector from ``m`` cables. Cable ``i`` runs from a
fixed frame anchor ``A_i`` (world frame, mm) to an attachment point on the
end-effector given by the body-frame offset ``v_i`` (mm). For an end-effector
pose ``Q = (x, y, z, roll, pitch, yaw)`` the cable vector is

    l_i = (p + R v_i) - A_i

with ``p = (x, y, z)`` and ``R`` the body-to-world rotation. Inverse
kinematics maps a pose to the ``m`` cable lengths ``||l_i||``; it is exact
and closed-form, unlike the forward problem (see :mod:`cdprkit.fk_opt` and
:mod:`cdprkit.cafknet`).

Units are millimetres and radians throughout the package. The Euler
convention everywhere is yaw-pitch-roll composition: ``R = Rz(yaw) @
Ry(pitch) @ Rx(roll)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Pose",
    "CdprConfig",
    "rotation_matrix",
    "cable_vector",
    "cable_vectors",
    "inverse_kinematics",
]


POSE_FIELDS = ("x", "y", "z", "roll", "pitch", "yaw")


def rotation_matrix(roll, pitch, yaw):
    """Body-to-world rotation ``Rz(yaw) @ Ry(pitch) @ Rx(roll)``.

    Total function of three angles in radians; the result is orthonormal
    with determinant +1.
    """
    cr, sr = math.cos(roll), math.sin(roll)
    cp, sp = math.cos(pitch), math.sin(pitch)
    cy, sy = math.cos(yaw), math.sin(yaw)
    return np.array(
        [
            [cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr],
            [sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr],
            [-sp, cp * sr, cp * cr],
        ]
    )


@dataclass(frozen=True)
class Pose:
    """End-effector pose: position in mm, roll/pitch/yaw in radians.

    Euler angles must lie in [-pi, pi].
    """

    x: float
    y: float
    z: float
    roll: float
    pitch: float
    yaw: float

    def __post_init__(self):
        q = self.as_array()
        if not np.all(np.isfinite(q)):
            raise ValueError(f"pose components must be finite, got {q}")
        angles = q[3:]
        if np.any(np.abs(angles) > math.pi):
            raise ValueError(f"Euler angles must lie in [-pi, pi], got {angles}")

    def as_array(self):
        return np.array([self.x, self.y, self.z, self.roll, self.pitch, self.yaw])

    @classmethod
    def from_array(cls, q):
        q = np.asarray(q, dtype=float)
        if q.shape != (6,):
            raise ValueError(f"pose array must have shape (6,), got {q.shape}")
        return cls(*(float(v) for v in q))

    @property
    def position(self):
        return np.array([self.x, self.y, self.z])

    def rotation(self):
        return rotation_matrix(self.roll, self.pitch, self.yaw)


def _as_readonly(a, shape, name):
    a = np.array(a, dtype=float)
    if a.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} must be finite")
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class CdprConfig:
    """Full geometric description of one CDPR.

    frame_anchors holds the m anchor points A_i (world frame, mm),
    ee_offsets the m attachment offsets v_i (body frame, mm). pose_lower and
    pose_upper bound the reachable poses componentwise (mm, rad). Planar
    robots live in the same 6-DoF representation with z = roll = pitch = 0
    pinned by the bounds.
    """

    name: str
    frame_anchors: np.ndarray
    ee_offsets: np.ndarray
    planar: bool
    pose_lower: np.ndarray
    pose_upper: np.ndarray

    def __post_init__(self):
        anchors = np.array(self.frame_anchors, dtype=float)
        if anchors.ndim != 2 or anchors.shape[1] != 3:
            raise ValueError(f"frame_anchors must have shape (m, 3), got {anchors.shape}")
        m = anchors.shape[0]
        if m < 3:
            raise ValueError(f"a CDPR needs at least 3 cables, got m={m}")
        object.__setattr__(self, "frame_anchors", _as_readonly(anchors, (m, 3), "frame_anchors"))
        object.__setattr__(self, "ee_offsets", _as_readonly(self.ee_offsets, (m, 3), "ee_offsets"))
        object.__setattr__(self, "pose_lower", _as_readonly(self.pose_lower, (6,), "pose_lower"))
        object.__setattr__(self, "pose_upper", _as_readonly(self.pose_upper, (6,), "pose_upper"))
        if np.any(self.pose_lower > self.pose_upper):
            raise ValueError("pose_lower must be <= pose_upper componentwise")
        if np.any(np.abs(self.pose_lower[3:]) > math.pi) or np.any(np.abs(self.pose_upper[3:]) > math.pi):
            raise ValueError("angle bounds must lie in [-pi, pi]")
        if self.planar:
            if np.any(self.frame_anchors[:, 2] != 0.0) or np.any(self.ee_offsets[:, 2] != 0.0):
                raise ValueError("planar config requires z = 0 for all anchors and offsets")
            # z, roll and pitch are pinned to 0 for planar robots
            pinned = [2, 3, 4]
            if np.any(self.pose_lower[pinned] != 0.0) or np.any(self.pose_upper[pinned] != 0.0):
                raise ValueError("planar config requires z, roll and pitch bounds fixed at 0")

    @property
    def cable_count(self):
        return self.frame_anchors.shape[0]

    @property
    def m(self):
        return self.cable_count

    def center_pose(self):
        """Midpoint of the pose box, the usual solver initial guess."""
        return Pose.from_array(0.5 * (self.pose_lower + self.pose_upper))

    def contains(self, pose):
        q = pose.as_array() if isinstance(pose, Pose) else np.asarray(pose, dtype=float)
        return bool(np.all(q >= self.pose_lower) and np.all(q <= self.pose_upper))


def attachment_points(config, pose):
    """World-frame attachment points p + R v_i for all cables, shape (m, 3)."""
    R = rotation_matrix(pose.roll, pose.pitch, pose.yaw)
    return pose.position + config.ee_offsets @ R.T


def cable_vectors(config, pose):
    """All m cable vectors l_i = (p + R v_i) - A_i, shape (m, 3), mm."""
    return attachment_points(config, pose) - config.frame_anchors


def cable_vector(config, pose, i):
    """Cable vector of cable ``i`` (0-based). Raises IndexError when out of range."""
    m = config.cable_count
    if not 0 <= i < m:
        raise IndexError(f"cable index {i} out of range for m={m}")
    return cable_vectors(config, pose)[i]


def inverse_kinematics(config, pose):
    """Exact IK: cable lengths ``||l_i||`` for a pose, shape (m,), mm."""
    return np.linalg.norm(cable_vectors(config, pose), axis=1)

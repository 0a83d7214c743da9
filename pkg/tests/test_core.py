"""Geometry and inverse-kinematics tests.

Rotation matrices are checked against an independent quaternion oracle;
cable vectors and lengths against brute-force per-cable recomputation.
"""

import math

import numpy as np
import pytest

from cdprkit.configs import bundled_config
from cdprkit.core import (
    CdprConfig,
    Pose,
    cable_vector,
    cable_vectors,
    inverse_kinematics,
    rotation_matrix,
)


# ---------------------------------------------------------------------------
# independent quaternion oracle (w, x, y, z), composition Rz(yaw) Ry(pitch) Rx(roll)


def quat_from_axis_angle(axis, angle):
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    half = 0.5 * angle
    return np.concatenate([[math.cos(half)], math.sin(half) * axis])


def quat_mul(a, b):
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return np.array(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ]
    )


def quat_to_matrix(q):
    w, x, y, z = q / np.linalg.norm(q)
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )


def oracle_rotation(roll, pitch, yaw):
    q = quat_mul(
        quat_from_axis_angle([0, 0, 1], yaw),
        quat_mul(quat_from_axis_angle([0, 1, 0], pitch), quat_from_axis_angle([1, 0, 0], roll)),
    )
    return quat_to_matrix(q)


def make_config(anchors, offsets, planar=False):
    anchors = np.atleast_2d(np.asarray(anchors, dtype=float))
    offsets = np.atleast_2d(np.asarray(offsets, dtype=float))
    # pad to the minimum cable count with copies of the last row
    while anchors.shape[0] < 3:
        anchors = np.vstack([anchors, anchors[-1]])
        offsets = np.vstack([offsets, offsets[-1]])
    return CdprConfig(
        name="test",
        frame_anchors=anchors,
        ee_offsets=offsets,
        planar=planar,
        pose_lower=np.array([-2000.0, -2000.0, -2000.0, -math.pi, -math.pi, -math.pi]),
        pose_upper=np.array([2000.0, 2000.0, 2000.0, math.pi, math.pi, math.pi]),
    )


# ---------------------------------------------------------------------------
# rotation_matrix


def test_rotation_zero_is_identity():
    assert np.array_equal(rotation_matrix(0.0, 0.0, 0.0), np.eye(3))


def test_rotation_pure_roll_quarter_turn():
    R = rotation_matrix(math.pi / 2, 0.0, 0.0)
    expected = np.array([[1, 0, 0], [0, 0, -1], [0, 1, 0]], dtype=float)
    assert np.allclose(R, expected, atol=1e-15)


def test_rotation_matches_quaternion_oracle():
    R = rotation_matrix(0.3, -0.2, 0.1)
    assert np.max(np.abs(R.T @ R - np.eye(3))) < 1e-12
    assert abs(np.linalg.det(R) - 1.0) < 1e-12
    assert np.allclose(R, oracle_rotation(0.3, -0.2, 0.1), atol=1e-12)


def test_rotation_orthonormal_over_angle_grid():
    rng = np.random.default_rng(7)
    for _ in range(200):
        roll, pitch, yaw = rng.uniform(-math.pi, math.pi, size=3)
        R = rotation_matrix(roll, pitch, yaw)
        assert np.max(np.abs(R.T @ R - np.eye(3))) < 1e-12
        assert abs(np.linalg.det(R) - 1.0) < 1e-12
        assert np.allclose(R, oracle_rotation(roll, pitch, yaw), atol=1e-12)


# ---------------------------------------------------------------------------
# Pose / CdprConfig validation


def test_pose_rejects_out_of_range_angles():
    with pytest.raises(ValueError):
        Pose(0, 0, 0, 3.5, 0, 0)
    with pytest.raises(ValueError):
        Pose(0, 0, float("nan"), 0, 0, 0)


def test_pose_array_round_trip():
    q = np.array([1.0, 2.0, 3.0, 0.1, -0.2, 0.3])
    assert np.array_equal(Pose.from_array(q).as_array(), q)


def test_config_requires_three_cables():
    with pytest.raises(ValueError, match="at least 3"):
        CdprConfig(
            name="bad",
            frame_anchors=np.zeros((2, 3)),
            ee_offsets=np.zeros((2, 3)),
            planar=False,
            pose_lower=np.zeros(6),
            pose_upper=np.ones(6),
        )


def test_config_rejects_inverted_bounds():
    with pytest.raises(ValueError, match="pose_lower"):
        CdprConfig(
            name="bad",
            frame_anchors=np.zeros((3, 3)),
            ee_offsets=np.zeros((3, 3)),
            planar=False,
            pose_lower=np.ones(6),
            pose_upper=np.zeros(6),
        )


def test_planar_config_rejects_out_of_plane_geometry():
    with pytest.raises(ValueError, match="planar"):
        CdprConfig(
            name="bad",
            frame_anchors=np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]),
            ee_offsets=np.zeros((3, 3)),
            planar=True,
            pose_lower=np.array([0.0, 0.0, 0.0, 0.0, 0.0, -1.0]),
            pose_upper=np.array([1.0, 1.0, 0.0, 0.0, 0.0, 1.0]),
        )


# ---------------------------------------------------------------------------
# cable_vector / inverse_kinematics


def test_cable_vector_offset_free():
    config = make_config([0.0, 0.0, 0.0], [0.0, 0.0, 0.0])
    pose = Pose(500, 500, 500, 0, 0, 0)
    assert np.allclose(cable_vector(config, pose, 0), [500, 500, 500])


def test_cable_vector_coincident_endpoints():
    config = make_config([1000.0, 0.0, 0.0], [0.0, 0.0, 0.0])
    pose = Pose(1000, 0, 0, 0, 0, 0)
    assert np.allclose(cable_vector(config, pose, 0), [0, 0, 0], atol=1e-12)


def test_cable_vector_with_rotated_offset():
    # quaternion-oracle evaluation of (p + R v) - A for a quarter yaw turn
    config = make_config([0.0, 0.0, 1000.0], [50.0, 0.0, 0.0])
    pose = Pose(500, 500, 500, 0, 0, math.pi / 2)
    expected = (
        np.array([500.0, 500.0, 500.0])
        + oracle_rotation(0.0, 0.0, math.pi / 2) @ np.array([50.0, 0.0, 0.0])
        - np.array([0.0, 0.0, 1000.0])
    )
    got = cable_vector(config, pose, 0)
    assert np.allclose(got, expected, atol=1e-9)
    assert np.allclose(got, [500.0, 550.0, -500.0], atol=1e-9)


def test_cable_vector_index_out_of_range():
    config = make_config([0.0, 0.0, 0.0], [0.0, 0.0, 0.0])
    with pytest.raises(IndexError):
        cable_vector(config, Pose(0, 0, 0, 0, 0, 0), 3)
    with pytest.raises(IndexError):
        cable_vector(config, Pose(0, 0, 0, 0, 0, 0), -1)


def test_ik_single_cable_norm():
    config = make_config([0.0, 0.0, 0.0], [0.0, 0.0, 0.0])
    lengths = inverse_kinematics(config, Pose(500, 500, 500, 0, 0, 0))
    assert abs(lengths[0] - 866.0254037844386) < 1e-9  # 500 * sqrt(3)


def test_ik_zero_at_coincidence():
    config = make_config([100.0, 200.0, 300.0], [0.0, 0.0, 0.0])
    lengths = inverse_kinematics(config, Pose(100, 200, 300, 0, 0, 0))
    assert np.allclose(lengths, 0.0, atol=1e-12)


def test_ik_matches_per_cable_oracle_on_simc8():
    config = bundled_config("simc8")
    rng = np.random.default_rng(11)
    for _ in range(20):
        q = rng.uniform(config.pose_lower, config.pose_upper)
        pose = Pose.from_array(q)
        lengths = inverse_kinematics(config, pose)
        R = oracle_rotation(pose.roll, pose.pitch, pose.yaw)
        for i in range(config.cable_count):
            attach = pose.position + R @ config.ee_offsets[i]
            expected = math.sqrt(float(np.sum((attach - config.frame_anchors[i]) ** 2)))
            assert abs(lengths[i] - expected) < 1e-9


def test_translation_equivariance():
    config = bundled_config("simc6")
    rng = np.random.default_rng(3)
    for _ in range(20):
        q = rng.uniform(config.pose_lower, config.pose_upper)
        shift = rng.uniform(-500, 500, size=3)
        shifted = CdprConfig(
            name="shifted",
            frame_anchors=config.frame_anchors + shift,
            ee_offsets=config.ee_offsets,
            planar=False,
            pose_lower=config.pose_lower - np.r_[np.abs(shift) + 1, np.zeros(3)],
            pose_upper=config.pose_upper + np.r_[np.abs(shift) + 1, np.zeros(3)],
        )
        q_shifted = q.copy()
        q_shifted[:3] += shift
        base = inverse_kinematics(config, Pose.from_array(q))
        moved = inverse_kinematics(shifted, Pose.from_array(q_shifted))
        assert np.allclose(base, moved, atol=1e-9)


def test_zero_offsets_make_lengths_orientation_independent():
    config = make_config(
        [[0.0, 0.0, 1000.0], [1000.0, 0.0, 1000.0], [500.0, 1000.0, 1000.0]],
        np.zeros((3, 3)),
    )
    rng = np.random.default_rng(5)
    base = inverse_kinematics(config, Pose(400, 300, 200, 0, 0, 0))
    for _ in range(20):
        roll, pitch, yaw = rng.uniform(-math.pi, math.pi, size=3)
        rotated = inverse_kinematics(config, Pose(400, 300, 200, roll, pitch, yaw))
        assert np.allclose(base, rotated, atol=1e-9)


def test_planar_cable_vectors_stay_in_plane():
    config = bundled_config("planar4")
    rng = np.random.default_rng(9)
    for _ in range(50):
        q = rng.uniform(config.pose_lower, config.pose_upper)
        vectors = cable_vectors(config, Pose.from_array(q))
        assert np.all(vectors[:, 2] == 0.0)

"""Regenerate the bundled config files in src/cdprkit/configs/.

All spatial configs share a 1000 mm cube frame and a 60x60x40 mm
end-effector box; they differ in how many cube vertices/edge midpoints carry
anchors. planar4 is a 4-cable planar robot on the z=0 face.
"""

import pathlib

import numpy as np

from cdprkit.configs import save_config
from cdprkit.core import CdprConfig

CUBE = 1000.0
# platform half-extents
PX, PY, PZ = 30.0, 30.0, 20.0

SPATIAL_LOWER = [100.0, 100.0, 100.0, -0.26, -0.26, 0.0]
SPATIAL_UPPER = [900.0, 900.0, 900.0, 0.26, 0.26, 0.0]

TOP_ANCHORS = [
    (0.0, 0.0, CUBE),
    (CUBE, 0.0, CUBE),
    (CUBE, CUBE, CUBE),
    (0.0, CUBE, CUBE),
]
TOP_OFFSETS = [
    (-PX, -PY, PZ),
    (PX, -PY, PZ),
    (PX, PY, PZ),
    (-PX, PY, PZ),
]
BOTTOM_ANCHORS = [
    (0.0, 0.0, 0.0),
    (CUBE, 0.0, 0.0),
    (CUBE, CUBE, 0.0),
    (0.0, CUBE, 0.0),
]
BOTTOM_OFFSETS = [
    (-PX, -PY, -PZ),
    (PX, -PY, -PZ),
    (PX, PY, -PZ),
    (-PX, PY, -PZ),
]


def spatial(name, anchors, offsets):
    return CdprConfig(
        name=name,
        frame_anchors=np.array(anchors),
        ee_offsets=np.array(offsets),
        planar=False,
        pose_lower=np.array(SPATIAL_LOWER),
        pose_upper=np.array(SPATIAL_UPPER),
    )


def build_all():
    # simc4/simc5 anchors sit near (not on) the y=500 mid-plane of the cube:
    # the under-constrained FK then has two solution branches mirrored about
    # that plane, well separated in position but only ~25-50 mm apart in
    # length space. A descent solver from the workspace center regularly
    # lands on the wrong branch while the lengths still identify the true
    # one, which is the failure mode data-driven FK is meant to fix.
    mirror4_anchors = [(0.0, 450.0, 0.0), (CUBE, 550.0, 0.0), (CUBE, 450.0, CUBE), (0.0, 550.0, CUBE)]
    mirror4_offsets = [(-PX, -PY, PZ), (PX, -PY, PZ), (PX, PY, PZ), (-PX, PY, PZ)]
    configs = [
        spatial("simc4", mirror4_anchors, mirror4_offsets),
        spatial(
            "simc5",
            mirror4_anchors + [(CUBE / 2, 460.0, 0.0)],
            mirror4_offsets + [(0.0, -PY, -PZ)],
        ),
        # simc6/simc7 use irregular attachment layouts: with a symmetric
        # platform the 6- and 7-cable FK has near-degenerate mirrored minima
        # (flipped roll/pitch) that trap descent solvers started from the
        # workspace center; asymmetry makes the true pose the only minimum
        # reachable from there.
        spatial(
            "simc6",
            TOP_ANCHORS + [BOTTOM_ANCHORS[0], BOTTOM_ANCHORS[2]],
            [(45, 19, 10), (41, 53, 37), (8, -43, 12), (51, 6, 11), (46, 17, -20), (-15, -11, -32)],
        ),
        spatial(
            "simc7",
            TOP_ANCHORS + [BOTTOM_ANCHORS[0], BOTTOM_ANCHORS[1], (CUBE / 2, CUBE, 0.0)],
            [
                (0, 50, 6),
                (-22, 12, 7),
                (-32, -4, 36),
                (31, 39, 32),
                (25, 42, -16),
                (28, -24, -34),
                (31, -40, -8),
            ],
        ),
        spatial("simc8", TOP_ANCHORS + BOTTOM_ANCHORS, TOP_OFFSETS + BOTTOM_OFFSETS),
        spatial(
            "simc9",
            TOP_ANCHORS + BOTTOM_ANCHORS + [(CUBE / 2, 0.0, CUBE)],
            TOP_OFFSETS + BOTTOM_OFFSETS + [(0.0, -PY, PZ)],
        ),
        spatial(
            "simc10",
            TOP_ANCHORS + BOTTOM_ANCHORS + [(CUBE / 2, 0.0, CUBE), (CUBE / 2, CUBE, CUBE)],
            TOP_OFFSETS + BOTTOM_OFFSETS + [(0.0, -PY, PZ), (0.0, PY, PZ)],
        ),
        CdprConfig(
            name="planar4",
            frame_anchors=np.array(
                [(0.0, 0.0, 0.0), (CUBE, 0.0, 0.0), (CUBE, CUBE, 0.0), (0.0, CUBE, 0.0)]
            ),
            ee_offsets=np.array([(-PX, -PY, 0.0), (PX, -PY, 0.0), (PX, PY, 0.0), (-PX, PY, 0.0)]),
            planar=True,
            pose_lower=np.array([100.0, 100.0, 0.0, 0.0, 0.0, -0.26]),
            pose_upper=np.array([900.0, 900.0, 0.0, 0.0, 0.0, 0.26]),
        ),
    ]
    return configs


def main():
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "cdprkit" / "configs"
    out.mkdir(parents=True, exist_ok=True)
    for config in build_all():
        save_config(config, out / f"{config.name}.yaml")
        print(f"wrote {config.name}.yaml (m={config.cable_count})")


if __name__ == "__main__":
    main()

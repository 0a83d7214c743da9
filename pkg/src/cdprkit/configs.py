"""Robot config files: a small versioned YAML schema plus the bundled examples.

Format ``cdpr-config/1`` is a flat YAML mapping with one key per
:class:`~cdprkit.core.CdprConfig` field::

    format: cdpr-config/1
    name: simc8
    cable_count: 8
    planar: false
    frame_anchors:        # m rows of [x, y, z] in mm, world frame
    - [0.0, 0.0, 1000.0]
    ...
    ee_offsets:           # m rows of [x, y, z] in mm, body frame
    - [-30.0, -30.0, 20.0]
    ...
    pose_lower: [100.0, 100.0, 100.0, -0.26, -0.26, 0.0]
    pose_upper: [900.0, 900.0, 900.0, 0.26, 0.26, 0.0]

Every field is checked on load; violations raise :class:`SchemaError` naming
the offending key. The bundled configs simc4..simc10 place anchors on a
1000 mm cube frame with a 60x60x40 mm end-effector; planar4 is a 4-cable
planar robot on a 1000 mm square with yaw as its only free angle.
"""

from __future__ import annotations

from importlib import resources

import numpy as np
import yaml

from .core import CdprConfig
from .errors import SchemaError

__all__ = [
    "load_config",
    "save_config",
    "resolve_config",
    "bundled_config",
    "bundled_config_names",
    "FORMAT_TAG",
]

FORMAT_TAG = "cdpr-config/1"

_REQUIRED_KEYS = {
    "format": str,
    "name": str,
    "cable_count": int,
    "planar": bool,
    "frame_anchors": list,
    "ee_offsets": list,
    "pose_lower": list,
    "pose_upper": list,
}


def _check_vector_list(doc, key, rows):
    value = doc[key]
    if len(value) != rows:
        raise SchemaError(f"{key}: expected {rows} rows (cable_count), found {len(value)}")
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != 3:
            raise SchemaError(f"{key}[{i}]: expected a 3-vector, found {row!r}")
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in row):
            raise SchemaError(f"{key}[{i}]: entries must be numbers, found {row!r}")


def _parse_config(doc, source):
    if not isinstance(doc, dict):
        raise SchemaError(f"{source}: config file must be a YAML mapping")
    for key, typ in _REQUIRED_KEYS.items():
        if key not in doc:
            raise SchemaError(f"{source}: missing required key '{key}'")
        if not isinstance(doc[key], typ) or (typ is int and isinstance(doc[key], bool)):
            raise SchemaError(f"{source}: key '{key}' must be of type {typ.__name__}")
    unknown = set(doc) - set(_REQUIRED_KEYS)
    if unknown:
        raise SchemaError(f"{source}: unknown keys {sorted(unknown)}")
    if doc["format"] != FORMAT_TAG:
        raise SchemaError(f"{source}: unsupported format '{doc['format']}', expected '{FORMAT_TAG}'")
    m = doc["cable_count"]
    _check_vector_list(doc, "frame_anchors", m)
    _check_vector_list(doc, "ee_offsets", m)
    for key in ("pose_lower", "pose_upper"):
        if len(doc[key]) != 6 or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in doc[key]
        ):
            raise SchemaError(f"{source}: {key} must be a 6-vector of numbers")
    try:
        return CdprConfig(
            name=doc["name"],
            frame_anchors=np.array(doc["frame_anchors"], dtype=float),
            ee_offsets=np.array(doc["ee_offsets"], dtype=float),
            planar=doc["planar"],
            pose_lower=np.array(doc["pose_lower"], dtype=float),
            pose_upper=np.array(doc["pose_upper"], dtype=float),
        )
    except ValueError as exc:
        raise SchemaError(f"{source}: {exc}") from exc


def load_config(path):
    """Load and validate a ``cdpr-config/1`` YAML file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise SchemaError(f"{path}: not valid YAML ({exc})") from exc
    return _parse_config(doc, str(path))


def save_config(config, path):
    """Write a config to a ``cdpr-config/1`` YAML file."""
    doc = {
        "format": FORMAT_TAG,
        "name": config.name,
        "cable_count": int(config.cable_count),
        "planar": bool(config.planar),
        "frame_anchors": [[float(v) for v in row] for row in config.frame_anchors],
        "ee_offsets": [[float(v) for v in row] for row in config.ee_offsets],
        "pose_lower": [float(v) for v in config.pose_lower],
        "pose_upper": [float(v) for v in config.pose_upper],
    }
    with open(path, "w", encoding="utf-8") as fh:
        yaml.safe_dump(doc, fh, sort_keys=False, default_flow_style=None)


def bundled_config_names():
    """Names of the configs shipped with the package."""
    root = resources.files("cdprkit") / "configs"
    return sorted(p.name[: -len(".yaml")] for p in root.iterdir() if p.name.endswith(".yaml"))


def bundled_config(name):
    """Load a bundled config by name (e.g. ``"simc8"``)."""
    ref = resources.files("cdprkit") / "configs" / f"{name}.yaml"
    if not ref.is_file():
        raise KeyError(f"no bundled config named '{name}' (have {bundled_config_names()})")
    with resources.as_file(ref) as path:
        return load_config(path)


def resolve_config(name_or_path):
    """Accept either a bundled config name or a path to a config file."""
    name = str(name_or_path)
    try:
        return bundled_config(name)
    except KeyError:
        pass
    return load_config(name_or_path)

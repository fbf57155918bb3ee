# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import json
import logging
import math
from dataclasses import asdict, fields
from typing import Any, TypeVar

from qholo.adaptors.os import open_file
from qholo.config.experiment_config import (
    ConfigError,
    ExperimentConfig,
    GridConfig,
    GsConfig,
    InputPaths,
)
from qholo.metasurface.profile import OpticalConfig
from qholo.pipeline.holograms import Tier
from qholo.spad_sim.spad import SPAD_PRESETS, SpadConfig

# Get application-specific logger
logger = logging.getLogger("qholo")

_T = TypeVar("_T")

# degrees survive a dump and reload unchanged at this precision
_DEGREE_DECIMALS = 10

_TOP_LEVEL_KEYS = {
    "grid",
    "optics",
    "gs",
    "tier",
    "idler_angles_deg",
    "signal_angles_deg",
    "spad",
    "monte_carlo",
    "inputs",
    "output_dir",
}

# JSON names that differ from the dataclass field they feed
_GRID_RENAMES = {"pitch_m": "pitch"}
_OPTICS_RENAMES = {"wavelength_m": "wavelength", "focal_length_m": "focal_length"}


def _to_degrees(radians: float) -> float:
    return round(math.degrees(radians), _DEGREE_DECIMALS)


def _number(value: Any, key: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"'{key}' must be a number")
    return float(value)


def _angles_from_degrees(value: Any, key: str) -> tuple[float, ...]:
    if not isinstance(value, list):
        raise ConfigError(f"'{key}' must be a list of angles in degrees")
    angles = []
    for entry in value:
        if isinstance(entry, bool) or not isinstance(entry, (int, float)):
            raise ConfigError(f"'{key}' holds a non-numeric angle {entry!r}")
        angles.append(math.radians(entry))
    return tuple(angles)


class JsonConfigParser:
    """Reads and writes the single JSON document that drives an experiment.

    Angles are degrees in the document and radians everywhere else. A run
    manifest (a document with a top-level "config" key) is accepted in place
    of a config file so that finished runs can be replayed.
    """

    @staticmethod
    def _section(document: dict[str, Any], key: str) -> dict[str, Any]:
        section = document.get(key, {})
        if not isinstance(section, dict):
            raise ConfigError(f"'{key}' must be a JSON object")
        return section

    @staticmethod
    def _spad_section(document: dict[str, Any]) -> dict[str, Any]:
        """Detector settings, starting from a named preset when one is given."""
        section = dict(JsonConfigParser._section(document, "spad"))
        if "preset" not in section:
            return section
        name = section.pop("preset")
        if not isinstance(name, str) or name not in SPAD_PRESETS:
            raise ConfigError(
                f"Unknown spad preset {name!r}; expected one of {sorted(SPAD_PRESETS)}"
            )
        return {**asdict(SPAD_PRESETS[name]), **section}

    @staticmethod
    def _build(cls: type[_T], section: dict[str, Any], key: str, renames: dict[str, str]) -> _T:
        known = {item.name for item in fields(cls)}  # type: ignore[arg-type]
        values = {}
        for name, value in section.items():
            field_name = renames.get(name, name)
            if field_name not in known or (name not in renames and name in renames.values()):
                raise ConfigError(f"Unknown key '{name}' in '{key}'")
            values[field_name] = value
        try:
            return cls(**values)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid '{key}' settings: {e}") from e

    @staticmethod
    def parse_experiment_config(document: Any) -> ExperimentConfig:
        if not isinstance(document, dict):
            raise ConfigError("The experiment config must be a JSON object")
        if "config" in document:
            logger.info("Replaying the configuration recorded in a run manifest")
            document = document["config"]
            if not isinstance(document, dict):
                raise ConfigError("The manifest 'config' entry must be a JSON object")
        unknown = set(document) - _TOP_LEVEL_KEYS
        if unknown:
            raise ConfigError(f"Unknown config keys: {sorted(unknown)}")

        gs_section = dict(JsonConfigParser._section(document, "gs"))
        if "phase_tolerance" in gs_section:
            raise ConfigError(
                "Unknown key 'phase_tolerance' in 'gs'; use 'phase_tolerance_deg' "
                "or 'phase_tolerance_rad'"
            )
        if "phase_tolerance_deg" in gs_section and "phase_tolerance_rad" in gs_section:
            raise ConfigError("Give 'gs.phase_tolerance_deg' or 'gs.phase_tolerance_rad', not both")
        if "phase_tolerance_deg" in gs_section:
            degrees = _number(gs_section.pop("phase_tolerance_deg"), "gs.phase_tolerance_deg")
            gs_section["phase_tolerance"] = math.radians(degrees)
        if "phase_tolerance_rad" in gs_section:
            gs_section["phase_tolerance"] = _number(
                gs_section.pop("phase_tolerance_rad"), "gs.phase_tolerance_rad"
            )

        values: dict[str, Any] = {
            "grid": JsonConfigParser._build(
                GridConfig, JsonConfigParser._section(document, "grid"), "grid", _GRID_RENAMES
            ),
            "optics": JsonConfigParser._build(
                OpticalConfig,
                JsonConfigParser._section(document, "optics"),
                "optics",
                _OPTICS_RENAMES,
            ),
            "gs": JsonConfigParser._build(GsConfig, gs_section, "gs", {}),
            "spad": JsonConfigParser._build(
                SpadConfig, JsonConfigParser._spad_section(document), "spad", {}
            ),
            "inputs": JsonConfigParser._build(
                InputPaths, JsonConfigParser._section(document, "inputs"), "inputs", {}
            ),
        }
        if "tier" in document:
            try:
                values["tier"] = Tier(document["tier"])
            except ValueError as e:
                raise ConfigError(
                    f"Unknown tier {document['tier']!r}; expected one of "
                    f"{[tier.value for tier in Tier]}"
                ) from e
        if "idler_angles_deg" in document:
            values["idler_angles"] = _angles_from_degrees(
                document["idler_angles_deg"], "idler_angles_deg"
            )
        if "signal_angles_deg" in document:
            values["signal_angles"] = _angles_from_degrees(
                document["signal_angles_deg"], "signal_angles_deg"
            )
        if "monte_carlo" in document:
            if not isinstance(document["monte_carlo"], bool):
                raise ConfigError("'monte_carlo' must be true or false")
            values["monte_carlo"] = document["monte_carlo"]
        if "output_dir" in document:
            if not isinstance(document["output_dir"], str):
                raise ConfigError("'output_dir' must be a string")
            values["output_dir"] = document["output_dir"]
        return ExperimentConfig(**values)

    @staticmethod
    def load_experiment_config(config_file_path: str) -> ExperimentConfig:
        """Load an experiment config (or a run manifest) from a JSON file.

        Raises:
            FileNotFoundError: If the config file is not found
            json.JSONDecodeError: If the JSON file is invalid
            ConfigError: If the document does not describe a valid experiment
        """
        try:
            document = json.loads(open_file(config_file_path))
        except FileNotFoundError:
            logger.error("Config file not found: %s", config_file_path)
            raise
        except json.JSONDecodeError:
            logger.error("Invalid JSON in config file: %s", config_file_path)
            raise
        config = JsonConfigParser.parse_experiment_config(document)
        logger.debug("Loaded experiment config from %s", config_file_path)
        return config

    @staticmethod
    def dump_experiment_config(config: ExperimentConfig) -> dict[str, Any]:
        """Canonical degree-based document; parse_experiment_config reads it back."""
        grid = asdict(config.grid)
        grid["pitch_m"] = grid.pop("pitch")
        optics = asdict(config.optics)
        optics["wavelength_m"] = optics.pop("wavelength")
        optics["focal_length_m"] = optics.pop("focal_length")
        gs = asdict(config.gs)
        # radians, so the stopping rule replays exactly
        gs["phase_tolerance_rad"] = gs.pop("phase_tolerance")
        return {
            "grid": grid,
            "optics": optics,
            "gs": gs,
            "tier": config.tier.value,
            "idler_angles_deg": [_to_degrees(angle) for angle in config.idler_angles],
            "signal_angles_deg": [_to_degrees(angle) for angle in config.signal_angles],
            "spad": asdict(config.spad),
            "monte_carlo": config.monte_carlo,
            "inputs": asdict(config.inputs),
            "output_dir": config.output_dir,
        }

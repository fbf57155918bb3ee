# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import math
from dataclasses import dataclass, field

from qholo.field_core.grid import GridSpec
from qholo.metasurface.profile import OpticalConfig
from qholo.metasurface.profile import default_config as default_optical_config
from qholo.metasurface.profile import field_of_view_fraction
from qholo.pipeline.holograms import Tier
from qholo.spad_sim.spad import SpadConfig
from qholo.spad_sim.spad import default_config as default_spad_config

# share of the in-aperture image plane the canonical letters may occupy
CANONICAL_FOV_SHARE = 0.8


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class GridConfig:
    size: int = 512
    pitch: float = 0.7e-6  # meters
    # None lays the canonical target out inside 0.8 of the field of view at focus
    extent_fraction: float | None = None
    letter_scale: int | None = None

    def __post_init__(self) -> None:
        if self.size < 2:
            raise ConfigError(f"Grid size must be at least 2, got {self.size}")
        if not math.isfinite(self.pitch) or self.pitch <= 0:
            raise ConfigError(f"Grid pitch must be positive, got {self.pitch}")
        if self.extent_fraction is not None and not 0 < self.extent_fraction <= 1:
            raise ConfigError(f"extent_fraction must lie in (0, 1], got {self.extent_fraction}")
        if self.letter_scale is not None and self.letter_scale < 1:
            raise ConfigError(f"letter_scale must be >= 1, got {self.letter_scale}")

    def source_grid(self) -> GridSpec:
        return GridSpec(self.size, self.size, self.pitch)

    def resolved_extent(self, optics: OpticalConfig) -> float:
        if self.extent_fraction is not None:
            return self.extent_fraction
        return CANONICAL_FOV_SHARE * field_of_view_fraction(self.source_grid(), optics)


@dataclass(frozen=True)
class GsConfig:
    max_iterations: int = 200
    amp_tolerance: float = 0.05
    phase_tolerance: float = 0.05  # radians
    seed: int = 0
    weighted: bool = False

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ConfigError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.amp_tolerance <= 0 or self.phase_tolerance <= 0:
            raise ConfigError("GS tolerances must be positive")
        if self.seed < 0:
            raise ConfigError(f"GS seed must be non-negative, got {self.seed}")


@dataclass(frozen=True)
class InputPaths:
    """Files produced by earlier runs; unset entries are recomputed in memory."""

    target_image: str | None = None
    target_descriptor: str | None = None
    masks_dir: str | None = None
    profile_dir: str | None = None
    intensity_map: str | None = None
    images_dir: str | None = None
    frames_dir: str | None = None
    sweep_csv: str | None = None

    def __post_init__(self) -> None:
        if (self.target_image is None) != (self.target_descriptor is None):
            raise ConfigError("target_image and target_descriptor must be given together")


# built from whole degrees so a manifest written in degrees reloads to the same radians
DEFAULT_IDLER_ANGLES = tuple(math.radians(degrees) for degrees in (0.0, 45.0, 90.0, 135.0))
DEFAULT_SIGNAL_ANGLES = tuple(math.radians(15.0 * step) for step in range(13))


@dataclass(frozen=True)
class ExperimentConfig:
    grid: GridConfig = field(default_factory=GridConfig)
    optics: OpticalConfig = default_optical_config
    gs: GsConfig = field(default_factory=GsConfig)
    tier: Tier = Tier.IDEAL
    idler_angles: tuple[float, ...] = DEFAULT_IDLER_ANGLES  # radians
    signal_angles: tuple[float, ...] = DEFAULT_SIGNAL_ANGLES  # radians
    spad: SpadConfig = default_spad_config
    # pass herald and sweep images through the photon counting detector
    monte_carlo: bool = False
    inputs: InputPaths = field(default_factory=InputPaths)
    output_dir: str = "qholo-out"

    def __post_init__(self) -> None:
        for name in ("idler_angles", "signal_angles"):
            angles = getattr(self, name)
            if not all(math.isfinite(angle) for angle in angles):
                raise ConfigError(f"{name} must be finite")
        if not self.output_dir:
            raise ConfigError("output_dir must not be empty")

    def require_signal_angles(self) -> None:
        if not self.signal_angles:
            raise ConfigError("The signal polarizer sweep needs at least one angle")


default_config = ExperimentConfig()

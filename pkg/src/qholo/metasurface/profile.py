# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Single geometric-phase metasurface combining two holograms with lens terms."""

import logging
from dataclasses import dataclass

import numpy as np

from qholo.field_core.grid import (
    ComplexArray,
    FieldValidationError,
    GridSpec,
    PhaseMask,
    RealArray,
)
from qholo.field_core.lens import LensKind, unwrapped_lens_phase
from qholo.gs_design.gs_engine import PhaseMaskPair

logger = logging.getLogger(__name__)

# |sum| below this is treated as a vanished superposition; cos(pi/2) is ~6e-17, not 0
DEGENERATE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class OpticalConfig:
    wavelength: float = 810e-9  # meters
    focal_length: float = 1000e-6  # meters
    conversion_efficiency: float = 1.0  # eta, cross-polarized fraction

    def __post_init__(self) -> None:
        if not np.isfinite(self.wavelength) or self.wavelength <= 0:
            raise FieldValidationError(f"Wavelength must be positive, got {self.wavelength}")
        if not np.isfinite(self.focal_length) or self.focal_length <= 0:
            raise FieldValidationError(
                f"Focal length must be positive, got {self.focal_length}"
            )
        if not 0.0 <= self.conversion_efficiency <= 1.0:
            raise FieldValidationError(
                f"Conversion efficiency must lie in [0, 1], got {self.conversion_efficiency}"
            )


default_config = OpticalConfig()


@dataclass(frozen=True, eq=False)
class MetasurfaceProfile:
    grid: GridSpec
    trl_phase: PhaseMask  # Arg(t_RL)
    rotation: RealArray  # nanofin angle, trl_phase / 2
    degenerate_pixels: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.trl_phase.grid != self.grid:
            raise FieldValidationError("Profile phase must live on the profile grid")
        if self.rotation.shape != self.grid.shape:
            raise FieldValidationError("Rotation map shape does not match the profile grid")

    @classmethod
    def from_trl_phase(
        cls, trl_phase: PhaseMask, degenerate_pixels: tuple[tuple[int, int], ...] = ()
    ) -> "MetasurfaceProfile":
        return cls(trl_phase.grid, trl_phase, trl_phase.phase / 2.0, degenerate_pixels)

    @property
    def degenerate_fraction(self) -> float:
        return len(self.degenerate_pixels) / self.grid.size

    def t_rl(self) -> ComplexArray:
        return np.asarray(np.exp(1j * self.trl_phase.phase))

    def t_lr(self) -> ComplexArray:
        # geometric-phase elements: t_LR = conj(t_RL)
        return np.asarray(np.conj(self.t_rl()))


def field_of_view_fraction(source_grid: GridSpec, config: OpticalConfig) -> float:
    """Share of the ideal image plane that lies inside the aperture at focus.

    The ideal plane spans lambda*f/pitch while the metasurface spans N*pitch.
    """
    n = min(source_grid.width, source_grid.height)
    fraction = n * source_grid.pitch**2 / (config.wavelength * config.focal_length)
    return float(min(1.0, fraction))


def synthesize(masks: PhaseMaskPair, config: OpticalConfig = default_config) -> MetasurfaceProfile:
    """Arg(e^{i phi_L} e^{i lens} + e^{-i phi_R} e^{-i lens}) with the converging lens phase.

    Pixels whose two-term sum vanishes get phase 0 and are listed as degenerate.
    """
    grid = masks.grid
    lens = unwrapped_lens_phase(
        grid, config.focal_length, config.wavelength, LensKind.CONVERGING
    )
    superposition = np.exp(1j * (masks.phi_L.phase + lens)) + np.exp(
        -1j * (masks.phi_R.phase + lens)
    )
    degenerate = np.abs(superposition) <= DEGENERATE_TOLERANCE
    phase = np.where(degenerate, 0.0, np.angle(superposition))
    rows, cols = np.nonzero(degenerate)
    degenerate_pixels = tuple(zip(rows.tolist(), cols.tolist()))
    if degenerate_pixels:
        logger.warning(
            "%d degenerate pixels while combining phase masks", len(degenerate_pixels)
        )
    profile = MetasurfaceProfile.from_trl_phase(
        PhaseMask.from_radians(grid, phase), degenerate_pixels
    )
    logger.info(
        "Synthesized %dx%d metasurface profile (lambda=%.4g m, f=%.4g m)",
        grid.width,
        grid.height,
        config.wavelength,
        config.focal_length,
    )
    return profile

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""psi_L, psi_R image-plane holograms for the ideal and physical tiers."""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from qholo.field_core.grid import ComplexField, GridSpec, fourier_plane_grid
from qholo.gs_design.gs_engine import PhaseMaskPair, reconstruct
from qholo.gs_design.target import TargetHologram, TargetValidationError
from qholo.metasurface.forward_model import image_at_focus, uniform_aperture
from qholo.metasurface.profile import MetasurfaceProfile, OpticalConfig, synthesize
from qholo.metrics.regions import RegionMask
from qholo.quantum.kets import PolarizationKet

logger = logging.getLogger(__name__)


class Tier(Enum):
    IDEAL = "ideal"
    PHYSICAL = "physical"


@dataclass(frozen=True, eq=False)
class HologramPair:
    tier: Tier
    psi_L: ComplexField
    psi_R: ComplexField
    masks: RegionMask
    profile: MetasurfaceProfile | None = None

    def leakage(self) -> float:
        """Fraction of the combined |psi_L|^2 + |psi_R|^2 energy falling outside every letter."""
        letters = np.logical_or.reduce(list(self.masks.letter_pixels.values()))
        intensity = self.psi_L.intensity() + self.psi_R.intensity()
        total = float(np.sum(intensity))
        if total == 0:
            return 0.0
        return float(np.sum(intensity[~letters])) / total


def _ideal_masks(
    target: TargetHologram, source_grid: GridSpec, config: OpticalConfig
) -> RegionMask:
    image_grid = fourier_plane_grid(source_grid, config.wavelength, config.focal_length)
    return RegionMask.from_target(target.relabel(image_grid))


def build_ideal_holograms(
    target: TargetHologram, phase_masks: PhaseMaskPair, config: OpticalConfig
) -> HologramPair:
    """Direct Fourier transforms of the designed masks, on the Fourier-plane grid."""
    image_grid = fourier_plane_grid(phase_masks.grid, config.wavelength, config.focal_length)
    source = uniform_aperture(phase_masks.grid)
    return HologramPair(
        Tier.IDEAL,
        reconstruct(phase_masks.phi_L, source, image_grid),
        reconstruct(phase_masks.phi_R, source, image_grid),
        _ideal_masks(target, phase_masks.grid, config),
    )


def build_physical_holograms(
    target: TargetHologram, profile: MetasurfaceProfile, config: OpticalConfig
) -> HologramPair:
    """Images at focus behind the single geometric-phase metasurface.

    Both fields share one normalization so that their relative brightness,
    and with it the interference between them, is preserved.
    """
    psi_L = image_at_focus(profile, PolarizationKet.left(), config)
    psi_R = image_at_focus(profile, PolarizationKet.right(), config)
    mean_energy = (psi_L.energy() + psi_R.energy()) / 2
    if mean_energy > 0:
        scale = 1 / math.sqrt(mean_energy)
        psi_L, psi_R = psi_L.scaled(scale), psi_R.scaled(scale)
    logger.info(
        "Physical holograms: %.1f%% of the converted energy stays in the image window",
        100 * mean_energy,
    )
    masks = _ideal_masks(target, profile.grid, config).resampled(profile.grid)
    return HologramPair(Tier.PHYSICAL, psi_L, psi_R, masks, profile)


def build_holograms(
    tier: Tier,
    target: TargetHologram,
    config: OpticalConfig,
    phase_masks: PhaseMaskPair | None = None,
    profile: MetasurfaceProfile | None = None,
) -> HologramPair:
    """Holograms of the requested tier.

    The ideal tier needs the phase masks. The physical tier uses `profile`
    when given and otherwise synthesizes one from the masks.
    """
    if tier is Tier.IDEAL:
        if phase_masks is None:
            raise TargetValidationError("The ideal tier needs designed phase masks")
        return build_ideal_holograms(target, phase_masks, config)
    if profile is None:
        if phase_masks is None:
            raise TargetValidationError("The physical tier needs phase masks or a profile")
        profile = synthesize(phase_masks, config)
    return build_physical_holograms(target, profile, config)

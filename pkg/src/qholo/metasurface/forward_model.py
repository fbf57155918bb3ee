# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Physical-tier forward model: metasurface plane to the image plane at distance f.

The ideal-tier hologram dft2(U e^{i phi}) lives on the Fourier-plane grid of
pitch lambda*f/(N*pitch), which is the sampling the focused physical image
has at distance f. Only the central N*pitch^2/(lambda*f) of that plane falls
inside the physical grid; compare_tiers resamples between the two.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy import ndimage, stats

from qholo.field_core.grid import ComplexField, GridSpec, RealArray
from qholo.field_core.propagation import crop_field, pad_field, propagate
from qholo.field_core.resampling import resample_map
from qholo.metasurface.jones import jones_apply
from qholo.metasurface.profile import MetasurfaceProfile, OpticalConfig
from qholo.quantum.kets import PolarizationKet

logger = logging.getLogger(__name__)

DEFAULT_PAD_FACTOR = 2


def uniform_aperture(grid: GridSpec) -> ComplexField:
    """Unit-energy plane-wave illumination over the whole metasurface."""
    return ComplexField.uniform(grid, 1.0 / np.sqrt(grid.size))


def image_at_focus(
    profile: MetasurfaceProfile,
    incident: PolarizationKet,
    config: OpticalConfig,
    pad_factor: int = DEFAULT_PAD_FACTOR,
) -> ComplexField:
    """Cross-polarized output propagated by the focal length.

    LCP-dominant incidence keeps the RCP output (the psi_L image), RCP-dominant
    incidence keeps the LCP output (the psi_R image). The field is zero-padded
    by pad_factor before propagation and cropped back to the profile grid.
    """
    outputs = jones_apply(profile, incident, uniform_aperture(profile.grid), config)
    if incident.dominant_handedness() == "L":
        selected = outputs.cross_rcp
    else:
        selected = outputs.cross_lcp
    propagated = propagate(
        pad_field(selected, pad_factor), config.focal_length, config.wavelength
    )
    image = crop_field(propagated, profile.grid)
    logger.debug(
        "Image at focus for %s-dominant incidence: %.4g of %.4g energy inside the window",
        incident.dominant_handedness(),
        image.energy(),
        selected.energy(),
    )
    return image


def concentration_ratio(intensity: RealArray) -> float:
    """N * sum(I^2) / sum(I)^2: 1 for a flat map, N for a single bright pixel."""
    total = float(np.sum(intensity))
    if total <= 0:
        return 0.0
    return float(intensity.size * np.sum(intensity**2) / total**2)


@dataclass(frozen=True)
class TierComparison:
    pearson_matched: float
    pearson_crossed: float  # nan when no crossed reference was given
    letter_energy_fraction: float  # nan when no letter mask was given
    concentration_ratio: float


def _pearson(a: RealArray, b: RealArray) -> float:
    if np.ptp(a) == 0 or np.ptp(b) == 0:
        return float("nan")
    return float(np.clip(stats.pearsonr(a.ravel(), b.ravel())[0], -1.0, 1.0))


def compare_tiers(
    physical: ComplexField,
    ideal_matched: ComplexField,
    ideal_crossed: ComplexField | None = None,
    letters: NDArray[np.bool_] | None = None,
    footprint_average: bool = True,
) -> TierComparison:
    """Correlate a physical image with ideal-tier holograms resampled onto its grid.

    With footprint_average the physical intensity is box-averaged over one
    ideal pixel so both maps carry the same resolution. `letters` is a mask on
    the ideal grid; the fraction of physical energy inside it is reported.
    """
    physical_intensity = physical.intensity()
    if footprint_average:
        size = max(1, int(round(ideal_matched.grid.pitch / physical.grid.pitch)))
        physical_intensity = ndimage.uniform_filter(physical_intensity, size=size, mode="constant")

    def resampled(field: ComplexField) -> RealArray:
        return np.asarray(resample_map(field.intensity(), field.grid, physical.grid, order=1))

    matched = _pearson(physical_intensity, resampled(ideal_matched))
    crossed = (
        _pearson(physical_intensity, resampled(ideal_crossed))
        if ideal_crossed is not None
        else float("nan")
    )
    letter_fraction = float("nan")
    if letters is not None:
        labels = letters.astype(np.int64)
        mask = resample_map(labels, ideal_matched.grid, physical.grid, order=0) > 0
        raw = physical.intensity()
        total = float(np.sum(raw))
        letter_fraction = float(np.sum(raw[mask]) / total) if total > 0 else 0.0
    return TierComparison(
        pearson_matched=matched,
        pearson_crossed=crossed,
        letter_energy_fraction=letter_fraction,
        concentration_ratio=concentration_ratio(physical.intensity()),
    )

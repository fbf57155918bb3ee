# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Quantum-eraser experiments on a pair of holograms.

The runner turns psi_L, psi_R into the heralded image set and the signal
polarizer sweeps, and optionally passes every image through the photon
counting detector. Photon budgets follow image brightness: an image carrying
half the light of the no-eraser reference gets half the photons.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from qholo.artifact_management.artifact_store import read_masks, read_profile
from qholo.config.experiment_config import ExperimentConfig
from qholo.field_core.grid import FieldValidationError, GridSpec, fourier_plane_grid
from qholo.gs_design.gs_engine import ConvergenceReport, PhaseMaskPair, modified_gs
from qholo.gs_design.target import TargetHologram, canonical_target, load_target
from qholo.metasurface.forward_model import uniform_aperture
from qholo.metrics.regions import RegionMask
from qholo.metrics.report import MetricsReport, summarize_erasure
from qholo.metrics.visibility import SweepSample
from qholo.pipeline.holograms import HologramPair, Tier, build_holograms
from qholo.quantum.intensity import IntensityMap, heralded_intensity, unheralded_intensity
from qholo.quantum.kets import PolarizationKet
from qholo.quantum.state import (
    TwoPhotonState,
    apply_metasurface,
    bell_state,
    hybrid_state,
    project_idler,
    project_signal_polarizer,
)
from qholo.spad_sim.spad import (
    FrameStack,
    SpadConfig,
    SpadConfigError,
    accumulate,
    accumulate_subtract,
    simulate_background,
    simulate_frames,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MeasuredImage:
    signal: FrameStack
    background: FrameStack
    raw: IntensityMap
    recovered: IntensityMap


@dataclass(frozen=True, eq=False)
class HeraldSet:
    reference: IntensityMap  # no idler polarizer
    erased: dict[float, IntensityMap]  # keyed by idler angle in radians
    probabilities: dict[float, float] = field(default_factory=dict)
    raw: dict[float, IntensityMap] = field(default_factory=dict)


def herald_images(holograms: HologramPair, idler_angles: Sequence[float]) -> HeraldSet:
    """The no-eraser image plus one heralded image per idler polarizer angle."""
    state = hybrid_state(holograms.psi_L, holograms.psi_R)
    reference = unheralded_intensity(state)
    erased: dict[float, IntensityMap] = {}
    probabilities: dict[float, float] = {}
    for angle in idler_angles:
        heralded, probability = project_idler(state, PolarizationKet.linear(angle))
        erased[angle] = heralded_intensity(heralded)
        probabilities[angle] = probability
        logger.info(
            "Idler polarizer at %.1f deg heralds with probability %.4f",
            math.degrees(angle),
            probability,
        )
    return HeraldSet(reference, erased, probabilities)


def letter_means(image: IntensityMap, masks: RegionMask) -> dict[str, float]:
    return {
        letter: image.mean_over(np.nonzero(masks.letter_pixels[letter]))
        for letter in masks.letters
    }


def sweep_images(
    holograms: HologramPair, signal_angles: Sequence[float], eraser: bool
) -> list[IntensityMap]:
    """Images behind the signal polarizer at each angle, idler at H or unpolarized."""
    intermediate: TwoPhotonState = apply_metasurface(bell_state(), holograms.psi_L, holograms.psi_R)
    images: list[IntensityMap] = []
    for angle in signal_angles:
        signal_projected = project_signal_polarizer(intermediate, angle)
        if eraser:
            heralded, _ = project_idler(signal_projected, PolarizationKet.horizontal())
            images.append(heralded_intensity(heralded))
        else:
            images.append(unheralded_intensity(signal_projected))
    return images


def sweep_samples(
    images: Sequence[IntensityMap], signal_angles: Sequence[float], masks: RegionMask
) -> list[SweepSample]:
    return [
        SweepSample(angle, letter_means(image, masks))
        for angle, image in zip(signal_angles, images)
    ]


def measure(
    image: IntensityMap, reference_total: float, spad: SpadConfig, index: int = 0
) -> MeasuredImage:
    """Count `image` with a budget scaled by its brightness relative to the reference.

    Each index gets its own seed so separate images carry independent noise.
    """
    if reference_total <= 0:
        raise SpadConfigError("The reference image carries no light")
    budget = spad.signal_photon_budget * image.total() / reference_total
    config = replace(spad, seed=(spad.seed + index) % 2**64, signal_photon_budget=budget)
    signal = simulate_frames(image, config)
    background = simulate_background(image.grid, config)
    return MeasuredImage(
        signal, background, accumulate(signal), accumulate_subtract(signal, background)
    )


def measure_herald_set(herald_set: HeraldSet, spad: SpadConfig) -> HeraldSet:
    reference_total = herald_set.reference.total()
    reference = measure(herald_set.reference, reference_total, spad)
    erased: dict[float, IntensityMap] = {}
    raw: dict[float, IntensityMap] = {}
    for index, (angle, image) in enumerate(sorted(herald_set.erased.items()), start=1):
        measured = measure(image, reference_total, spad, index)
        erased[angle] = measured.recovered
        raw[angle] = measured.raw
    return HeraldSet(reference.recovered, erased, dict(herald_set.probabilities), raw)


def measure_sweep(
    images: Sequence[IntensityMap], reference_total: float, spad: SpadConfig
) -> list[IntensityMap]:
    return [
        measure(image, reference_total, spad, index).recovered
        for index, image in enumerate(images)
    ]


@dataclass(frozen=True, eq=False)
class SweepSamples:
    signal_angles: tuple[float, ...]
    eraser_on: list[SweepSample]
    eraser_off: list[SweepSample]
    reference: IntensityMap
    provenance: dict[str, object]


@dataclass(frozen=True, eq=False)
class SweepResult:
    signal_angles: tuple[float, ...]
    eraser_on: list[SweepSample]
    eraser_off: list[SweepSample]
    report_on: MetricsReport
    report_off: MetricsReport


def sample_sweep(
    holograms: HologramPair,
    signal_angles: Sequence[float],
    spad: SpadConfig | None = None,
) -> SweepSamples:
    """Signal polarizer sweeps with the H eraser in place and with the idler unpolarized.

    With `spad` every image is counted through the detector before letter
    means are taken.
    """
    angles = tuple(signal_angles)
    reference = unheralded_intensity(hybrid_state(holograms.psi_L, holograms.psi_R))
    # hybrid_state carries a sqrt(2) gain; half its total is the light behind one signal polarizer
    reference_total = reference.total() / 2
    samples: dict[bool, list[SweepSample]] = {}
    for eraser in (True, False):
        images = sweep_images(holograms, angles, eraser)
        if spad is not None:
            images = measure_sweep(images, reference_total, spad)
        samples[eraser] = sweep_samples(images, angles, holograms.masks)
    provenance = {"tier": holograms.tier.value, "monte_carlo": spad is not None}
    return SweepSamples(angles, samples[True], samples[False], reference, provenance)


def summarize_sweep(samples: SweepSamples, masks: RegionMask) -> SweepResult:
    """Fit and summarize both curves; raises FitError when a fittable sweep spans too little."""
    report_on = summarize_erasure(
        samples.reference,
        {},
        masks,
        sweep=samples.eraser_on,
        provenance={**samples.provenance, "eraser": "H"},
    )
    report_off = summarize_erasure(
        samples.reference,
        {},
        masks,
        sweep=samples.eraser_off,
        provenance={**samples.provenance, "eraser": "off"},
    )
    return SweepResult(
        samples.signal_angles, samples.eraser_on, samples.eraser_off, report_on, report_off
    )


def run_sweep(
    holograms: HologramPair,
    signal_angles: Sequence[float],
    spad: SpadConfig | None = None,
) -> SweepResult:
    return summarize_sweep(sample_sweep(holograms, signal_angles, spad), holograms.masks)


def analyze_herald_set(
    herald_set: HeraldSet,
    masks: RegionMask,
    provenance: dict[str, object] | None = None,
    sweep: Sequence[SweepSample] = (),
) -> MetricsReport:
    return summarize_erasure(
        herald_set.reference,
        herald_set.erased,
        masks,
        sweep=sweep,
        provenance=dict(provenance or {}),
        contrast_images=herald_set.raw or None,
    )


def check_common_grid(images: Sequence[IntensityMap]) -> GridSpec:
    grid = images[0].grid
    for image in images[1:]:
        if not image.grid.same_geometry(grid):
            raise FieldValidationError(f"Images live on different grids: {grid} and {image.grid}")
    return grid


def build_target(config: ExperimentConfig) -> TargetHologram:
    """The design target on the Fourier-plane grid of the configured metasurface."""
    image_grid = fourier_plane_grid(
        config.grid.source_grid(), config.optics.wavelength, config.optics.focal_length
    )
    inputs = config.inputs
    if inputs.target_image is not None and inputs.target_descriptor is not None:
        return load_target(inputs.target_image, inputs.target_descriptor, image_grid)
    return canonical_target(
        image_grid, config.grid.resolved_extent(config.optics), config.grid.letter_scale
    )


def design_masks(
    config: ExperimentConfig, target: TargetHologram
) -> tuple[PhaseMaskPair, ConvergenceReport]:
    gs = config.gs
    return modified_gs(
        target,
        uniform_aperture(config.grid.source_grid()),
        max_iterations=gs.max_iterations,
        amp_tolerance=gs.amp_tolerance,
        phase_tolerance=gs.phase_tolerance,
        seed=gs.seed,
        weighted=gs.weighted,
    )


def resolve_holograms(config: ExperimentConfig, target: TargetHologram) -> HologramPair:
    """Holograms of the configured tier from the configured inputs.

    A physical-tier profile on disk wins over masks; masks on disk win over
    a fresh design.
    """
    inputs = config.inputs
    if config.tier is Tier.PHYSICAL and inputs.profile_dir is not None:
        return build_holograms(
            config.tier, target, config.optics, profile=read_profile(inputs.profile_dir)
        )
    return build_holograms(
        config.tier, target, config.optics, phase_masks=resolve_masks(config, target)
    )


def resolve_masks(config: ExperimentConfig, target: TargetHologram) -> PhaseMaskPair:
    """Masks from the configured directory, or a fresh design when none is given."""
    masks_dir = config.inputs.masks_dir
    if masks_dir is None:
        logger.info("No masks given, designing them first")
        masks, _ = design_masks(config, target)
        return masks
    masks = read_masks(masks_dir)
    source_grid = config.grid.source_grid()
    if not masks.grid.same_geometry(source_grid):
        raise FieldValidationError(
            f"Masks in {masks_dir} live on {masks.grid}, the config describes {source_grid}"
        )
    return masks


def masks_for_images(
    config: ExperimentConfig, target: TargetHologram, image_grid: GridSpec
) -> RegionMask:
    """Region masks for images of either tier.

    Images on the Fourier-plane grid use the target directly; images on the
    metasurface grid get the masks resampled onto it.
    """
    source_grid = config.grid.source_grid()
    ideal_grid = fourier_plane_grid(
        source_grid, config.optics.wavelength, config.optics.focal_length
    )
    masks = RegionMask.from_target(target.relabel(ideal_grid))
    if image_grid.same_geometry(ideal_grid):
        return masks
    if image_grid.same_geometry(source_grid):
        return masks.resampled(image_grid)
    raise FieldValidationError(
        f"Images on {image_grid} match neither the ideal image plane {ideal_grid} "
        f"nor the metasurface grid {source_grid}"
    )

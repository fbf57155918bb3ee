# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Two-channel Gerchberg-Saxton phase retrieval with a phase-difference constraint."""

import logging
from dataclasses import dataclass, field

import numpy as np

from qholo.field_core.grid import (
    ComplexField,
    FieldValidationError,
    GridSpec,
    PhaseMask,
    RealArray,
    wrap_phase,
)
from qholo.field_core.transforms import dft2, idft2
from qholo.gs_design.constraints import (
    ImageConstraint,
    PhaseDifferenceConstraint,
    ProjectedPair,
    best_amplitude_scale,
)
from qholo.gs_design.target import TargetHologram, TargetValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PhaseMaskPair:
    phi_L: PhaseMask
    phi_R: PhaseMask

    def __post_init__(self) -> None:
        if self.phi_L.grid != self.phi_R.grid:
            raise FieldValidationError("phi_L and phi_R must share one grid")

    @property
    def grid(self) -> GridSpec:
        return self.phi_L.grid


@dataclass
class ConvergenceReport:
    iterations_run: int = 0
    amplitude_error_history: list[float] = field(default_factory=list)
    phase_error_history: list[float] = field(default_factory=list)
    # distance of the image-plane pair to the constraint set, relative to its norm
    projection_error_history: list[float] = field(default_factory=list)
    converged: bool = False
    degenerate_pixel_count: int = 0
    seed: int | None = None

    @property
    def final_amplitude_error(self) -> float:
        return self.amplitude_error_history[-1] if self.amplitude_error_history else float("nan")

    @property
    def final_phase_error(self) -> float:
        return self.phase_error_history[-1] if self.phase_error_history else float("nan")


def reconstruct(
    phi: PhaseMask, source_amplitude: ComplexField, image_grid: GridSpec | None = None
) -> ComplexField:
    """Ideal hologram dft2(U e^{i phi}) of one circular-polarization channel."""
    if phi.grid != source_amplitude.grid:
        raise FieldValidationError(
            f"Phase grid {phi.grid} does not match source grid {source_amplitude.grid}"
        )
    return dft2(ComplexField(phi.grid, source_amplitude.samples * phi.phasor()), image_grid)


def amplitude_error(psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram) -> float:
    """Relative RMS amplitude error over region pixels.

    The residual |psi| - c * amplitude uses the least-squares scale c shared by
    both channels and is taken relative to the total energy of the pair, which
    the unitary transforms keep fixed. It is the distance standard GS removes,
    so a standard run records a non-increasing history.
    """
    energy = psi_L.energy() + psi_R.energy()
    if energy == 0:
        return 1.0
    foreground = target.foreground()
    wanted = best_amplitude_scale(psi_L, psi_R, target) * target.amplitude[foreground]
    residual = np.sum((np.abs(psi_L.samples[foreground]) - wanted) ** 2) + np.sum(
        (np.abs(psi_R.samples[foreground]) - wanted) ** 2
    )
    return float(np.sqrt(residual / energy))


def phase_difference_error(
    psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram
) -> float:
    """RMS of the wrapped deviation of Arg(psi_L / psi_R) from theta over region pixels."""
    foreground = target.foreground()
    ratio = psi_L.samples[foreground] * np.conj(psi_R.samples[foreground])
    deviation = wrap_phase(np.angle(ratio * np.exp(-1j * target.theta[foreground])))
    return float(np.sqrt(np.mean(deviation**2)))


def _projection_error(psi_L: ComplexField, psi_R: ComplexField, projected: ProjectedPair) -> float:
    distance = np.sum(np.abs(psi_L.samples - projected.psi_L.samples) ** 2) + np.sum(
        np.abs(psi_R.samples - projected.psi_R.samples) ** 2
    )
    norm = psi_L.energy() + psi_R.energy()
    return float(np.sqrt(distance / norm)) if norm > 0 else 0.0


def random_initial_phases(grid: GridSpec, seed: int) -> PhaseMaskPair:
    """Uniform phases in (-pi, pi], phi_L drawn before phi_R from one seeded stream."""
    rng = np.random.default_rng(seed)
    phi_L = PhaseMask.from_radians(grid, rng.uniform(-np.pi, np.pi, grid.shape))
    phi_R = PhaseMask.from_radians(grid, rng.uniform(-np.pi, np.pi, grid.shape))
    return PhaseMaskPair(phi_L, phi_R)


def _update_weights(
    weights: RealArray, psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram
) -> RealArray:
    foreground = target.foreground()
    achieved = np.sqrt(0.5 * (psi_L.intensity() + psi_R.intensity()))[foreground]
    wanted = target.amplitude[foreground]
    power = float(np.sum(achieved**2))
    if power == 0:
        return weights
    scale = float(np.sum(wanted * achieved)) / power
    updated = weights.copy()
    updated[foreground] *= np.clip(wanted / np.maximum(scale * achieved, 1e-300), 0.5, 2.0)
    return updated


def _weighted_target(target: TargetHologram, weights: RealArray) -> TargetHologram:
    return TargetHologram.from_regions(
        target.grid, target.amplitude * weights, target.labels, target.regions
    )


def _validate_source(source_amplitude: ComplexField) -> None:
    magnitude = np.abs(source_amplitude.samples)
    if magnitude.flat[0] <= 0 or not np.allclose(magnitude, magnitude.flat[0], rtol=1e-12):
        raise TargetValidationError("Source amplitude must be uniform and non-zero")


def modified_gs(
    target: TargetHologram,
    source_amplitude: ComplexField,
    max_iterations: int = 200,
    amp_tolerance: float = 0.05,
    phase_tolerance: float = 0.05,
    seed: int = 0,
    initial_phases: PhaseMaskPair | None = None,
    constraint: ImageConstraint | None = None,
    weighted: bool = False,
) -> tuple[PhaseMaskPair, ConvergenceReport]:
    """Design phi_L, phi_R so that dft2(U e^{i phi_L/R}) approaches the target pair.

    Each iteration evaluates both holograms, records the errors, stops when
    both tolerances hold, and otherwise applies the image constraint and
    projects back onto the source amplitude. iterations_run counts forward
    evaluations, so the returned masks are those the final errors describe.

    The image constraint receives `target.amplitude` as is. With `weighted`
    on, that amplitude is re-weighted each iteration towards a uniform
    efficiency over the regions; errors and the projection residual are still
    measured against the unweighted target, and neither is then monotone.
    """
    if max_iterations < 1:
        raise TargetValidationError(f"max_iterations must be >= 1, got {max_iterations}")
    if amp_tolerance <= 0 or phase_tolerance <= 0:
        raise TargetValidationError("Tolerances must be positive")
    if source_amplitude.grid.shape != target.grid.shape:
        raise TargetValidationError(
            f"Source grid {source_amplitude.grid.shape} and target grid "
            f"{target.grid.shape} differ in shape"
        )
    _validate_source(source_amplitude)
    constraint = constraint or PhaseDifferenceConstraint()
    source_grid = source_amplitude.grid
    source_phase = np.conj(np.exp(1j * np.angle(source_amplitude.samples)))

    masks = initial_phases or random_initial_phases(source_grid, seed)
    if masks.grid != source_grid:
        raise FieldValidationError("Initial phases must live on the source grid")
    report = ConvergenceReport(seed=None if initial_phases else seed)
    weights = np.ones(target.grid.shape, dtype=np.float64)

    logger.info(
        "Starting GS on %dx%d grid: max %d iterations, tolerances amp=%g phase=%g",
        source_grid.width,
        source_grid.height,
        max_iterations,
        amp_tolerance,
        phase_tolerance,
    )
    for iteration in range(1, max_iterations + 1):
        psi_L = reconstruct(masks.phi_L, source_amplitude, target.grid)
        psi_R = reconstruct(masks.phi_R, source_amplitude, target.grid)
        projected = constraint.project(psi_L, psi_R, target)

        report.iterations_run = iteration
        report.amplitude_error_history.append(amplitude_error(psi_L, psi_R, target))
        report.phase_error_history.append(phase_difference_error(psi_L, psi_R, target))
        report.projection_error_history.append(_projection_error(psi_L, psi_R, projected))
        report.degenerate_pixel_count = projected.degenerate_count
        logger.debug(
            "GS iteration %d: amplitude error %.4g, phase error %.4g, projection error %.4g",
            iteration,
            report.amplitude_error_history[-1],
            report.phase_error_history[-1],
            report.projection_error_history[-1],
        )
        if (
            report.amplitude_error_history[-1] <= amp_tolerance
            and report.phase_error_history[-1] <= phase_tolerance
        ):
            report.converged = True
            break
        if iteration == max_iterations:
            break

        if weighted:
            weights = _update_weights(weights, psi_L, psi_R, target)
            projected = constraint.project(psi_L, psi_R, _weighted_target(target, weights))
        back_L = idft2(projected.psi_L, source_grid)
        back_R = idft2(projected.psi_R, source_grid)
        # source projection keeps |U| and only the phase evolves
        masks = PhaseMaskPair(
            PhaseMask.from_radians(source_grid, np.angle(back_L.samples * source_phase)),
            PhaseMask.from_radians(source_grid, np.angle(back_R.samples * source_phase)),
        )

    if report.degenerate_pixel_count:
        logger.warning(
            "%d degenerate pixels in the final image constraint", report.degenerate_pixel_count
        )
    if report.converged:
        logger.info(
            "GS converged after %d iterations (amplitude %.4g, phase %.4g rad)",
            report.iterations_run,
            report.final_amplitude_error,
            report.final_phase_error,
        )
    else:
        logger.warning(
            "GS did not converge in %d iterations (amplitude %.4g, phase %.4g rad)",
            report.iterations_run,
            report.final_amplitude_error,
            report.final_phase_error,
        )
    return masks, report

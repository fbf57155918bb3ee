# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Sinusoidal fits of per-letter intensity against the signal polarizer angle.

Model: I(phi_s) = A sin^2(phi_s - theta/2 + delta) + B with A, B >= 0.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import optimize

from qholo.field_core.grid import RealArray

logger = logging.getLogger(__name__)

MIN_SAMPLES = 8
_SPAN_TOLERANCE = 1e-9
_DELTA_GRID = 721
_FLOOR_TOLERANCE = 1e-12


class FitError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSample:
    phi_s: float
    intensities: dict[str, float]

    def __post_init__(self) -> None:
        if not math.isfinite(self.phi_s) or not all(
            math.isfinite(value) for value in self.intensities.values()
        ):
            raise FitError(f"Sweep sample at {self.phi_s} holds non-finite values")


@dataclass(frozen=True)
class VisibilityFit:
    amplitude: float  # A
    offset: float  # B
    delta: float  # radians, in (-pi/2, pi/2]
    visibility: float
    residual_rms: float


def _model(x: RealArray, amplitude: float, offset: float, delta: float) -> RealArray:
    return np.asarray(amplitude * np.sin(x + delta) ** 2 + offset, dtype=np.float64)


def _best_amplitude(x: RealArray, values: RealArray, delta: float) -> float:
    shape = np.sin(x + delta) ** 2
    norm = float(np.dot(shape, shape))
    return max(0.0, float(np.dot(shape, values)) / norm) if norm > 0 else 0.0


def _fit_without_offset(x: RealArray, values: RealArray) -> tuple[float, float]:
    """Grid search over delta then bounded refinement, with B pinned to 0."""

    def cost(delta: float) -> float:
        amplitude = _best_amplitude(x, values, delta)
        return float(np.sum((_model(x, amplitude, 0.0, delta) - values) ** 2))

    grid = np.linspace(-math.pi / 2, math.pi / 2, _DELTA_GRID)
    costs = [cost(delta) for delta in grid]
    start = float(grid[int(np.argmin(costs))])
    step = grid[1] - grid[0]
    refined = optimize.minimize_scalar(
        cost, bounds=(start - step, start + step), method="bounded", options={"xatol": 1e-12}
    )
    delta = float(refined.x) if refined.fun <= min(costs) else start
    return _best_amplitude(x, values, delta), delta


def _wrap_delta(delta: float) -> float:
    # sin^2 has period pi in its argument
    wrapped = math.pi / 2 - math.fmod(math.pi / 2 - delta, math.pi)
    if wrapped > math.pi / 2:
        wrapped -= math.pi
    return wrapped


def visibility_fit(samples: Sequence[SweepSample], letter: str, theta: float) -> VisibilityFit:
    if len(samples) < MIN_SAMPLES:
        raise FitError(f"Visibility fit needs at least {MIN_SAMPLES} samples, got {len(samples)}")
    phi_s = np.array([sample.phi_s for sample in samples], dtype=np.float64)
    if np.ptp(phi_s) < math.pi - _SPAN_TOLERANCE:
        raise FitError(
            f"Sweep spans {math.degrees(float(np.ptp(phi_s))):.3f} degrees, needs at least 180"
        )
    try:
        values = np.array([sample.intensities[letter] for sample in samples], dtype=np.float64)
    except KeyError as exc:
        raise FitError(f"Sweep samples carry no intensity for letter {letter}") from exc

    x = phi_s - theta / 2
    design = np.column_stack([np.ones_like(x), np.cos(2 * x), np.sin(2 * x)])
    coefficients, _, rank, _ = np.linalg.lstsq(design, values, rcond=None)
    if rank < 3:
        raise FitError(f"Sweep angles for letter {letter} do not determine a sinusoid")
    c0, c1, c2 = (float(value) for value in coefficients)
    amplitude = 2 * math.hypot(c1, c2)
    delta = math.atan2(c2, -c1) / 2 if amplitude > 0 else 0.0
    offset = c0 - amplitude / 2
    if -_FLOOR_TOLERANCE * max(1.0, abs(c0)) <= offset < 0:
        offset = 0.0
    if offset < 0:
        logger.debug("Letter %s fit has a negative floor, refitting with B = 0", letter)
        amplitude, delta = _fit_without_offset(x, values)
        offset = 0.0
    delta = _wrap_delta(delta)
    if amplitude + 2 * offset <= 0:
        raise FitError(f"Letter {letter} sweep has no positive intensity to fit")
    residual = values - _model(x, amplitude, offset, delta)
    fit = VisibilityFit(
        amplitude=amplitude,
        offset=offset,
        delta=delta,
        visibility=amplitude / (amplitude + 2 * offset),
        residual_rms=float(np.sqrt(np.mean(residual**2))),
    )
    logger.debug(
        "Letter %s: visibility %.4f, delta %.3f deg", letter, fit.visibility, math.degrees(delta)
    )
    return fit


def fit_sweep(
    samples: Sequence[SweepSample], thetas: dict[str, float]
) -> dict[str, VisibilityFit]:
    """Fit every letter; an empty dict when the sweep is too short to fit."""
    if len(samples) < MIN_SAMPLES:
        logger.info("Skipping visibility fits: %d sweep samples", len(samples))
        return {}
    return {letter: visibility_fit(samples, letter, theta) for letter, theta in thetas.items()}

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from enum import Enum

import numpy as np

from qholo.field_core.grid import FieldValidationError, GridSpec, PhaseMask, RealArray


class LensKind(Enum):
    CONVERGING = "converging"
    DIVERGING = "diverging"


def lens_optical_path(grid: GridSpec, focal_length: float) -> RealArray:
    """sqrt(r^2 + f^2) - f, evaluated without cancellation for r << f."""
    r2 = grid.radius_squared()
    return np.asarray(
        r2 / (np.sqrt(r2 + focal_length**2) + focal_length), dtype=np.float64
    )


def unwrapped_lens_phase(
    grid: GridSpec, focal_length: float, wavelength: float, kind: LensKind
) -> RealArray:
    if focal_length <= 0 or not np.isfinite(focal_length):
        raise FieldValidationError(f"Focal length must be positive, got {focal_length}")
    if wavelength <= 0 or not np.isfinite(wavelength):
        raise FieldValidationError(f"Wavelength must be positive, got {wavelength}")
    phase = -(2.0 * np.pi / wavelength) * lens_optical_path(grid, focal_length)
    if kind is LensKind.DIVERGING:
        phase = -phase
    return phase


def lens_phase(
    grid: GridSpec, focal_length: float, wavelength: float, kind: LensKind
) -> PhaseMask:
    """Hyperbolic lens profile -(2*pi/lambda)(sqrt(r^2+f^2)-f), negated when diverging."""
    return PhaseMask.from_radians(
        grid, unwrapped_lens_phase(grid, focal_length, wavelength, kind)
    )

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Angular-spectrum free-space propagation."""

import logging

import numpy as np
import scipy.fft

from qholo.field_core.grid import (
    ComplexArray,
    ComplexField,
    FieldValidationError,
    GridSpec,
    RealArray,
)
from qholo.utils.threads import resolve_thread_count

logger = logging.getLogger(__name__)

ALIASING_FLAG = "aliasing"


def _frequency_axes(grid: GridSpec) -> tuple[RealArray, RealArray]:
    fx = scipy.fft.fftfreq(grid.width, d=grid.pitch)
    fy = scipy.fft.fftfreq(grid.height, d=grid.pitch)
    fxx, fyy = np.meshgrid(fx, fy, indexing="xy")
    return fxx, fyy


def transfer_function(grid: GridSpec, distance: float, wavelength: float) -> ComplexArray:
    """exp(i*2*pi*z*sqrt(1/lambda^2 - fx^2 - fy^2)); evanescent entries are zero."""
    fxx, fyy = _frequency_axes(grid)
    argument = 1.0 / wavelength**2 - fxx**2 - fyy**2
    propagating = argument >= 0
    kz = 2.0 * np.pi * np.sqrt(np.where(propagating, argument, 0.0))
    return np.asarray(
        np.where(propagating, np.exp(1j * kz * distance), 0.0), dtype=np.complex128
    )


def is_aliased(grid: GridSpec, distance: float, wavelength: float) -> bool:
    """True when the sampled transfer function's phase varies faster than the
    frequency grid can represent (band limit of the angular-spectrum kernel)."""
    if distance == 0:
        return False
    nyquist = 1.0 / (2.0 * grid.pitch)
    for n in (grid.width, grid.height):
        frequency_step = 1.0 / (n * grid.pitch)
        limit = 1.0 / (wavelength * np.sqrt((2.0 * frequency_step * distance) ** 2 + 1))
        if nyquist > limit:
            return True
    return False


def propagate(field: ComplexField, distance: float, wavelength: float) -> ComplexField:
    if wavelength <= 0 or not np.isfinite(wavelength):
        raise FieldValidationError(f"Wavelength must be positive, got {wavelength}")
    if not np.isfinite(distance):
        raise FieldValidationError(f"Propagation distance must be finite, got {distance}")
    if distance == 0:
        return ComplexField(field.grid, field.samples.copy(), field.flags)

    spectrum = scipy.fft.fft2(field.samples, workers=resolve_thread_count())
    spectrum *= transfer_function(field.grid, distance, wavelength)
    result = ComplexField(
        field.grid,
        scipy.fft.ifft2(spectrum, workers=resolve_thread_count()),
        field.flags,
    )
    if is_aliased(field.grid, distance, wavelength):
        logger.warning(
            "Transfer function undersampled for z=%.3g m on a %dx%d grid of pitch %.3g m",
            distance,
            field.grid.width,
            field.grid.height,
            field.grid.pitch,
        )
        result = result.with_flags(ALIASING_FLAG)
    return result


def pad_field(field: ComplexField, factor: int) -> ComplexField:
    """Zero-pad symmetrically so the grid grows by `factor`, keeping the origin pixel."""
    if factor < 1:
        raise FieldValidationError(f"Padding factor must be >= 1, got {factor}")
    if factor == 1:
        return field
    grid = GridSpec(field.grid.width * factor, field.grid.height * factor, field.grid.pitch)
    samples = np.zeros(grid.shape, dtype=np.complex128)
    row0 = grid.height // 2 - field.grid.height // 2
    col0 = grid.width // 2 - field.grid.width // 2
    samples[row0 : row0 + field.grid.height, col0 : col0 + field.grid.width] = (
        field.samples
    )
    return ComplexField(grid, samples, field.flags)


def crop_field(field: ComplexField, grid: GridSpec) -> ComplexField:
    """Inverse of pad_field: cut the centred `grid` window back out."""
    if grid.width > field.grid.width or grid.height > field.grid.height:
        raise FieldValidationError("Crop window larger than field")
    row0 = field.grid.height // 2 - grid.height // 2
    col0 = field.grid.width // 2 - grid.width // 2
    samples = field.samples[row0 : row0 + grid.height, col0 : col0 + grid.width]
    return ComplexField(grid, samples.copy(), field.flags)

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import numpy as np
import pytest

from qholo.field_core.grid import ComplexField, FieldValidationError, GridSpec, RealArray
from qholo.field_core.propagation import (
    ALIASING_FLAG,
    crop_field,
    is_aliased,
    pad_field,
    propagate,
)

WAVELENGTH = 1e-6


def _band_limited_field(grid: GridSpec, seed: int = 5) -> ComplexField:
    rng = np.random.default_rng(seed)
    spectrum = np.zeros(grid.shape, dtype=np.complex128)
    # keep only a small block of low frequencies, far below 1/lambda
    spectrum[:4, :4] = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    return ComplexField(grid, np.fft.ifft2(spectrum))


def _second_moment_radius(intensity: RealArray, grid: GridSpec) -> float:
    xx, _ = grid.coordinates()
    return float(2.0 * np.sqrt(np.sum(intensity * xx**2) / np.sum(intensity)))


def test_zero_distance_is_identity() -> None:
    grid = GridSpec(16, 16, 0.5e-6)
    field = _band_limited_field(grid)

    result = propagate(field, 0.0, WAVELENGTH)

    np.testing.assert_allclose(result.samples, field.samples, atol=1e-12)


def test_plane_wave_picks_up_global_phase() -> None:
    grid = GridSpec(16, 16, 1e-6)
    distance = 12.3e-6

    result = propagate(ComplexField.uniform(grid), distance, WAVELENGTH)

    expected = np.exp(2j * np.pi * distance / WAVELENGTH)
    np.testing.assert_allclose(result.samples, expected, atol=1e-12)


def test_gaussian_spot_widens_by_sqrt2_after_one_rayleigh_range() -> None:
    grid = GridSpec(256, 256, WAVELENGTH)
    waist = 10 * WAVELENGTH
    rayleigh = np.pi * waist**2 / WAVELENGTH
    field = ComplexField(grid, np.exp(-grid.radius_squared() / waist**2))

    result = propagate(field, rayleigh, WAVELENGTH)

    ratio = _second_moment_radius(
        result.intensity(), grid
    ) / _second_moment_radius(field.intensity(), grid)
    assert ratio == pytest.approx(np.sqrt(2), rel=0.02)


def test_band_limited_field_conserves_energy() -> None:
    grid = GridSpec(32, 32, 0.5e-6)
    field = _band_limited_field(grid)

    result = propagate(field, 250e-6, WAVELENGTH)

    assert result.energy() == pytest.approx(field.energy(), rel=1e-9)


def test_back_propagation_restores_band_limited_field() -> None:
    grid = GridSpec(32, 32, 0.5e-6)
    field = _band_limited_field(grid, seed=8)

    round_trip = propagate(propagate(field, 40e-6, WAVELENGTH), -40e-6, WAVELENGTH)

    np.testing.assert_allclose(round_trip.samples, field.samples, atol=1e-9)


def test_evanescent_components_are_removed() -> None:
    # pitch below lambda/2 puts the Nyquist frequency in the evanescent band
    grid = GridSpec(16, 16, 0.2e-6)
    samples = np.zeros(grid.shape, dtype=np.complex128)
    samples[::2, :] = 1.0  # energy at the Nyquist row frequency

    result = propagate(ComplexField(grid, samples), 1e-6, WAVELENGTH)

    assert result.energy() < ComplexField(grid, samples).energy()


def test_coarse_grid_sets_aliasing_flag() -> None:
    grid = GridSpec(64, 64, 0.7e-6)

    result = propagate(ComplexField.uniform(grid), 1000e-6, 0.81e-6)

    assert ALIASING_FLAG in result.flags
    assert is_aliased(grid, 1000e-6, 0.81e-6)


def test_short_distance_is_not_flagged() -> None:
    grid = GridSpec(64, 64, 0.7e-6)

    result = propagate(ComplexField.uniform(grid), 1e-6, 0.81e-6)

    assert ALIASING_FLAG not in result.flags


def test_invalid_wavelength_is_rejected() -> None:
    with pytest.raises(FieldValidationError):
        propagate(ComplexField.uniform(GridSpec(4, 4, 1e-6)), 1e-6, 0.0)


def test_pad_then_crop_is_identity() -> None:
    grid = GridSpec(6, 5, 1e-6)
    field = _band_limited_field(grid)

    padded = pad_field(field, 2)

    assert padded.grid.shape == (10, 12)
    assert padded.energy() == pytest.approx(field.energy())
    np.testing.assert_array_equal(crop_field(padded, grid).samples, field.samples)

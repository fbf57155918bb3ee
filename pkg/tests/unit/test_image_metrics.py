# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import numpy as np
import pytest

from qholo.field_core.grid import FieldValidationError, GridSpec
from qholo.metrics.image_metrics import (
    MetricUndefinedError,
    contrast,
    intensity_drop,
    letter_signal,
    pearson,
)
from qholo.metrics.regions import RegionMask
from qholo.quantum.intensity import IntensityMap

GRID = GridSpec(4, 4, 1e-6)


@pytest.fixture
def masks() -> RegionMask:
    letter = np.zeros(GRID.shape, dtype=bool)
    letter[1:3, 1:3] = True
    return RegionMask(GRID, {"H": letter}, {"H": ~letter}, {"H": 0.0})


def _image(letter_value: float, background_value: float, measured: bool = False) -> IntensityMap:
    values = np.full(GRID.shape, background_value)
    values[1:3, 1:3] = letter_value
    return IntensityMap.from_values(GRID, values, measured=measured)


class TestIntensityDrop:
    def test_unchanged_letter_is_zero_db(self, masks: RegionMask) -> None:
        drop = intensity_drop(_image(3.0, 1.0), _image(3.0, 1.0), masks, "H")

        assert drop.value_db == pytest.approx(0.0)
        assert not drop.floored

    def test_tenfold_reduction_is_minus_ten_db(self, masks: RegionMask) -> None:
        drop = intensity_drop(_image(1.2, 1.0), _image(3.0, 1.0), masks, "H")

        assert drop.value_db == pytest.approx(-10.0)

    def test_vanished_letter_reports_the_floor(self, masks: RegionMask) -> None:
        drop = intensity_drop(_image(0.0, 0.0), _image(1.0, 0.0), masks, "H")

        assert drop.floored
        assert drop.value_db == pytest.approx(-60.0)

    def test_common_rescaling_does_not_change_the_drop(self, masks: RegionMask) -> None:
        base = intensity_drop(_image(1.5, 0.5), _image(4.0, 0.5), masks, "H")
        scaled = intensity_drop(_image(7.5, 2.5), _image(20.0, 2.5), masks, "H")

        assert scaled.value_db == pytest.approx(base.value_db, abs=1e-12)

    def test_dark_reference_is_undefined(self, masks: RegionMask) -> None:
        with pytest.raises(MetricUndefinedError):
            intensity_drop(_image(1.0, 0.0), _image(1.0, 1.0), masks, "H")

    def test_grid_mismatch_is_rejected(self, masks: RegionMask) -> None:
        other = IntensityMap.from_values(GridSpec(2, 2, 1e-6), np.ones((2, 2)))

        with pytest.raises(FieldValidationError):
            letter_signal(other, masks, "H")


class TestContrast:
    def test_letter_twice_the_background_is_zero_db(self, masks: RegionMask) -> None:
        assert contrast(_image(2.0, 1.0), masks, "H") == pytest.approx(0.0)

    def test_bright_letter(self, masks: RegionMask) -> None:
        assert contrast(_image(11.0, 1.0), masks, "H") == pytest.approx(10.0)

    def test_letter_equal_to_background_is_undefined(self, masks: RegionMask) -> None:
        with pytest.raises(MetricUndefinedError):
            contrast(_image(1.0, 1.0), masks, "H")

    def test_dark_background_is_undefined(self, masks: RegionMask) -> None:
        with pytest.raises(MetricUndefinedError):
            contrast(_image(1.0, 0.0), masks, "H")


class TestPearson:
    def _random(self, seed: int) -> IntensityMap:
        return IntensityMap.from_values(
            GRID, np.random.default_rng(seed).uniform(size=GRID.shape)
        )

    def test_identical_images_correlate_perfectly(self) -> None:
        image = self._random(1)

        assert pearson(image, image, np.ones(GRID.shape, dtype=bool)) == pytest.approx(1.0)

    def test_inverted_image_anticorrelates(self) -> None:
        image = self._random(2)
        inverted = IntensityMap.from_values(GRID, 5.0 - image.values)

        assert pearson(image, inverted, np.ones(GRID.shape, dtype=bool)) == pytest.approx(-1.0)

    def test_positive_affine_maps_leave_r_unchanged(self) -> None:
        first, second = self._random(3), self._random(4)
        region = np.ones(GRID.shape, dtype=bool)
        region[0, 0] = False
        transformed = IntensityMap.from_values(GRID, 3.0 * second.values + 7.0)

        assert pearson(first, transformed, region) == pytest.approx(
            pearson(first, second, region), abs=1e-12
        )

    def test_constant_image_is_undefined(self) -> None:
        flat = IntensityMap.from_values(GRID, np.ones(GRID.shape))

        with pytest.raises(MetricUndefinedError):
            pearson(flat, self._random(5), np.ones(GRID.shape, dtype=bool))

    def test_empty_region_is_undefined(self) -> None:
        image = self._random(6)

        with pytest.raises(MetricUndefinedError):
            pearson(image, image, np.zeros(GRID.shape, dtype=bool))

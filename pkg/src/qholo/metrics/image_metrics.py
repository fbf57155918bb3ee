# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from qholo.field_core.grid import FieldValidationError
from qholo.metrics.regions import BoolArray, RegionMask
from qholo.quantum.intensity import IntensityMap

logger = logging.getLogger(__name__)

# erased intensity is floored at this fraction of the reference (-60 dB)
DROP_FLOOR_RATIO = 1e-6


class MetricUndefinedError(ValueError):
    pass


@dataclass(frozen=True)
class IntensityDrop:
    value_db: float
    floored: bool  # True means "at most value_db"


def _check_grid(image: IntensityMap, masks: RegionMask) -> None:
    if not image.grid.same_geometry(masks.grid):
        raise FieldValidationError(
            f"Image grid {image.grid.shape} does not match mask grid {masks.grid.shape}"
        )


def letter_signal(image: IntensityMap, masks: RegionMask, letter: str) -> float:
    """Mean letter intensity above the letter's regional background."""
    _check_grid(image, masks)
    letter_mean = float(np.mean(image.values[masks.letter_pixels[letter]]))
    background_mean = float(np.mean(image.values[masks.background_pixels[letter]]))
    return letter_mean - background_mean


def intensity_drop(
    erased: IntensityMap, reference: IntensityMap, masks: RegionMask, letter: str
) -> IntensityDrop:
    """10 log10 of the erased over the reference background-subtracted letter intensity."""
    with_letter = letter_signal(reference, masks, letter)
    if with_letter <= 0:
        raise MetricUndefinedError(
            f"Letter {letter} is not brighter than its background in the reference image"
        )
    without_letter = letter_signal(erased, masks, letter)
    floor = DROP_FLOOR_RATIO * with_letter
    if without_letter <= floor:
        logger.debug("Erased letter %s is at or below the dB floor", letter)
        return IntensityDrop(10 * math.log10(DROP_FLOOR_RATIO), floored=True)
    return IntensityDrop(10 * math.log10(without_letter / with_letter), floored=False)


def contrast(image: IntensityMap, masks: RegionMask, letter: str) -> float:
    """Letter-over-background contrast in dB; needs a bright background, e.g. dark counts."""
    _check_grid(image, masks)
    background_mean = float(np.mean(image.values[masks.background_pixels[letter]]))
    if background_mean <= 0:
        raise MetricUndefinedError(f"Background of letter {letter} has no positive intensity")
    excess = float(np.mean(image.values[masks.letter_pixels[letter]])) - background_mean
    if excess <= 0:
        raise MetricUndefinedError(f"Letter {letter} is not brighter than its background")
    return 10 * math.log10(excess / background_mean)


def pearson(first: IntensityMap, second: IntensityMap, region: BoolArray) -> float:
    if not first.grid.same_geometry(second.grid) or region.shape != first.grid.shape:
        raise FieldValidationError("Pearson correlation needs images and region on one grid")
    if not region.any():
        raise MetricUndefinedError("Pearson correlation over an empty region")
    a = first.values[region]
    b = second.values[region]
    if np.ptp(a) == 0 or np.ptp(b) == 0:
        raise MetricUndefinedError("Pearson correlation is undefined for a constant image")
    return float(np.clip(stats.pearsonr(a, b)[0], -1.0, 1.0))

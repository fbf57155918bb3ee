# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

import numpy as np

from qholo.field_core.grid import wrap_phase
from qholo.metrics.image_metrics import (
    IntensityDrop,
    MetricUndefinedError,
    contrast,
    intensity_drop,
    pearson,
)
from qholo.metrics.regions import RegionMask
from qholo.metrics.visibility import SweepSample, VisibilityFit, fit_sweep
from qholo.quantum.intensity import IntensityMap

logger = logging.getLogger(__name__)

_ASSIGNMENT_TOLERANCE = 1e-3


@dataclass(frozen=True)
class ErasureRecord:
    idler_angle: float  # radians
    erased_letter: str
    drop: IntensityDrop
    contrast_db: dict[str, float | None]  # None where the contrast is undefined
    pearson: dict[str, float | None]


@dataclass(frozen=True)
class MetricsReport:
    erasures: tuple[ErasureRecord, ...]
    mean_drop_db: float | None
    mean_contrast_db: float | None
    mean_pearson: float | None
    visibilities: dict[str, VisibilityFit] = field(default_factory=dict)
    provenance: dict[str, Any] = field(default_factory=dict)


def erased_letter_for(idler_angle: float, masks: RegionMask) -> str:
    """The letter whose phase difference is -2 * idler_angle modulo 2 pi."""
    distances = {
        letter: abs(float(wrap_phase(theta + 2 * idler_angle)))
        for letter, theta in masks.thetas.items()
    }
    letter = min(distances, key=lambda name: distances[name])
    if distances[letter] > _ASSIGNMENT_TOLERANCE:
        raise MetricUndefinedError(
            f"No letter is erased at idler angle {math.degrees(idler_angle):.3f} degrees"
        )
    return letter


def _mean(values: Sequence[float | None]) -> float | None:
    defined = [value for value in values if value is not None]
    return float(np.mean(defined)) if defined else None


def _optional(metric: Any, *args: Any) -> float | None:
    try:
        return float(metric(*args))
    except MetricUndefinedError as exc:
        logger.debug("%s", exc)
        return None


def summarize_erasure(
    reference: IntensityMap,
    erased_by_angle: Mapping[float, IntensityMap],
    masks: RegionMask,
    sweep: Sequence[SweepSample] = (),
    provenance: dict[str, Any] | None = None,
    contrast_images: Mapping[float, IntensityMap] | None = None,
) -> MetricsReport:
    """Drop of each designated letter plus contrast and correlation of the others.

    Contrast needs the detector background, so measured runs pass their raw
    accumulated maps as `contrast_images`; drops and correlations always use
    `erased_by_angle`.
    """
    records = []
    for idler_angle, erased in sorted(erased_by_angle.items()):
        letter = erased_letter_for(idler_angle, masks)
        remaining = [name for name in masks.letters if name != letter]
        contrast_source = (contrast_images or {}).get(idler_angle, erased)
        record = ErasureRecord(
            idler_angle=idler_angle,
            erased_letter=letter,
            drop=intensity_drop(erased, reference, masks, letter),
            contrast_db={
                name: _optional(contrast, contrast_source, masks, name) for name in remaining
            },
            pearson={
                name: _optional(pearson, erased, reference, masks.region(name))
                for name in remaining
            },
        )
        logger.info(
            "Idler at %.1f deg erases %s: %s%.2f dB",
            math.degrees(idler_angle),
            letter,
            "<= " if record.drop.floored else "",
            record.drop.value_db,
        )
        records.append(record)
    return MetricsReport(
        erasures=tuple(records),
        mean_drop_db=_mean([record.drop.value_db for record in records]),
        mean_contrast_db=_mean(
            [value for record in records for value in record.contrast_db.values()]
        ),
        mean_pearson=_mean([value for record in records for value in record.pearson.values()]),
        visibilities=fit_sweep(sweep, masks.thetas),
        provenance=dict(provenance or {}),
    )

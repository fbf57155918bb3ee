# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from qholo.metrics.image_metrics import (
    IntensityDrop,
    MetricUndefinedError,
    contrast,
    intensity_drop,
    pearson,
)
from qholo.metrics.regions import RegionMask
from qholo.metrics.report import ErasureRecord, MetricsReport, summarize_erasure
from qholo.metrics.visibility import FitError, SweepSample, VisibilityFit, visibility_fit

__all__ = [
    "ErasureRecord",
    "FitError",
    "IntensityDrop",
    "MetricUndefinedError",
    "MetricsReport",
    "RegionMask",
    "SweepSample",
    "VisibilityFit",
    "contrast",
    "intensity_drop",
    "pearson",
    "summarize_erasure",
    "visibility_fit",
]

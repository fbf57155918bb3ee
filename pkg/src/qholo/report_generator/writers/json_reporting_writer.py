# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import json
import math
from dataclasses import asdict
from typing import Any

from qholo.gs_design.gs_engine import ConvergenceReport
from qholo.metrics.report import MetricsReport
from qholo.metrics.visibility import VisibilityFit
from qholo.report_generator.writers.abstract_reporting_writer import ReportingWriter


def _finite_or_none(value: float | None) -> float | None:
    # JSON has no NaN; undefined numbers are written as null
    if value is None or not math.isfinite(value):
        return None
    return value


def _dumps(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _visibility(fit: VisibilityFit) -> dict[str, float]:
    document = asdict(fit)
    document["delta_deg"] = math.degrees(document.pop("delta"))
    return document


class JSONMetricsWriter(ReportingWriter[MetricsReport]):
    """Metrics with angles in degrees; undefined metrics are null."""

    def write(self, report: MetricsReport) -> str:
        erasures = [
            {
                "idler_angle_deg": math.degrees(record.idler_angle),
                "erased_letter": record.erased_letter,
                "drop_db": record.drop.value_db,
                "drop_floored": record.drop.floored,
                "contrast_db": {
                    letter: _finite_or_none(value) for letter, value in record.contrast_db.items()
                },
                "pearson": {
                    letter: _finite_or_none(value) for letter, value in record.pearson.items()
                },
            }
            for record in report.erasures
        ]
        return _dumps(
            {
                "erasures": erasures,
                "mean_drop_db": _finite_or_none(report.mean_drop_db),
                "mean_contrast_db": _finite_or_none(report.mean_contrast_db),
                "mean_pearson": _finite_or_none(report.mean_pearson),
                "visibilities": {
                    letter: _visibility(fit) for letter, fit in report.visibilities.items()
                },
                "provenance": report.provenance,
            }
        )


class JSONConvergenceWriter(ReportingWriter[ConvergenceReport]):
    def write(self, report: ConvergenceReport) -> str:
        return _dumps(
            {
                "iterations_run": report.iterations_run,
                "converged": report.converged,
                "final_amplitude_error": _finite_or_none(report.final_amplitude_error),
                "final_phase_error_rad": _finite_or_none(report.final_phase_error),
                "amplitude_error_history": report.amplitude_error_history,
                "phase_error_history_rad": report.phase_error_history,
                "projection_error_history": report.projection_error_history,
                "degenerate_pixel_count": report.degenerate_pixel_count,
                "seed": report.seed,
            }
        )

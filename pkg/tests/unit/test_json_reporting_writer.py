# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import json
import math

from qholo.gs_design.gs_engine import ConvergenceReport
from qholo.metrics.image_metrics import IntensityDrop
from qholo.metrics.report import ErasureRecord, MetricsReport
from qholo.metrics.visibility import VisibilityFit
from qholo.report_generator.writers.json_reporting_writer import (
    JSONConvergenceWriter,
    JSONMetricsWriter,
)


def test_json_metrics_writer_writes_degrees_and_nulls() -> None:
    report = MetricsReport(
        erasures=(
            ErasureRecord(
                idler_angle=math.pi / 2,
                erased_letter="V",
                drop=IntensityDrop(-60.0, True),
                contrast_db={"H": None, "D": float("nan")},
                pearson={"H": 1.0, "D": 0.99},
            ),
        ),
        mean_drop_db=-60.0,
        mean_contrast_db=None,
        mean_pearson=0.995,
        visibilities={
            "H": VisibilityFit(
                amplitude=1.0, offset=0.0, delta=math.pi / 36, visibility=1.0, residual_rms=0.0
            )
        },
        provenance={"tier": "ideal"},
    )

    document = json.loads(JSONMetricsWriter().write(report))

    erasure = document["erasures"][0]
    assert erasure["idler_angle_deg"] == 90.0
    assert erasure["erased_letter"] == "V"
    assert erasure["drop_db"] == -60.0
    assert erasure["drop_floored"] is True
    assert erasure["contrast_db"] == {"H": None, "D": None}
    assert erasure["pearson"] == {"H": 1.0, "D": 0.99}
    assert document["mean_contrast_db"] is None
    assert document["visibilities"]["H"]["delta_deg"] == math.degrees(math.pi / 36)
    assert "delta" not in document["visibilities"]["H"]
    assert document["provenance"] == {"tier": "ideal"}


def test_json_metrics_writer_output_is_stable() -> None:
    report = MetricsReport(erasures=(), mean_drop_db=None, mean_contrast_db=None, mean_pearson=None)

    output = JSONMetricsWriter().write(report)

    assert output.endswith("}\n")
    assert output == JSONMetricsWriter().write(report)
    assert list(json.loads(output)) == sorted(json.loads(output))


def test_json_convergence_writer() -> None:
    report = ConvergenceReport(
        iterations_run=2,
        amplitude_error_history=[0.2, 0.04],
        phase_error_history=[0.3, 0.01],
        projection_error_history=[0.5, 0.1],
        converged=True,
        degenerate_pixel_count=1,
        seed=7,
    )

    document = json.loads(JSONConvergenceWriter().write(report))

    assert document == {
        "iterations_run": 2,
        "converged": True,
        "final_amplitude_error": 0.04,
        "final_phase_error_rad": 0.01,
        "amplitude_error_history": [0.2, 0.04],
        "phase_error_history_rad": [0.3, 0.01],
        "projection_error_history": [0.5, 0.1],
        "degenerate_pixel_count": 1,
        "seed": 7,
    }


def test_json_convergence_writer_without_iterations_writes_null_errors() -> None:
    document = json.loads(JSONConvergenceWriter().write(ConvergenceReport()))

    assert document["final_amplitude_error"] is None
    assert document["final_phase_error_rad"] is None

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Command for designing the phi_L, phi_R phase masks

import logging

import typer

from qholo.cli.command_context import (
    EXIT_NOT_CONVERGED,
    ConfigOption,
    LogLevelOption,
    OutOption,
    input_errors,
    start_command,
    write_manifest,
)
from qholo.pipeline.experiment_runner import build_target, design_masks
from qholo.quantum.intensity import IntensityMap
from qholo.report_generator.report_generator import ReportGenerator
from qholo.report_generator.writers.json_reporting_writer import JSONConvergenceWriter

logger = logging.getLogger("qholo")


def design(
    config_path: ConfigOption = None,
    out: OutOption = None,
    log_level: LogLevelOption = "INFO",
) -> None:
    """
    Design the circular-polarization phase masks for the configured target
    with the phase-difference constrained Gerchberg-Saxton loop.
    """
    config, store = start_command(config_path, out, log_level)
    with input_errors():
        target = build_target(config)
        masks, report = design_masks(config, target)

        store.write_masks(masks)
        store.write_text(
            "convergence.json", ReportGenerator(JSONConvergenceWriter()).generate_report(report)
        )
        store.write_intensity(
            "target",
            IntensityMap.from_values(target.grid, target.amplitude**2),
            {"regions": {region.name: region.theta for region in target.regions}},
        )
        write_manifest(store, "design", config)

    if not report.converged:
        typer.echo(
            f"GS did not converge in {report.iterations_run} iterations; "
            f"masks written to {store.output_dir}",
            err=True,
        )
        raise typer.Exit(code=EXIT_NOT_CONVERGED)
    typer.echo(f"Converged after {report.iterations_run} iterations: {store.output_dir}")

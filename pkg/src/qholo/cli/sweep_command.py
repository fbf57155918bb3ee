# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Command for the signal polarizer sweep with the eraser on and off

import logging

import typer

from qholo.cli.command_context import (
    ConfigOption,
    LogLevelOption,
    OutOption,
    input_errors,
    start_command,
    write_manifest,
)
from qholo.pipeline.experiment_runner import (
    build_target,
    resolve_holograms,
    sample_sweep,
    summarize_sweep,
)
from qholo.report_generator.renderers.sweep_plot import render_sweep_png
from qholo.report_generator.report_generator import ReportGenerator
from qholo.report_generator.writers.csv_reporting_writer import CSVSweepWriter
from qholo.report_generator.writers.json_reporting_writer import JSONMetricsWriter

logger = logging.getLogger("qholo")

ERASER_ON = "eraser on (H)"
ERASER_OFF = "eraser off"


def sweep(
    config_path: ConfigOption = None,
    out: OutOption = None,
    log_level: LogLevelOption = "INFO",
) -> None:
    """
    Rotate the signal polarizer through the schedule with the idler behind
    an H polarizer and with no idler polarizer; fit each letter's curve.
    """
    config, store = start_command(config_path, out, log_level)
    with input_errors():
        config.require_signal_angles()
        holograms = resolve_holograms(config, build_target(config))
        samples = sample_sweep(
            holograms, config.signal_angles, config.spad if config.monte_carlo else None
        )

        csv_writer = ReportGenerator(CSVSweepWriter(holograms.masks.letters))
        store.write_text("sweep_eraser_on.csv", csv_writer.generate_report(samples.eraser_on))
        store.write_text("sweep_eraser_off.csv", csv_writer.generate_report(samples.eraser_off))
        result = summarize_sweep(samples, holograms.masks)
        json_writer = ReportGenerator(JSONMetricsWriter())
        store.write_text("metrics_eraser_on.json", json_writer.generate_report(result.report_on))
        store.write_text(
            "metrics_eraser_off.json", json_writer.generate_report(result.report_off)
        )
        store.write_binary(
            "sweep.png",
            render_sweep_png(
                {ERASER_ON: result.eraser_on, ERASER_OFF: result.eraser_off},
                {
                    ERASER_ON: result.report_on.visibilities,
                    ERASER_OFF: result.report_off.visibilities,
                },
                holograms.masks.thetas,
            ),
        )
        write_manifest(store, "sweep", config)
    if not result.report_on.visibilities:
        typer.echo("Fewer than 8 sweep angles; curves written without fits")
    typer.echo(f"Sweep over {len(result.signal_angles)} angles written to {store.output_dir}")

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Command for turning phase masks into a geometric-phase metasurface profile

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
from qholo.metasurface.profile import field_of_view_fraction, synthesize
from qholo.pipeline.experiment_runner import build_target, resolve_masks
from qholo.report_generator.report_generator import ReportGenerator
from qholo.report_generator.writers.csv_reporting_writer import CSVRotationWriter

logger = logging.getLogger("qholo")


def synth(
    config_path: ConfigOption = None,
    out: OutOption = None,
    log_level: LogLevelOption = "INFO",
) -> None:
    """
    Combine phi_L and phi_R with the lens phase into the single metasurface
    profile and its nanofin rotation map.
    """
    config, store = start_command(config_path, out, log_level)
    with input_errors():
        source_grid = config.grid.source_grid()
        masks = resolve_masks(config, build_target(config))
        profile = synthesize(masks, config.optics)

        store.write_profile(
            profile,
            {
                "wavelength_m": config.optics.wavelength,
                "focal_length_m": config.optics.focal_length,
                "field_of_view_fraction": field_of_view_fraction(source_grid, config.optics),
                "conversion_efficiency": config.optics.conversion_efficiency,
            },
        )
        store.write_text(
            "rotation.csv", ReportGenerator(CSVRotationWriter()).generate_report(profile)
        )
        write_manifest(store, "synth", config)
    typer.echo(
        f"Profile with {len(profile.degenerate_pixels)} degenerate pixels: {store.output_dir}"
    )

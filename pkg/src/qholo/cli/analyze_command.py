# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Command for the erasure metrics of a heralded image set

import logging

import typer

from qholo.artifact_management.artifact_store import read_herald_images, read_sweep
from qholo.cli.command_context import (
    ConfigOption,
    LogLevelOption,
    OutOption,
    input_errors,
    start_command,
    write_manifest,
)
from qholo.pipeline.experiment_runner import (
    HeraldSet,
    analyze_herald_set,
    build_target,
    check_common_grid,
    herald_images,
    masks_for_images,
    measure_herald_set,
    resolve_holograms,
)
from qholo.report_generator.report_generator import ReportGenerator
from qholo.report_generator.writers.json_reporting_writer import JSONMetricsWriter

logger = logging.getLogger("qholo")


def analyze(
    config_path: ConfigOption = None,
    out: OutOption = None,
    log_level: LogLevelOption = "INFO",
) -> None:
    """
    Compute intensity drops, contrasts and correlations for a heralded image
    set: inputs.images_dir, or a fresh in-memory herald run when unset.
    With inputs.sweep_csv the stored signal sweep is fitted as well.
    """
    config, store = start_command(config_path, out, log_level)
    with input_errors():
        target = build_target(config)
        images_dir = config.inputs.images_dir
        if images_dir is not None:
            stored = read_herald_images(images_dir)
            images = HeraldSet(stored.reference, stored.erased, raw=stored.raw)
            provenance: dict[str, object] = {
                "images_dir": images_dir,
                "tier": stored.reference_document.get("tier"),
                "monte_carlo": stored.reference_document.get("monte_carlo"),
            }
        else:
            images = herald_images(resolve_holograms(config, target), config.idler_angles)
            if config.monte_carlo:
                images = measure_herald_set(images, config.spad)
            provenance = {"tier": config.tier.value, "monte_carlo": config.monte_carlo}
        grid = check_common_grid(
            [images.reference, *images.erased.values(), *images.raw.values()]
        )
        masks = masks_for_images(config, target, grid)
        sweep_csv = config.inputs.sweep_csv
        sweep = read_sweep(sweep_csv) if sweep_csv is not None else []
        if sweep_csv is not None:
            provenance["sweep_csv"] = sweep_csv
        report = analyze_herald_set(images, masks, provenance, sweep)

        store.write_text(
            "metrics.json", ReportGenerator(JSONMetricsWriter()).generate_report(report)
        )
        write_manifest(store, "analyze", config)
    if report.mean_drop_db is not None:
        typer.echo(f"Mean erased-letter drop {report.mean_drop_db:.2f} dB")
    if report.visibilities:
        typer.echo(f"Fitted sweep visibilities for {len(report.visibilities)} letters")

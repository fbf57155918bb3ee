# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Command for the heralded quantum-eraser image set

import logging
import math

import typer

from qholo.artifact_management.artifact_store import (
    NO_ERASER_STEM,
    RAW_PREFIX,
    herald_stem,
)
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
    herald_images,
    measure_herald_set,
    resolve_holograms,
)

logger = logging.getLogger("qholo")


def herald(
    config_path: ConfigOption = None,
    out: OutOption = None,
    log_level: LogLevelOption = "INFO",
) -> None:
    """
    Write the no-eraser image and one heralded image per idler polarizer
    angle in the schedule.
    """
    config, store = start_command(config_path, out, log_level)
    with input_errors():
        holograms = resolve_holograms(config, build_target(config))
        images = herald_images(holograms, config.idler_angles)
        if config.monte_carlo:
            images = measure_herald_set(images, config.spad)

        provenance = {"tier": holograms.tier.value, "monte_carlo": config.monte_carlo}
        store.write_intensity(NO_ERASER_STEM, images.reference, provenance)
        for angle, image in sorted(images.erased.items()):
            extra = {
                **provenance,
                "idler_angle_deg": math.degrees(angle),
                "heralding_probability": images.probabilities.get(angle),
            }
            store.write_intensity(herald_stem(angle), image, extra)
            if angle in images.raw:
                store.write_intensity(RAW_PREFIX + herald_stem(angle), images.raw[angle], extra)
        write_manifest(store, "herald", config)
    typer.echo(
        f"Wrote {len(images.erased)} heralded images and the no-eraser image, "
        f"leakage outside letters {holograms.leakage():.1%}"
    )

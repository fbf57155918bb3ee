# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Command for the photon counting detector run on one intensity map

import logging

import typer

from qholo.artifact_management.artifact_store import read_frames, read_intensity
from qholo.cli.command_context import (
    ConfigOption,
    LogLevelOption,
    OutOption,
    input_errors,
    start_command,
    write_manifest,
)
from qholo.metrics.image_metrics import MetricUndefinedError, pearson
from qholo.pipeline.experiment_runner import (
    build_target,
    herald_images,
    masks_for_images,
    resolve_holograms,
)
from qholo.spad_sim.spad import (
    accumulate_subtract,
    simulate_background,
    simulate_frames,
)

logger = logging.getLogger("qholo")


def frames(
    config_path: ConfigOption = None,
    out: OutOption = None,
    log_level: LogLevelOption = "INFO",
) -> None:
    """
    Record signal and background frame stacks for an intensity map and
    write the background-subtracted accumulation.

    The map is inputs.intensity_map, or the no-eraser image when unset.
    With inputs.frames_dir the stacks recorded by an earlier run are
    accumulated instead of simulating new ones.
    """
    config, store = start_command(config_path, out, log_level)
    with input_errors():
        target = build_target(config)
        if config.inputs.intensity_map is not None:
            image, _ = read_intensity(config.inputs.intensity_map)
        else:
            image = herald_images(resolve_holograms(config, target), ()).reference
        frames_dir = config.inputs.frames_dir
        if frames_dir is not None:
            signal = read_frames(frames_dir, "frames")
            background = read_frames(frames_dir, "background")
        else:
            signal = simulate_frames(image, config.spad)
            background = simulate_background(image.grid, config.spad)
        frame_count = signal.frames.shape[0]
        recovered = accumulate_subtract(signal, background)

        masks = masks_for_images(config, target, image.grid)
        correlations: dict[str, float | None] = {}
        for letter in masks.letters:
            try:
                correlations[letter] = pearson(recovered, image, masks.letter_pixels[letter])
            except MetricUndefinedError as e:
                logger.warning("Pearson for letter %s is undefined: %s", letter, e)
                correlations[letter] = None
        store.write_frames("frames", signal)
        store.write_frames("background", background)
        store.write_intensity("recovered", recovered, {"frames": frame_count})
        store.write_json(
            "frames_report.json",
            {
                "pearson_by_letter": correlations,
                "clamped_events": signal.clamped_events,
                "frames": frame_count,
            },
        )
        write_manifest(store, "frames", config)
    typer.echo(f"{frame_count} frames recorded to {store.output_dir}")

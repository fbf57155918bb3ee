# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Shared option types and the error boundary of every qholo command

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import replace
from typing import Annotated

import typer

from qholo.artifact_management.artifact_store import ArtifactStore
from qholo.config import ExperimentConfig, JsonConfigParser, default_config
from qholo.utils.logging import parse_log_level, setup_logging

logger = logging.getLogger("qholo")

EXIT_INPUT_ERROR = 2
EXIT_NOT_CONVERGED = 3

ConfigOption = Annotated[
    str | None,
    typer.Option(
        "--config",
        help="JSON experiment config, or the manifest.json of an earlier run to replay it.",
        rich_help_panel="Experiment Options",
    ),
]
OutOption = Annotated[
    str | None,
    typer.Option(
        "--out",
        help="Output directory. Overrides output_dir from the config.",
        rich_help_panel="Experiment Options",
    ),
]
LogLevelOption = Annotated[
    str,
    typer.Option(
        "--log-level",
        help="Set the logging level (DEBUG, INFO, WARNING, ERROR). Default is INFO.",
        rich_help_panel="Logging Options",
    ),
]


def fail(message: str) -> typer.Exit:
    logger.error("%s", message)
    typer.echo(f"Error: {message}", err=True)
    return typer.Exit(code=EXIT_INPUT_ERROR)


@contextmanager
def input_errors() -> Iterator[None]:
    """Turn invalid or unreadable inputs into exit code 2."""
    try:
        yield
    except (ValueError, OSError, KeyError) as e:
        raise fail(str(e)) from e


def start_command(
    config_path: str | None, out: str | None, log_level: str
) -> tuple[ExperimentConfig, ArtifactStore]:
    try:
        setup_logging(parse_log_level(log_level))
    except ValueError as e:
        raise fail(str(e)) from e
    with input_errors():
        config = (
            JsonConfigParser.load_experiment_config(config_path)
            if config_path is not None
            else default_config
        )
        if out is not None:
            config = replace(config, output_dir=out)
        store = ArtifactStore(config.output_dir)
    return config, store


def write_manifest(store: ArtifactStore, command: str, config: ExperimentConfig) -> None:
    store.write_manifest(command, JsonConfigParser.dump_experiment_config(config))
    logger.info("Wrote %d artifacts to %s", len(store.written), store.output_dir)

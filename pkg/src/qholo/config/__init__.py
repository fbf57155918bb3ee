# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from .experiment_config import (
    ConfigError,
    ExperimentConfig,
    GridConfig,
    GsConfig,
    InputPaths,
    default_config,
)
from .json_config_parser import JsonConfigParser

__all__ = [
    "ConfigError",
    "ExperimentConfig",
    "GridConfig",
    "GsConfig",
    "InputPaths",
    "JsonConfigParser",
    "default_config",
]

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from qholo.spad_sim.spad import (
    SPAD_PRESETS,
    FrameStack,
    SpadConfig,
    SpadConfigError,
    accumulate,
    accumulate_subtract,
    simulate_background,
    simulate_frames,
)

__all__ = [
    "SPAD_PRESETS",
    "FrameStack",
    "SpadConfig",
    "SpadConfigError",
    "accumulate",
    "accumulate_subtract",
    "simulate_background",
    "simulate_frames",
]

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from qholo.quantum.intensity import (
    IntensityMap,
    heralded_intensity,
    letter_intensity_law,
    unheralded_intensity,
)
from qholo.quantum.kets import PolarizationKet, StateValidationError
from qholo.quantum.state import (
    StateTerm,
    TwoPhotonState,
    apply_metasurface,
    bell_state,
    erasing_idler_angle,
    hybrid_state,
    project_idler,
    project_signal_polarizer,
)

__all__ = [
    "IntensityMap",
    "PolarizationKet",
    "StateTerm",
    "StateValidationError",
    "TwoPhotonState",
    "apply_metasurface",
    "bell_state",
    "erasing_idler_angle",
    "heralded_intensity",
    "hybrid_state",
    "letter_intensity_law",
    "project_idler",
    "project_signal_polarizer",
    "unheralded_intensity",
]

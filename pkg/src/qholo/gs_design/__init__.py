# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from qholo.gs_design.constraints import (
    AmplitudeOnlyConstraint,
    ImageConstraint,
    PhaseDifferenceConstraint,
    constrain_image,
)
from qholo.gs_design.gs_engine import (
    ConvergenceReport,
    PhaseMaskPair,
    modified_gs,
    random_initial_phases,
    reconstruct,
)
from qholo.gs_design.target import (
    CANONICAL_REGIONS,
    Region,
    TargetHologram,
    TargetValidationError,
    canonical_target,
    load_target,
    two_region_target,
)

__all__ = [
    "AmplitudeOnlyConstraint",
    "CANONICAL_REGIONS",
    "ConvergenceReport",
    "ImageConstraint",
    "PhaseDifferenceConstraint",
    "PhaseMaskPair",
    "Region",
    "TargetHologram",
    "TargetValidationError",
    "canonical_target",
    "constrain_image",
    "load_target",
    "modified_gs",
    "random_initial_phases",
    "reconstruct",
    "two_region_target",
]

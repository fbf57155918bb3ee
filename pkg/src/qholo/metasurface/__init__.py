# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from qholo.metasurface.forward_model import (
    TierComparison,
    compare_tiers,
    concentration_ratio,
    image_at_focus,
)
from qholo.metasurface.jones import PolarizedFieldPair, jones_apply
from qholo.metasurface.profile import (
    MetasurfaceProfile,
    OpticalConfig,
    field_of_view_fraction,
    synthesize,
)

__all__ = [
    "MetasurfaceProfile",
    "OpticalConfig",
    "PolarizedFieldPair",
    "TierComparison",
    "compare_tiers",
    "concentration_ratio",
    "field_of_view_fraction",
    "image_at_focus",
    "jones_apply",
    "synthesize",
]

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from qholo.field_core.grid import (
    ComplexField,
    FieldValidationError,
    GridSpec,
    PhaseMask,
    fourier_plane_grid,
    wrap_phase,
)
from qholo.field_core.lens import LensKind, lens_phase
from qholo.field_core.propagation import propagate
from qholo.field_core.resampling import resample_map
from qholo.field_core.transforms import dft2, idft2

__all__ = [
    "ComplexField",
    "FieldValidationError",
    "GridSpec",
    "LensKind",
    "PhaseMask",
    "dft2",
    "fourier_plane_grid",
    "idft2",
    "lens_phase",
    "propagate",
    "resample_map",
    "wrap_phase",
]

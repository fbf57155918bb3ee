# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Centered, unitary 2-D discrete Fourier transforms.

The zero-frequency sample sits at pixel (width//2, height//2), the same pixel
that GridSpec treats as the physical origin, and the 1/sqrt(width*height)
normalization makes both directions energy preserving.
"""

import numpy as np
import scipy.fft

from qholo.field_core.grid import ComplexField, GridSpec
from qholo.utils.threads import resolve_thread_count


def dft2(field: ComplexField, grid: GridSpec | None = None) -> ComplexField:
    """Forward transform; the result is labelled with `grid` when given."""
    spectrum = np.fft.fftshift(
        scipy.fft.fft2(
            np.fft.ifftshift(field.samples),
            norm="ortho",
            workers=resolve_thread_count(),
        )
    )
    return ComplexField(grid or field.grid, spectrum)


def idft2(field: ComplexField, grid: GridSpec | None = None) -> ComplexField:
    samples = np.fft.fftshift(
        scipy.fft.ifft2(
            np.fft.ifftshift(field.samples),
            norm="ortho",
            workers=resolve_thread_count(),
        )
    )
    return ComplexField(grid or field.grid, samples)

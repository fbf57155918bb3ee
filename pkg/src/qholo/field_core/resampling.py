# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import numpy as np
from numpy.typing import NDArray
from scipy import ndimage

from qholo.field_core.grid import FieldValidationError, GridSpec


def resample_map(
    values: NDArray[np.generic],
    source_grid: GridSpec,
    target_grid: GridSpec,
    order: int = 1,
) -> NDArray[np.generic]:
    """Resample a real map between grids by physical coordinate.

    order=1 is bilinear (intensities), order=0 is nearest (label maps).
    Samples that fall outside the source grid are 0.
    """
    if values.shape != source_grid.shape:
        raise FieldValidationError(
            f"Map shape {values.shape} does not match grid {source_grid.shape}"
        )
    if order not in (0, 1):
        raise FieldValidationError(f"Only order 0 or 1 resampling is supported, got {order}")
    xx, yy = target_grid.coordinates()
    cols = xx / source_grid.pitch + source_grid.width // 2
    rows = yy / source_grid.pitch + source_grid.height // 2
    if order == 0:
        # exact-nearest indexing keeps integer labels intact
        cols = np.floor(cols + 0.5)
        rows = np.floor(rows + 0.5)
    resampled = ndimage.map_coordinates(
        np.asarray(values, dtype=np.float64),
        [rows, cols],
        order=order,
        mode="constant",
        cval=0.0,
    )
    if order == 0:
        return resampled.astype(values.dtype)
    return resampled

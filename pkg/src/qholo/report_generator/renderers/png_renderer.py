# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""8-bit grayscale PNG previews of intensity maps."""

import io
from typing import Any

import numpy as np
from PIL import Image

from qholo.field_core.grid import RealArray


def grayscale_normalization(values: RealArray) -> dict[str, Any]:
    """Linear map from [0, max] onto 0..255; negative pixels render black."""
    peak = float(np.max(values, initial=0.0))
    return {"scale": "linear", "black": 0.0, "white": peak if peak > 0 else 1.0}


def render_png(values: RealArray, normalization: dict[str, Any] | None = None) -> bytes:
    normalization = normalization or grayscale_normalization(values)
    black = float(normalization["black"])
    white = float(normalization["white"])
    scaled = np.clip((np.asarray(values, dtype=np.float64) - black) / (white - black), 0.0, 1.0)
    pixels = np.round(255 * scaled).astype(np.uint8)
    buffer = io.BytesIO()
    Image.fromarray(pixels).save(buffer, format="PNG")
    return buffer.getvalue()

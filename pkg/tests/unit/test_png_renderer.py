# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import io
import math

import numpy as np
from PIL import Image

from qholo.metrics.visibility import SweepSample, VisibilityFit
from qholo.report_generator.renderers.png_renderer import grayscale_normalization, render_png
from qholo.report_generator.renderers.sweep_plot import render_sweep_png

PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"


def test_normalization_spans_zero_to_peak() -> None:
    assert grayscale_normalization(np.array([[0.0, 4.0], [-1.0, 2.0]])) == {
        "scale": "linear",
        "black": 0.0,
        "white": 4.0,
    }


def test_black_map_gets_a_unit_white_point() -> None:
    assert grayscale_normalization(np.zeros((2, 2)))["white"] == 1.0


def test_render_png_maps_values_to_eight_bits() -> None:
    values = np.array([[0.0, 1.0], [2.0, -3.0]])

    content = render_png(values)

    image = Image.open(io.BytesIO(content))
    assert image.mode == "L"
    assert image.size == (2, 2)
    np.testing.assert_array_equal(np.asarray(image), [[0, 128], [255, 0]])


def test_render_png_honours_a_given_normalization() -> None:
    content = render_png(np.array([[1.0, 3.0]]), {"scale": "linear", "black": 1.0, "white": 3.0})

    np.testing.assert_array_equal(np.asarray(Image.open(io.BytesIO(content))), [[0, 255]])


def test_sweep_plot_is_a_deterministic_png() -> None:
    samples = [
        SweepSample(math.radians(15.0 * step), {"H": math.sin(math.radians(15.0 * step)) ** 2})
        for step in range(13)
    ]
    fit = VisibilityFit(amplitude=1.0, offset=0.0, delta=0.0, visibility=1.0, residual_rms=0.0)

    first = render_sweep_png({"on": samples, "off": samples}, {"on": {"H": fit}}, {"H": 0.0})
    second = render_sweep_png({"on": samples, "off": samples}, {"on": {"H": fit}}, {"H": 0.0})

    assert first.startswith(PNG_SIGNATURE)
    assert first == second

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Polarizer-sweep curves: per-letter means with the fitted model overlaid."""

import io
import math
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from qholo.field_core.grid import RealArray  # noqa: E402
from qholo.metrics.visibility import SweepSample, VisibilityFit  # noqa: E402

LETTER_COLORS = {"H": "tab:blue", "D": "tab:orange", "V": "tab:green", "A": "tab:red"}


def _fitted_curve(fit: VisibilityFit, theta: float, angles: RealArray) -> RealArray:
    return np.asarray(
        fit.amplitude * np.sin(angles - theta / 2 + fit.delta) ** 2 + fit.offset,
        dtype=np.float64,
    )


def render_sweep_png(
    panels: Mapping[str, Sequence[SweepSample]],
    fits: Mapping[str, Mapping[str, VisibilityFit]],
    thetas: Mapping[str, float],
) -> bytes:
    """One panel per named sweep (e.g. eraser on / off), letters as series."""
    figure, axes = plt.subplots(1, len(panels), figsize=(5 * len(panels), 4), squeeze=False)
    try:
        for axis, (title, samples) in zip(axes[0], panels.items()):
            degrees = np.array([math.degrees(sample.phi_s) for sample in samples])
            dense = np.linspace(0.0, math.pi, 181)
            for letter, theta in thetas.items():
                color = LETTER_COLORS.get(letter)
                values = [sample.intensities[letter] for sample in samples]
                axis.plot(degrees, values, "o", color=color, label=letter)
                fit = fits.get(title, {}).get(letter)
                if fit is not None:
                    axis.plot(
                        np.degrees(dense),
                        _fitted_curve(fit, theta, dense),
                        "-",
                        color=color,
                        label=f"{letter} fit, V={fit.visibility:.2f}",
                    )
            axis.set_title(title)
            axis.set_xlabel("signal polarizer angle (deg)")
            axis.set_ylabel("mean letter intensity (a.u.)")
            axis.set_xlim(0, 180)
            axis.legend(fontsize="small")
        figure.tight_layout()
        buffer = io.BytesIO()
        figure.savefig(buffer, format="png", dpi=100, metadata={"Software": None})
        return buffer.getvalue()
    finally:
        plt.close(figure)

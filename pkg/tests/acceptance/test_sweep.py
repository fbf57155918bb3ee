# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import math

import numpy as np
import pytest

from qholo.metrics.visibility import fit_sweep
from qholo.pipeline.experiment_runner import (
    measure_sweep,
    run_sweep,
    sweep_images,
    sweep_samples,
)
from qholo.pipeline.holograms import HologramPair
from qholo.quantum.intensity import unheralded_intensity
from qholo.quantum.state import hybrid_state
from qholo.spad_sim.spad import high_flux_config

SIGNAL_ANGLES = [math.radians(15.0 * step) for step in range(13)]


@pytest.mark.timeout(300)
def test_h_eraser_sweep_follows_the_interference_law(ideal: HologramPair) -> None:
    result = run_sweep(ideal, SIGNAL_ANGLES)

    assert set(result.report_on.visibilities) == {"H", "D", "V", "A"}
    for letter, fit in result.report_on.visibilities.items():
        assert fit.visibility >= 0.98, letter
        assert abs(math.degrees(fit.delta)) <= 1.0, letter


@pytest.mark.timeout(300)
def test_eraser_off_curves_are_flat(ideal: HologramPair) -> None:
    result = run_sweep(ideal, SIGNAL_ANGLES)

    for letter in ideal.masks.letters:
        values = np.array([sample.intensities[letter] for sample in result.eraser_off])
        np.testing.assert_allclose(values, values[0], rtol=1e-12, atol=0)


@pytest.mark.timeout(600)
def test_counted_eraser_off_curves_fit_to_low_visibility(ideal: HologramPair) -> None:
    images = sweep_images(ideal, SIGNAL_ANGLES, eraser=False)
    reference_total = unheralded_intensity(hybrid_state(ideal.psi_L, ideal.psi_R)).total() / 2

    measured = measure_sweep(images, reference_total, high_flux_config)

    fits = fit_sweep(sweep_samples(measured, SIGNAL_ANGLES, ideal.masks), ideal.masks.thetas)
    for letter, fit in fits.items():
        assert fit.visibility <= 0.02, letter

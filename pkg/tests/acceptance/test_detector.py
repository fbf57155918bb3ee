# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import math

import pytest

from qholo.metrics.image_metrics import pearson
from qholo.pipeline.experiment_runner import (
    analyze_herald_set,
    herald_images,
    measure,
    measure_herald_set,
)
from qholo.pipeline.holograms import HologramPair
from qholo.spad_sim.spad import SpadConfig, high_flux_config

IDLER_ANGLES = (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4)


@pytest.mark.timeout(300)
def test_high_flux_acquisition_recovers_the_remaining_letters(ideal: HologramPair) -> None:
    images = herald_images(ideal, (math.pi / 2,))
    analytic = images.erased[math.pi / 2]

    measured = measure(analytic, images.reference.total(), high_flux_config)

    assert measured.signal.frames.shape[0] == 600
    for letter in ideal.masks.letters:
        # the idler at 90 degrees erases V
        if letter == "V":
            continue
        r = pearson(measured.recovered, analytic, ideal.masks.region(letter))
        assert r >= 0.95, letter


@pytest.mark.timeout(300)
def test_counted_herald_set_keeps_letter_correlations(ideal: HologramPair) -> None:
    images = measure_herald_set(herald_images(ideal, IDLER_ANGLES), high_flux_config)

    report = analyze_herald_set(images, ideal.masks)

    for record in report.erasures:
        for letter, value in record.pearson.items():
            assert value is not None and value >= 0.9, letter
        assert all(value is not None for value in record.contrast_db.values())


@pytest.mark.timeout(600)
def test_default_photon_rates_still_show_erasure_but_miss_the_image_quality_bar(
    ideal: HologramPair,
) -> None:
    images = herald_images(ideal, IDLER_ANGLES)

    dim = analyze_herald_set(measure_herald_set(images, SpadConfig()), ideal.masks)
    bright = analyze_herald_set(measure_herald_set(images, high_flux_config), ideal.masks)

    for record in dim.erasures:
        assert record.drop.value_db <= -6.0, record.erased_letter
    assert dim.mean_pearson is not None and bright.mean_pearson is not None
    # 50 photons a frame against one dark count per pixel leaves the letters shot-noise bound
    assert dim.mean_pearson < 0.95
    assert dim.mean_pearson < bright.mean_pearson

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import numpy as np
import pytest

from qholo.field_core.grid import ComplexField, GridSpec, fourier_plane_grid
from qholo.gs_design.gs_engine import random_initial_phases
from qholo.gs_design.target import TargetHologram, TargetValidationError, canonical_target
from qholo.metasurface.profile import OpticalConfig, synthesize
from qholo.pipeline.holograms import HologramPair, Tier, build_holograms

OPTICS = OpticalConfig(focal_length=100e-6)
SOURCE = GridSpec(64, 64, 0.7e-6)
IMAGE = fourier_plane_grid(SOURCE, OPTICS.wavelength, OPTICS.focal_length)


@pytest.fixture(scope="module")
def target() -> TargetHologram:
    return canonical_target(IMAGE, extent_fraction=0.3)


def test_ideal_holograms_live_on_the_fourier_plane(target: TargetHologram) -> None:
    masks = random_initial_phases(SOURCE, seed=4)

    holograms = build_holograms(Tier.IDEAL, target, OPTICS, phase_masks=masks)

    assert holograms.tier is Tier.IDEAL
    assert holograms.psi_L.grid == IMAGE
    assert holograms.psi_R.grid == IMAGE
    assert holograms.masks.grid == IMAGE
    assert holograms.masks.letters == ("H", "D", "V", "A")
    assert holograms.profile is None


def test_physical_holograms_share_one_normalization(target: TargetHologram) -> None:
    profile = synthesize(random_initial_phases(SOURCE, seed=4), OPTICS)

    holograms = build_holograms(Tier.PHYSICAL, target, OPTICS, profile=profile)

    assert holograms.tier is Tier.PHYSICAL
    assert holograms.psi_L.grid == SOURCE
    assert holograms.masks.grid.same_geometry(SOURCE)
    assert holograms.profile is profile
    mean_energy = (holograms.psi_L.energy() + holograms.psi_R.energy()) / 2
    assert mean_energy == pytest.approx(1.0, rel=1e-12)


def test_physical_tier_synthesizes_a_profile_from_masks(target: TargetHologram) -> None:
    masks = random_initial_phases(SOURCE, seed=4)

    holograms = build_holograms(Tier.PHYSICAL, target, OPTICS, phase_masks=masks)

    assert holograms.profile is not None
    expected = synthesize(masks, OPTICS)
    np.testing.assert_array_equal(holograms.profile.trl_phase.phase, expected.trl_phase.phase)


def test_physical_masks_keep_every_letter(target: TargetHologram) -> None:
    masks = random_initial_phases(SOURCE, seed=4)

    holograms = build_holograms(Tier.PHYSICAL, target, OPTICS, phase_masks=masks)

    for letter in holograms.masks.letters:
        assert np.any(holograms.masks.letter_pixels[letter]), letter


@pytest.mark.parametrize("tier", [Tier.IDEAL, Tier.PHYSICAL])
def test_missing_inputs_are_rejected(target: TargetHologram, tier: Tier) -> None:
    with pytest.raises(TargetValidationError):
        build_holograms(tier, target, OPTICS)


def test_leakage_is_the_energy_share_outside_the_letters(target: TargetHologram) -> None:
    masks = build_holograms(
        Tier.IDEAL, target, OPTICS, phase_masks=random_initial_phases(SOURCE, seed=4)
    ).masks
    letters = np.logical_or.reduce(list(masks.letter_pixels.values()))
    inside = ComplexField(IMAGE, letters.astype(np.complex128))
    uniform = ComplexField(IMAGE, np.ones(IMAGE.shape, dtype=np.complex128))

    assert HologramPair(Tier.IDEAL, inside, inside, masks).leakage() == 0.0
    assert HologramPair(Tier.IDEAL, uniform, inside, masks).leakage() == pytest.approx(
        np.count_nonzero(~letters) / (letters.size + np.count_nonzero(letters))
    )

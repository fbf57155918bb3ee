# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import numpy as np
import pytest

from qholo.field_core.grid import ComplexField, FieldValidationError, GridSpec, PhaseMask
from qholo.metasurface.jones import jones_apply
from qholo.metasurface.profile import MetasurfaceProfile, OpticalConfig
from qholo.quantum.kets import PolarizationKet, StateValidationError

GRID = GridSpec(8, 8, 0.7e-6)


def _profile() -> MetasurfaceProfile:
    rng = np.random.default_rng(9)
    return MetasurfaceProfile.from_trl_phase(
        PhaseMask.from_radians(GRID, rng.uniform(-np.pi, np.pi, GRID.shape))
    )


def _aperture() -> ComplexField:
    return ComplexField.uniform(GRID, 1.0 / 8)


def test_lcp_converts_to_rcp_with_profile_phase() -> None:
    profile = _profile()

    out = jones_apply(profile, PolarizationKet.left(), _aperture(), OpticalConfig())

    np.testing.assert_allclose(out.rcp.samples, profile.t_rl() / 8, atol=1e-15)
    assert out.lcp.energy() == 0.0


def test_rcp_converts_to_lcp_with_conjugate_phase() -> None:
    profile = _profile()

    out = jones_apply(profile, PolarizationKet.right(), _aperture(), OpticalConfig())

    np.testing.assert_allclose(
        out.lcp.samples, np.exp(-1j * profile.trl_phase.phase) / 8, atol=1e-15
    )
    assert out.rcp.energy() == 0.0


def test_partial_conversion_splits_energy() -> None:
    out = jones_apply(
        _profile(), PolarizationKet.left(), _aperture(), OpticalConfig(conversion_efficiency=0.8)
    )

    assert out.cross_energy() == pytest.approx(0.8, abs=1e-12)
    assert out.co_energy() == pytest.approx(0.2, abs=1e-12)


@pytest.mark.parametrize("eta", [0.0, 0.3, 1.0])
def test_energy_is_conserved_for_any_incident_state(eta: float) -> None:
    incident = PolarizationKet(0.6, 0.8j)

    out = jones_apply(_profile(), incident, _aperture(), OpticalConfig(conversion_efficiency=eta))

    assert out.cross_energy() + out.co_energy() == pytest.approx(1.0, abs=1e-12)


def test_unnormalized_incident_state_is_rejected() -> None:
    with pytest.raises(StateValidationError):
        jones_apply(_profile(), PolarizationKet(1.0, 1.0), _aperture(), OpticalConfig())


def test_aperture_grid_must_match() -> None:
    with pytest.raises(FieldValidationError):
        jones_apply(
            _profile(),
            PolarizationKet.left(),
            ComplexField.uniform(GridSpec(4, 4, 0.7e-6)),
            OpticalConfig(),
        )

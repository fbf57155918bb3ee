# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Geometric-phase Jones operator in the circular basis.

A rotated half-wave element flips handedness and imprints e^{+i trl} on
LCP -> RCP and e^{-i trl} on RCP -> LCP. With conversion efficiency eta the
remaining sqrt(1 - eta) of each component passes with its handedness and
phase unchanged.
"""

import math
from dataclasses import dataclass

from qholo.field_core.grid import ComplexField, FieldValidationError
from qholo.metasurface.profile import MetasurfaceProfile, OpticalConfig
from qholo.quantum.kets import PolarizationKet


@dataclass(frozen=True, eq=False)
class PolarizedFieldPair:
    cross_rcp: ComplexField  # converted from the incident L component
    cross_lcp: ComplexField  # converted from the incident R component
    co_rcp: ComplexField  # unconverted R residual
    co_lcp: ComplexField  # unconverted L residual

    @property
    def rcp(self) -> ComplexField:
        return ComplexField(
            self.cross_rcp.grid, self.cross_rcp.samples + self.co_rcp.samples
        )

    @property
    def lcp(self) -> ComplexField:
        return ComplexField(
            self.cross_lcp.grid, self.cross_lcp.samples + self.co_lcp.samples
        )

    def cross_energy(self) -> float:
        return self.cross_rcp.energy() + self.cross_lcp.energy()

    def co_energy(self) -> float:
        return self.co_rcp.energy() + self.co_lcp.energy()


def jones_apply(
    profile: MetasurfaceProfile,
    incident: PolarizationKet,
    aperture: ComplexField,
    config: OpticalConfig,
) -> PolarizedFieldPair:
    incident.require_normalized("incident polarization")
    if aperture.grid != profile.grid:
        raise FieldValidationError(
            f"Aperture grid {aperture.grid} does not match profile grid {profile.grid}"
        )
    eta = config.conversion_efficiency
    converted = math.sqrt(eta)
    residual = math.sqrt(1.0 - eta)
    grid = profile.grid
    return PolarizedFieldPair(
        cross_rcp=ComplexField(
            grid, converted * incident.amp_L * profile.t_rl() * aperture.samples
        ),
        cross_lcp=ComplexField(
            grid, converted * incident.amp_R * profile.t_lr() * aperture.samples
        ),
        co_rcp=ComplexField(grid, residual * incident.amp_R * aperture.samples),
        co_lcp=ComplexField(grid, residual * incident.amp_L * aperture.samples),
    )

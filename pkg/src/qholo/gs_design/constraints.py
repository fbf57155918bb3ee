# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Image-plane projections used inside the Gerchberg-Saxton loop."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qholo.field_core.grid import ComplexField, FieldValidationError
from qholo.gs_design.target import TargetHologram

logger = logging.getLogger(__name__)

DEGENERATE_PHASE_FLAG = "degenerate_phase"


@dataclass(frozen=True, eq=False)
class ProjectedPair:
    psi_L: ComplexField
    psi_R: ComplexField
    degenerate: NDArray[np.bool_]  # pixels where the common phase was undefined

    @property
    def degenerate_count(self) -> int:
        return int(np.count_nonzero(self.degenerate))


def _check_grids(psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram) -> None:
    if not (
        psi_L.grid.same_geometry(target.grid) and psi_R.grid.same_geometry(target.grid)
    ):
        raise FieldValidationError(
            "psi_L, psi_R and the target must share the image-plane grid"
        )


def best_amplitude_scale(
    psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram
) -> float:
    """Common factor c minimizing the squared distance of |psi_L|, |psi_R| to c * amplitude."""
    foreground = target.foreground()
    wanted = target.amplitude[foreground]
    achieved = np.abs(psi_L.samples[foreground]) + np.abs(psi_R.samples[foreground])
    return float(np.sum(wanted * achieved)) / (2.0 * float(np.sum(wanted**2)))


class ImageConstraint(ABC):
    """Projection of an image-plane field pair onto a target's constraint set."""

    @abstractmethod
    def project(
        self, psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram
    ) -> ProjectedPair:
        pass


class PhaseDifferenceConstraint(ImageConstraint):
    """Amplitudes set to the target and a common phase chi shared by both channels.

    chi = Arg(psi_L e^{-i theta/2} + psi_R e^{i theta/2}) is the phase that
    minimizes the joint distance to the set of pairs whose difference is theta.
    """

    def __init__(self, degeneracy_tolerance: float = 0.0) -> None:
        self.degeneracy_tolerance = degeneracy_tolerance

    def project(
        self, psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram
    ) -> ProjectedPair:
        _check_grids(psi_L, psi_R, target)
        half = np.exp(0.5j * target.theta)
        combined = psi_L.samples * np.conj(half) + psi_R.samples * half
        foreground = target.foreground()
        degenerate = foreground & (np.abs(combined) <= self.degeneracy_tolerance)
        chi = np.where(degenerate, 0.0, np.angle(combined))
        common = target.amplitude * np.exp(1j * chi)
        out_L = np.where(foreground, common * half, 0.0)
        out_R = np.where(foreground, common * np.conj(half), 0.0)
        return ProjectedPair(
            ComplexField(target.grid, out_L, psi_L.flags),
            ComplexField(target.grid, out_R, psi_R.flags),
            degenerate,
        )


class AmplitudeOnlyConstraint(ImageConstraint):
    """Standard Gerchberg-Saxton image step, each channel keeping its own phase.

    Region pixels get the target amplitude times the least-squares scale shared
    by both channels; background pixels pass through untouched. This is the
    nearest point of the set `amplitude_error` measures the distance to, so the
    error of a standard run never increases.
    """

    def project(
        self, psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram
    ) -> ProjectedPair:
        _check_grids(psi_L, psi_R, target)
        foreground = target.foreground()
        scale = best_amplitude_scale(psi_L, psi_R, target)
        wanted = scale * target.amplitude
        outputs = []
        for psi in (psi_L, psi_R):
            phase = np.angle(psi.samples)
            outputs.append(
                ComplexField(
                    target.grid,
                    np.where(foreground, wanted * np.exp(1j * phase), psi.samples),
                    psi.flags,
                )
            )
        return ProjectedPair(outputs[0], outputs[1], np.zeros(target.grid.shape, dtype=bool))


def constrain_image(
    psi_L: ComplexField, psi_R: ComplexField, target: TargetHologram
) -> tuple[ComplexField, ComplexField]:
    """Enforce the target amplitude and exact phase difference theta.

    Pixels where the common phase is undefined get chi = 0 and both outputs
    carry the DEGENERATE_PHASE_FLAG.
    """
    projected = PhaseDifferenceConstraint().project(psi_L, psi_R, target)
    if projected.degenerate_count:
        logger.debug("%d degenerate pixels in image constraint", projected.degenerate_count)
        return (
            projected.psi_L.with_flags(DEGENERATE_PHASE_FLAG),
            projected.psi_R.with_flags(DEGENERATE_PHASE_FLAG),
        )
    return projected.psi_L, projected.psi_R

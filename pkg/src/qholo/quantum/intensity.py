# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Image-plane intensity maps derived from two-photon states."""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qholo.field_core.grid import FieldValidationError, GridSpec, RealArray
from qholo.quantum.kets import PolarizationKet, StateValidationError
from qholo.quantum.state import TwoPhotonState, contract_idler, contract_signal

_CIRCULAR_BASIS = (PolarizationKet.left(), PolarizationKet.right())


@dataclass(frozen=True, eq=False)
class IntensityMap:
    grid: GridSpec
    values: RealArray
    total_weight: float
    # measured maps come from background subtraction and may hold negative pixels
    measured: bool = False

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != self.grid.shape:
            raise FieldValidationError(
                f"Intensity shape {values.shape} does not match grid {self.grid.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise FieldValidationError("Intensity map contains non-finite values")
        if not self.measured and np.any(values < 0):
            raise FieldValidationError("Analytic intensity maps must be non-negative")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(
        cls, grid: GridSpec, values: RealArray, measured: bool = False
    ) -> "IntensityMap":
        return cls(grid, values, float(np.sum(values)), measured)

    def total(self) -> float:
        return float(np.sum(self.values))

    def mean_over(self, pixels: tuple[NDArray[np.intp], NDArray[np.intp]]) -> float:
        rows, cols = pixels
        if len(rows) == 0:
            raise FieldValidationError("Cannot average over an empty pixel set")
        return float(np.mean(self.values[rows, cols]))

    def __add__(self, other: "IntensityMap") -> "IntensityMap":
        if not self.grid.same_geometry(other.grid):
            raise FieldValidationError("Cannot add intensity maps on different grids")
        return IntensityMap(
            self.grid,
            self.values + other.values,
            self.total_weight + other.total_weight,
            self.measured or other.measured,
        )


def heralded_intensity(state: TwoPhotonState) -> IntensityMap:
    """|sum of remaining terms|^2 pixelwise; both polarization slots must be projected."""
    if not (state.idler_projected and state.signal_projected):
        raise StateValidationError(
            "Heralded intensity needs both idler and signal polarizations projected"
        )
    grid = state.grid
    if grid is None:
        raise StateValidationError("The state carries no spatial field")
    amplitude = np.zeros(grid.shape, dtype=np.complex128)
    for term in state.terms:
        assert term.field is not None  # noqa: S101
        amplitude += term.weight * term.field.samples
    values = np.abs(amplitude) ** 2
    return IntensityMap(grid, values, float(np.sum(values)))


def _trace_signal(state: TwoPhotonState) -> IntensityMap:
    if state.signal_projected:
        return heralded_intensity(state)
    maps = [heralded_intensity(contract_signal(state, ket)) for ket in _CIRCULAR_BASIS]
    return maps[0] + maps[1]


def unheralded_intensity(state: TwoPhotonState) -> IntensityMap:
    """Partial trace over the idler polarization.

    A signal photon that never met a polarizer is traced over as well, the
    way a bare camera would see it.
    """
    if state.idler_projected:
        raise StateValidationError("Unheralded intensity needs an unprojected idler slot")
    maps = [_trace_signal(contract_idler(state, ket)) for ket in _CIRCULAR_BASIS]
    return maps[0] + maps[1]


def letter_intensity_law(phi_s: float, theta_letter: float) -> float:
    """sin^2(phi_s - theta/2): relative letter brightness behind the H eraser."""
    return math.sin(phi_s - theta_letter / 2) ** 2

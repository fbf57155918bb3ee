# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Brute-force dense state vectors for small grids.

Axis 0 is the idler polarization {L, R}, axis 1 the signal polarization
{L, R}, axis 2 the flattened signal pixels. Only used to cross-check the
term-list algebra.
"""

import numpy as np

from qholo.field_core.grid import ComplexArray, ComplexField, FieldValidationError, RealArray
from qholo.quantum.kets import PolarizationKet, StateValidationError
from qholo.quantum.state import TwoPhotonState

MAX_ORACLE_PIXELS = 4096


def _ket_vector(ket: PolarizationKet) -> ComplexArray:
    return np.array([ket.amp_L, ket.amp_R], dtype=np.complex128)


def dense_vector(state: TwoPhotonState) -> ComplexArray:
    """Expand an unprojected state with signal fields into a (2, 2, N) array."""
    if state.idler_projected or state.signal_projected or state.grid is None:
        raise StateValidationError("The dense oracle needs both slots and a signal field")
    if state.grid.size > MAX_ORACLE_PIXELS:
        raise FieldValidationError(f"Oracle grids are limited to {MAX_ORACLE_PIXELS} pixels")
    vector = np.zeros((2, 2, state.grid.size), dtype=np.complex128)
    for term in state.terms:
        assert term.idler is not None and term.signal_pol is not None  # noqa: S101
        assert term.field is not None  # noqa: S101
        vector += term.weight * np.einsum(
            "i,s,p->isp",
            _ket_vector(term.idler),
            _ket_vector(term.signal_pol),
            term.field.samples.ravel(),
        )
    return vector


def metasurface_operator(psi_L: ComplexField, psi_R: ComplexField) -> ComplexArray:
    """The signal-side operator as a (2, N, 2) map from input polarization to (pol, pixel)."""
    if not psi_L.grid.same_geometry(psi_R.grid):
        raise FieldValidationError("psi_L and psi_R must share one grid")
    size = psi_L.grid.size
    operator = np.zeros((2, size, 2), dtype=np.complex128)
    operator[1, :, 0] = psi_L.samples.ravel()  # <L| -> |R, psi_L>
    operator[0, :, 1] = psi_R.samples.ravel()  # <R| -> |L, psi_R>
    return operator


def dense_after_metasurface(psi_L: ComplexField, psi_R: ComplexField) -> ComplexArray:
    """Apply the dense operator to (|L>|L> - |R>|R>)/sqrt(2)."""
    bell = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128) / np.sqrt(2)
    operator = metasurface_operator(psi_L, psi_R)
    return np.einsum("tpk,ik->itp", operator, bell)


def dense_heralded_intensity(
    vector: ComplexArray, idler: PolarizationKet, signal: PolarizationKet
) -> RealArray:
    amplitude = np.einsum(
        "i,s,isp->p", np.conj(_ket_vector(idler)), np.conj(_ket_vector(signal)), vector
    )
    return np.asarray(np.abs(amplitude) ** 2, dtype=np.float64)


def dense_unheralded_intensity(vector: ComplexArray, signal: PolarizationKet) -> RealArray:
    amplitude = np.einsum("s,isp->ip", np.conj(_ket_vector(signal)), vector)
    return np.asarray(np.sum(np.abs(amplitude) ** 2, axis=0), dtype=np.float64)


def polarization_density_matrix(state: TwoPhotonState) -> ComplexArray:
    """4x4 density matrix of a state without spatial content, (idler, signal) ordering."""
    if state.grid is not None or state.idler_projected or state.signal_projected:
        raise StateValidationError("Density matrices are built for pure polarization states")
    vector = np.zeros(4, dtype=np.complex128)
    for term in state.terms:
        assert term.idler is not None and term.signal_pol is not None  # noqa: S101
        vector += term.weight * np.kron(_ket_vector(term.idler), _ket_vector(term.signal_pol))
    return np.outer(vector, np.conj(vector))

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Two-photon states kept as short lists of product terms.

Each term is weight * |idler pol> (x) |signal pol> (x) |signal field>. A slot
that has been contracted with a polarizer is None. A None field is the
unit-norm placeholder mode the photon carries before the metasurface.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from qholo.field_core.grid import ComplexArray, ComplexField, FieldValidationError, GridSpec
from qholo.quantum.kets import PolarizationKet, StateValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StateTerm:
    weight: complex
    idler: PolarizationKet | None
    signal_pol: PolarizationKet | None
    field: ComplexField | None = None


def _overlap(
    a: object | None, b: object | None, inner: Callable[[object, object], complex]
) -> complex:
    if a is None and b is None:
        return 1.0
    return inner(a, b)


def _ket_inner(a: object, b: object) -> complex:
    assert isinstance(a, PolarizationKet) and isinstance(b, PolarizationKet)  # noqa: S101
    return a.inner(b)


def _field_inner(a: object, b: object) -> complex:
    assert isinstance(a, ComplexField) and isinstance(b, ComplexField)  # noqa: S101
    return complex(np.vdot(a.samples, b.samples))


@dataclass(frozen=True, eq=False)
class TwoPhotonState:
    terms: tuple[StateTerm, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise StateValidationError("A two-photon state needs at least one term")
        for slot in ("idler", "signal_pol", "field"):
            present = {getattr(term, slot) is not None for term in self.terms}
            if len(present) != 1:
                raise StateValidationError(
                    f"Terms disagree on whether the {slot} slot is projected"
                )
        grids = [term.field.grid for term in self.terms if term.field is not None]
        if any(not grid.same_geometry(grids[0]) for grid in grids[1:]):
            raise FieldValidationError("All signal fields must share one grid")

    @property
    def idler_projected(self) -> bool:
        return self.terms[0].idler is None

    @property
    def signal_projected(self) -> bool:
        return self.terms[0].signal_pol is None

    @property
    def grid(self) -> GridSpec | None:
        field = self.terms[0].field
        return field.grid if field is not None else None

    def gram_matrix(self) -> ComplexArray:
        size = len(self.terms)
        gram = np.empty((size, size), dtype=np.complex128)
        for i, a in enumerate(self.terms):
            for j, b in enumerate(self.terms):
                gram[i, j] = (
                    _overlap(a.idler, b.idler, _ket_inner)
                    * _overlap(a.signal_pol, b.signal_pol, _ket_inner)
                    * _overlap(a.field, b.field, _field_inner)
                )
        return gram

    def norm_squared(self) -> float:
        weights = np.array([term.weight for term in self.terms], dtype=np.complex128)
        return float(np.real(np.conj(weights) @ self.gram_matrix() @ weights))

    def scaled(self, factor: complex) -> "TwoPhotonState":
        return TwoPhotonState(
            tuple(replace(term, weight=term.weight * factor) for term in self.terms)
        )


def bell_state() -> TwoPhotonState:
    """(|L>_i|L>_s - |R>_i|R>_s)/sqrt(2) with the placeholder signal mode."""
    amplitude = 1 / math.sqrt(2)
    return TwoPhotonState(
        (
            StateTerm(amplitude, PolarizationKet.left(), PolarizationKet.left()),
            StateTerm(-amplitude, PolarizationKet.right(), PolarizationKet.right()),
        )
    )


def apply_metasurface(
    state: TwoPhotonState, psi_L: ComplexField, psi_R: ComplexField
) -> TwoPhotonState:
    """M = |R, psi_L><L| + |L, psi_R><R| on the signal photon. Not renormalized."""
    if not psi_L.grid.same_geometry(psi_R.grid):
        raise FieldValidationError("psi_L and psi_R must share one grid")
    if state.signal_projected:
        raise StateValidationError("The metasurface needs an unprojected signal polarization")
    if state.terms[0].field is not None:
        raise StateValidationError("The signal photon already carries a hologram")
    terms = []
    for term in state.terms:
        assert term.signal_pol is not None  # noqa: S101
        if term.signal_pol.amp_L != 0:
            terms.append(
                StateTerm(
                    term.weight * term.signal_pol.amp_L,
                    term.idler,
                    PolarizationKet.right(),
                    psi_L,
                )
            )
        if term.signal_pol.amp_R != 0:
            terms.append(
                StateTerm(
                    term.weight * term.signal_pol.amp_R,
                    term.idler,
                    PolarizationKet.left(),
                    psi_R,
                )
            )
    return TwoPhotonState(tuple(terms))


def contract_idler(state: TwoPhotonState, ket: PolarizationKet) -> TwoPhotonState:
    if state.idler_projected:
        raise StateValidationError("The idler slot is already projected")
    return TwoPhotonState(
        tuple(
            replace(term, weight=term.weight * ket.inner(term.idler), idler=None)
            for term in state.terms
            if term.idler is not None
        )
    )


def contract_signal(state: TwoPhotonState, ket: PolarizationKet) -> TwoPhotonState:
    if state.signal_projected:
        raise StateValidationError("The signal polarization is already projected")
    return TwoPhotonState(
        tuple(
            replace(term, weight=term.weight * ket.inner(term.signal_pol), signal_pol=None)
            for term in state.terms
            if term.signal_pol is not None
        )
    )


def project_idler(
    state: TwoPhotonState, polarizer: PolarizationKet | None
) -> tuple[TwoPhotonState, float]:
    """Herald on the idler passing `polarizer`; None means no polarization selection.

    Returns the unnormalized conditional state and its squared norm, the
    heralding probability.
    """
    if polarizer is None:
        return state, 1.0
    polarizer.require_normalized("idler polarizer")
    heralded = contract_idler(state, polarizer)
    probability = heralded.norm_squared()
    logger.debug("Idler heralding probability %.6g", probability)
    return heralded, probability


def project_signal_polarizer(state: TwoPhotonState, angle: float) -> TwoPhotonState:
    """Contract the signal polarization with the linear polarizer at `angle`."""
    return contract_signal(state, PolarizationKet.linear(angle))


def hybrid_state(psi_L: ComplexField, psi_R: ComplexField) -> TwoPhotonState:
    """(|L>_i|psi_L> - |R>_i|psi_R>)/sqrt(2): the metasurface followed by a fixed H polarizer."""
    intermediate = apply_metasurface(bell_state(), psi_L, psi_R)
    return project_signal_polarizer(intermediate, 0.0).scaled(math.sqrt(2))


def erasing_idler_angle(theta: float) -> float:
    """Idler polarizer angle in [0, pi) that nulls a region with phase difference theta."""
    return float(math.fmod(math.fmod(-theta / 2, math.pi) + math.pi, math.pi))

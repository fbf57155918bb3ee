# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Single-photon polarization kets in the circular {|L>, |R>} basis."""

import cmath
import math
from dataclasses import dataclass

NORMALIZATION_TOLERANCE = 1e-10


class StateValidationError(ValueError):
    pass


@dataclass(frozen=True)
class PolarizationKet:
    amp_L: complex
    amp_R: complex

    def __post_init__(self) -> None:
        if not (cmath.isfinite(self.amp_L) and cmath.isfinite(self.amp_R)):
            raise StateValidationError("Polarization amplitudes must be finite")

    @classmethod
    def left(cls) -> "PolarizationKet":
        return cls(1.0, 0.0)

    @classmethod
    def right(cls) -> "PolarizationKet":
        return cls(0.0, 1.0)

    @classmethod
    def linear(cls, angle: float) -> "PolarizationKet":
        """(|L> + e^{i 2 angle}|R>)/sqrt(2); angle 0 is horizontal."""
        return cls(1 / math.sqrt(2), cmath.exp(2j * angle) / math.sqrt(2))

    @classmethod
    def horizontal(cls) -> "PolarizationKet":
        return cls.linear(0.0)

    @classmethod
    def vertical(cls) -> "PolarizationKet":
        return cls.linear(math.pi / 2)

    @classmethod
    def diagonal(cls) -> "PolarizationKet":
        return cls.linear(math.pi / 4)

    @classmethod
    def antidiagonal(cls) -> "PolarizationKet":
        return cls.linear(3 * math.pi / 4)

    def norm_squared(self) -> float:
        return abs(self.amp_L) ** 2 + abs(self.amp_R) ** 2

    def is_normalized(self) -> bool:
        return abs(self.norm_squared() - 1.0) <= NORMALIZATION_TOLERANCE

    def require_normalized(self, role: str = "polarization ket") -> None:
        if not self.is_normalized():
            raise StateValidationError(
                f"The {role} must be normalized, got squared norm {self.norm_squared():.12g}"
            )

    def inner(self, other: "PolarizationKet") -> complex:
        """<self|other>."""
        return self.amp_L.conjugate() * other.amp_L + self.amp_R.conjugate() * other.amp_R

    def scaled(self, factor: complex) -> "PolarizationKet":
        return PolarizationKet(self.amp_L * factor, self.amp_R * factor)

    def orthogonal(self) -> "PolarizationKet":
        """A normalized ket orthogonal to this one."""
        self.require_normalized()
        return PolarizationKet(-self.amp_R.conjugate(), self.amp_L.conjugate())

    def dominant_handedness(self) -> str:
        return "L" if abs(self.amp_L) >= abs(self.amp_R) else "R"

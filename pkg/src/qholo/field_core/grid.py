# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Sampled scalar fields and the grids they live on."""

from dataclasses import dataclass, field, replace

import numpy as np
from numpy.typing import NDArray

ComplexArray = NDArray[np.complex128]
RealArray = NDArray[np.float64]


class FieldValidationError(ValueError):
    pass


def wrap_phase(phase: NDArray[np.floating] | float) -> RealArray:
    """Wrap radians to the half-open interval (-pi, pi]."""
    values = np.asarray(phase, dtype=np.float64)
    wrapped = np.pi - np.mod(np.pi - values, 2.0 * np.pi)
    # np.mod can round up to exactly 2*pi
    return np.where(wrapped <= -np.pi, np.pi, wrapped)


@dataclass(frozen=True)
class GridSpec:
    width: int  # pixels along x (columns)
    height: int  # pixels along y (rows)
    pitch: float  # meters per pixel

    def __post_init__(self) -> None:
        if self.width < 2 or self.height < 2:
            raise FieldValidationError(
                f"Grid must be at least 2x2 pixels, got {self.width}x{self.height}"
            )
        if not np.isfinite(self.pitch) or self.pitch <= 0:
            raise FieldValidationError(f"Grid pitch must be positive, got {self.pitch}")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.height, self.width)

    @property
    def size(self) -> int:
        return self.width * self.height

    def coordinates(self) -> tuple[RealArray, RealArray]:
        """Physical (x, y) of every pixel, origin at pixel (width//2, height//2)."""
        x = (np.arange(self.width) - self.width // 2) * self.pitch
        y = (np.arange(self.height) - self.height // 2) * self.pitch
        xx, yy = np.meshgrid(x, y, indexing="xy")
        return xx, yy

    def radius_squared(self) -> RealArray:
        xx, yy = self.coordinates()
        return np.asarray(xx**2 + yy**2, dtype=np.float64)

    def center_index(self) -> tuple[int, int]:
        # (row, column)
        return (self.height // 2, self.width // 2)

    def same_geometry(self, other: "GridSpec") -> bool:
        return self.shape == other.shape and bool(
            np.isclose(self.pitch, other.pitch, rtol=1e-12, atol=0.0)
        )


def fourier_plane_grid(
    source_grid: GridSpec, wavelength: float, focal_length: float
) -> GridSpec:
    """Image-plane grid of a Fourier hologram formed at distance focal_length."""
    if source_grid.width != source_grid.height:
        raise FieldValidationError(
            "Fourier-plane mapping needs a square source grid, "
            f"got {source_grid.width}x{source_grid.height}"
        )
    if wavelength <= 0 or focal_length <= 0:
        raise FieldValidationError("Wavelength and focal length must be positive")
    pitch = wavelength * focal_length / (source_grid.width * source_grid.pitch)
    return GridSpec(width=source_grid.width, height=source_grid.height, pitch=pitch)


@dataclass(frozen=True, eq=False)
class ComplexField:
    grid: GridSpec
    samples: ComplexArray
    flags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=np.complex128)
        if samples.shape != self.grid.shape:
            raise FieldValidationError(
                f"Samples shape {samples.shape} does not match grid {self.grid.shape}"
            )
        if not np.all(np.isfinite(samples)):
            raise FieldValidationError("Field contains non-finite samples")
        object.__setattr__(self, "samples", samples)

    @classmethod
    def uniform(cls, grid: GridSpec, value: complex = 1.0) -> "ComplexField":
        return cls(grid, np.full(grid.shape, value, dtype=np.complex128))

    @classmethod
    def zeros(cls, grid: GridSpec) -> "ComplexField":
        return cls(grid, np.zeros(grid.shape, dtype=np.complex128))

    def intensity(self) -> RealArray:
        return np.asarray(np.abs(self.samples) ** 2, dtype=np.float64)

    def energy(self) -> float:
        return float(np.sum(self.intensity()))

    def with_grid(self, grid: GridSpec) -> "ComplexField":
        """Relabel the same samples with another grid of identical shape."""
        if grid.shape != self.grid.shape:
            raise FieldValidationError(
                f"Cannot relabel a {self.grid.shape} field onto a {grid.shape} grid"
            )
        return replace(self, grid=grid)

    def with_flags(self, *flags: str) -> "ComplexField":
        return replace(self, flags=self.flags | frozenset(flags))

    def scaled(self, factor: complex) -> "ComplexField":
        return ComplexField(self.grid, self.samples * factor, self.flags)


@dataclass(frozen=True, eq=False)
class PhaseMask:
    grid: GridSpec
    phase: RealArray  # radians, wrapped to (-pi, pi]

    def __post_init__(self) -> None:
        phase = np.asarray(self.phase, dtype=np.float64)
        if phase.shape != self.grid.shape:
            raise FieldValidationError(
                f"Phase shape {phase.shape} does not match grid {self.grid.shape}"
            )
        if not np.all(np.isfinite(phase)):
            raise FieldValidationError("Phase mask contains non-finite values")
        if np.any(phase <= -np.pi) or np.any(phase > np.pi):
            raise FieldValidationError("Phase mask values must lie in (-pi, pi]")
        object.__setattr__(self, "phase", phase)

    @classmethod
    def from_radians(cls, grid: GridSpec, phase: NDArray[np.floating]) -> "PhaseMask":
        return cls(grid, wrap_phase(phase))

    @classmethod
    def zeros(cls, grid: GridSpec) -> "PhaseMask":
        return cls(grid, np.zeros(grid.shape, dtype=np.float64))

    def phasor(self) -> ComplexArray:
        return np.asarray(np.exp(1j * self.phase), dtype=np.complex128)

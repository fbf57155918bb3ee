# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Letter and regional-background pixel sets used by the image metrics."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qholo.field_core.grid import FieldValidationError, GridSpec
from qholo.field_core.resampling import resample_map
from qholo.gs_design.target import TargetHologram

BoolArray = NDArray[np.bool_]


@dataclass(frozen=True, eq=False)
class RegionMask:
    grid: GridSpec
    letter_pixels: dict[str, BoolArray]
    background_pixels: dict[str, BoolArray]
    thetas: dict[str, float]

    def __post_init__(self) -> None:
        if set(self.letter_pixels) != set(self.background_pixels) or set(
            self.letter_pixels
        ) != set(self.thetas):
            raise FieldValidationError("Letter, background and theta tables name different letters")
        for name, letter in self.letter_pixels.items():
            background = self.background_pixels[name]
            for mask in (letter, background):
                if mask.shape != self.grid.shape or mask.dtype != np.bool_:
                    raise FieldValidationError(
                        f"Masks for letter {name} must be boolean {self.grid.shape} arrays"
                    )
            if not letter.any():
                raise FieldValidationError(f"Letter {name} has no pixels")
            if not background.any():
                raise FieldValidationError(f"Letter {name} has no background pixels")
            if np.any(letter & background):
                raise FieldValidationError(f"Letter {name} overlaps its background")

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(self.letter_pixels)

    def region(self, letter: str) -> BoolArray:
        """Letter plus its regional background."""
        return self.letter_pixels[letter] | self.background_pixels[letter]

    @classmethod
    def from_target(cls, target: TargetHologram) -> "RegionMask":
        """Each letter's background is the dark part of the grid quadrant holding it."""
        center_row, center_col = target.grid.center_index()
        rows, cols = np.indices(target.grid.shape)
        dark = ~target.foreground()
        letters: dict[str, BoolArray] = {}
        backgrounds: dict[str, BoolArray] = {}
        for region in target.regions:
            letter = target.region_mask(region.name)
            letter_rows, letter_cols = np.nonzero(letter)
            top = letter_rows.mean() < center_row
            left = letter_cols.mean() < center_col
            quadrant = ((rows < center_row) == top) & ((cols < center_col) == left)
            letters[region.name] = letter
            backgrounds[region.name] = quadrant & dark
        return cls(
            target.grid,
            letters,
            backgrounds,
            {region.name: region.theta for region in target.regions},
        )

    def resampled(self, grid: GridSpec) -> "RegionMask":
        """Nearest-neighbour transfer onto another grid, e.g. the physical image plane."""

        def move(mask: BoolArray) -> BoolArray:
            return np.asarray(resample_map(mask.astype(np.int64), self.grid, grid, order=0) > 0)

        return RegionMask(
            grid,
            {name: move(mask) for name, mask in self.letter_pixels.items()},
            {name: move(mask) for name, mask in self.background_pixels.items()},
            dict(self.thetas),
        )

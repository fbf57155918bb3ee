# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Image-plane design targets: common amplitude, phase-difference map, regions."""

import io
import json
import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray
from PIL import Image

from qholo.adaptors.os import dirname, is_absolute, open_file, path_join, read_bytes
from qholo.field_core.grid import GridSpec, RealArray

logger = logging.getLogger(__name__)

BACKGROUND_LABEL = 0

LabelArray = NDArray[np.int64]


class TargetValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Region:
    name: str
    label: int
    theta: float  # radians, target Arg(psi_L / psi_R) inside the region

    def __post_init__(self) -> None:
        if self.label == BACKGROUND_LABEL:
            raise TargetValidationError(
                f"Region {self.name!r} cannot use the background label {BACKGROUND_LABEL}"
            )
        if not math.isfinite(self.theta):
            raise TargetValidationError(f"Region {self.name!r} has a non-finite theta")


# canonical letters and their phase differences
CANONICAL_REGIONS = (
    Region("H", 1, 0.0),
    Region("D", 2, 3 * math.pi / 2),
    Region("V", 3, math.pi),
    Region("A", 4, math.pi / 2),
)

_LETTER_BITMAPS = {
    "H": ("#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"),
    "D": ("####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####."),
    "V": ("#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."),
    "A": ("..#..", ".#.#.", "#...#", "#...#", "#####", "#...#", "#...#"),
}
LETTER_HEIGHT = 7
LETTER_WIDTH = 5


@dataclass(frozen=True, eq=False)
class TargetHologram:
    """Common amplitude |psi_L| = |psi_R| and target phase difference per pixel.

    Build instances with `from_regions`, which normalizes the amplitude and
    derives the theta map from the region table.
    """

    grid: GridSpec
    amplitude: RealArray
    theta: RealArray
    labels: LabelArray
    regions: tuple[Region, ...]

    def __post_init__(self) -> None:
        for name in ("amplitude", "theta", "labels"):
            array = getattr(self, name)
            if array.shape != self.grid.shape:
                raise TargetValidationError(
                    f"Target {name} shape {array.shape} does not match grid {self.grid.shape}"
                )
        if not np.all(np.isfinite(self.amplitude)) or np.any(self.amplitude < 0):
            raise TargetValidationError("Target amplitude must be finite and non-negative")
        if not np.isclose(np.sum(self.amplitude**2), 1.0, rtol=1e-9, atol=0.0):
            raise TargetValidationError("Target amplitude must satisfy sum(amplitude**2) == 1")
        names = [region.name for region in self.regions]
        labels = [region.label for region in self.regions]
        if len(set(names)) != len(names) or len(set(labels)) != len(labels):
            raise TargetValidationError("Region names and labels must be unique")
        unknown = set(np.unique(self.labels).tolist()) - set(labels) - {BACKGROUND_LABEL}
        if unknown:
            raise TargetValidationError(f"Label map uses undeclared labels {sorted(unknown)}")
        if np.any(self.amplitude[self.labels != BACKGROUND_LABEL] <= 0):
            raise TargetValidationError("Every region pixel must have positive amplitude")

    @classmethod
    def from_regions(
        cls,
        grid: GridSpec,
        amplitude: NDArray[np.floating],
        labels: NDArray[np.integer],
        regions: tuple[Region, ...] | list[Region],
    ) -> "TargetHologram":
        labels = np.asarray(labels, dtype=np.int64)
        values = np.where(labels != BACKGROUND_LABEL, np.asarray(amplitude, dtype=np.float64), 0.0)
        energy = float(np.sum(values**2))
        if not np.isfinite(energy) or energy <= 0:
            raise TargetValidationError("Target amplitude is zero everywhere")
        theta = np.zeros(grid.shape, dtype=np.float64)
        for region in regions:
            theta[labels == region.label] = region.theta
        return cls(grid, values / math.sqrt(energy), theta, labels, tuple(regions))

    def region(self, name: str) -> Region:
        for region in self.regions:
            if region.name == name:
                return region
        raise KeyError(name)

    def region_mask(self, name: str) -> NDArray[np.bool_]:
        return np.asarray(self.labels == self.region(name).label)

    def foreground(self) -> NDArray[np.bool_]:
        return np.asarray(self.labels != BACKGROUND_LABEL)

    def relabel(self, grid: GridSpec) -> "TargetHologram":
        """Same target on another grid of identical shape (e.g. the Fourier plane)."""
        if grid.shape != self.grid.shape:
            raise TargetValidationError(
                f"Cannot move a {self.grid.shape} target onto a {grid.shape} grid"
            )
        return TargetHologram(grid, self.amplitude, self.theta, self.labels, self.regions)


def letter_bitmap(name: str, scale: int = 1) -> NDArray[np.bool_]:
    rows = _LETTER_BITMAPS[name]
    bitmap = np.array([[char == "#" for char in row] for row in rows], dtype=bool)
    return np.asarray(np.kron(bitmap, np.ones((scale, scale), dtype=bool)), dtype=bool)


def canonical_target(
    grid: GridSpec, extent_fraction: float = 0.8, letter_scale: int | None = None
) -> TargetHologram:
    """Block letters H, D, V, A, one per quadrant of a centred box.

    The box side is extent_fraction of the grid. H sits top-left, D top-right,
    V bottom-left and A bottom-right. Without an explicit letter_scale the
    letters take up to 90% of a quadrant's height.
    """
    if not 0 < extent_fraction <= 1:
        raise TargetValidationError(
            f"extent_fraction must lie in (0, 1], got {extent_fraction}"
        )
    box_height = int(round(extent_fraction * grid.height))
    box_width = int(round(extent_fraction * grid.width))
    quadrant = min(box_height, box_width) // 2
    if letter_scale is None:
        letter_scale = max(1, int(0.9 * quadrant / LETTER_HEIGHT))
    if letter_scale < 1:
        raise TargetValidationError(f"letter_scale must be >= 1, got {letter_scale}")
    if letter_scale * LETTER_HEIGHT > quadrant:
        raise TargetValidationError(
            f"Letters of scale {letter_scale} do not fit a {quadrant}-pixel quadrant; "
            "use a larger grid or extent"
        )

    center_row, center_col = grid.center_index()
    offsets = {
        "H": (-1, -1),
        "D": (-1, 1),
        "V": (1, -1),
        "A": (1, 1),
    }
    labels = np.zeros(grid.shape, dtype=np.int64)
    for region in CANONICAL_REGIONS:
        bitmap = letter_bitmap(region.name, letter_scale)
        row_sign, col_sign = offsets[region.name]
        row_center = center_row + row_sign * box_height // 4
        col_center = center_col + col_sign * box_width // 4
        top = row_center - bitmap.shape[0] // 2
        left = col_center - bitmap.shape[1] // 2
        window = labels[top : top + bitmap.shape[0], left : left + bitmap.shape[1]]
        window[bitmap] = region.label

    logger.debug(
        "Canonical target on %dx%d grid: box %dx%d, letter scale %d",
        grid.width,
        grid.height,
        box_width,
        box_height,
        letter_scale,
    )
    return TargetHologram.from_regions(
        grid, (labels != BACKGROUND_LABEL).astype(np.float64), labels, CANONICAL_REGIONS
    )


def two_region_target(
    grid: GridSpec, side: int | None = None, theta_q: float = math.pi
) -> TargetHologram:
    """Two squares left and right of centre: P with theta 0, Q with theta_q."""
    side = side or max(2, min(grid.width, grid.height) // 8)
    center_row, center_col = grid.center_index()
    offset = min(grid.width, grid.height) // 5
    if offset + side > min(grid.width, grid.height) // 2:
        raise TargetValidationError(f"Squares of side {side} do not fit the grid")
    regions = (Region("P", 1, 0.0), Region("Q", 2, theta_q))
    labels = np.zeros(grid.shape, dtype=np.int64)
    top = center_row - side // 2
    for region, col_center in zip(regions, (center_col - offset, center_col + offset)):
        left = col_center - side // 2
        labels[top : top + side, left : left + side] = region.label
    return TargetHologram.from_regions(
        grid, (labels != BACKGROUND_LABEL).astype(np.float64), labels, regions
    )


def _load_grayscale(image_path: str) -> NDArray[np.uint8]:
    with Image.open(io.BytesIO(read_bytes(image_path))) as image:
        return np.asarray(image.convert("L"), dtype=np.uint8)


def _parse_regions(document: dict[str, Any]) -> list[tuple[Region, int]]:
    entries = document.get("regions")
    if not isinstance(entries, list) or not entries:
        raise TargetValidationError("Target descriptor needs a non-empty 'regions' list")
    parsed = []
    for index, entry in enumerate(entries, start=1):
        try:
            region = Region(
                name=str(entry["name"]),
                label=index,
                theta=math.radians(float(entry["theta_deg"])),
            )
            gray = int(entry["label_value"])
        except (KeyError, TypeError, ValueError) as e:
            raise TargetValidationError(f"Invalid region entry {entry!r}: {e}") from e
        if not 0 < gray <= 255:
            raise TargetValidationError(
                f"Region {region.name!r} label_value must be in 1..255, got {gray}"
            )
        parsed.append((region, gray))
    return parsed


def load_target(image_path: str, descriptor_path: str, grid: GridSpec) -> TargetHologram:
    """Load an 8-bit grayscale amplitude image plus a JSON region descriptor.

    Descriptor: {"regions": [{"name", "label_value", "theta_deg"}], "label_image"?}.
    Pixels whose gray value in the label image (the amplitude image itself when
    no label image is named) equals label_value belong to that region.
    """
    amplitude_gray = _load_grayscale(image_path)
    if amplitude_gray.shape != grid.shape:
        raise TargetValidationError(
            f"Target image {image_path} is {amplitude_gray.shape[1]}x{amplitude_gray.shape[0]}, "
            f"grid is {grid.width}x{grid.height}"
        )
    try:
        document = json.loads(open_file(descriptor_path))
    except json.JSONDecodeError as e:
        raise TargetValidationError(f"Invalid target descriptor {descriptor_path}: {e}") from e
    if not isinstance(document, dict):
        raise TargetValidationError("Target descriptor must be a JSON object")

    label_gray = amplitude_gray
    if document.get("label_image"):
        label_path = str(document["label_image"])
        if not is_absolute(label_path):
            label_path = path_join(dirname(descriptor_path), label_path)
        label_gray = _load_grayscale(label_path)
        if label_gray.shape != grid.shape:
            raise TargetValidationError("Label image and amplitude image sizes differ")

    labels = np.zeros(grid.shape, dtype=np.int64)
    regions = []
    for region, gray in _parse_regions(document):
        selected = label_gray == gray
        if not np.any(selected):
            logger.warning("Region %s (gray %d) selects no pixels", region.name, gray)
        labels[selected] = region.label
        regions.append(region)

    amplitude = amplitude_gray.astype(np.float64) / 255.0
    if np.any(amplitude[labels != BACKGROUND_LABEL] <= 0):
        raise TargetValidationError("Region pixels must have non-zero gray amplitude")
    logger.info("Loaded target %s with regions %s", image_path, [r.name for r in regions])
    return TargetHologram.from_regions(grid, amplitude, labels, regions)

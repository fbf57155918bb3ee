# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Reading and writing run artifacts.

Every map is a PFM payload plus a JSON sidecar of the same stem; intensity
maps also get an 8-bit PNG preview whose normalization sits in the sidecar.
"""

import json
import logging
import math
from dataclasses import dataclass
from typing import Any

from qholo.adaptors.datetime import get_timestamp_now
from qholo.adaptors.os import (
    create_dirs,
    list_dir,
    open_file,
    path_exists,
    path_join,
    read_bytes,
    write_bytes,
    write_file,
)
from qholo.field_core.grid import FieldValidationError, GridSpec, PhaseMask
from qholo.field_core.pfm import (
    decode_phase_mask,
    decode_real_map,
    encode_phase_mask,
    encode_real_map,
    grid_from_sidecar,
    sidecar_json,
)
from qholo.gs_design.gs_engine import PhaseMaskPair
from qholo.metasurface.profile import MetasurfaceProfile
from qholo.metrics.visibility import SweepSample
from qholo.quantum.intensity import IntensityMap
from qholo.report_generator.renderers.png_renderer import grayscale_normalization, render_png
from qholo.report_generator.writers.csv_reporting_writer import read_sweep_csv
from qholo.spad_sim.spad import FrameStack, decode_frames, encode_frames, frames_manifest

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"
PHI_L_STEM = "phi_L"
PHI_R_STEM = "phi_R"
PROFILE_STEM = "profile_phase"
NO_ERASER_STEM = "no_eraser"
HERALD_PREFIX = "herald_"
RAW_PREFIX = "raw_"


def herald_stem(idler_angle: float) -> str:
    return f"{HERALD_PREFIX}{math.degrees(idler_angle):06.2f}deg"


def dumps_json(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _read_sidecar(stem_path: str) -> tuple[GridSpec, dict[str, Any]]:
    try:
        return grid_from_sidecar(open_file(stem_path + ".json"))
    except json.JSONDecodeError as e:
        raise FieldValidationError(f"Invalid sidecar {stem_path}.json: {e}") from e


def _strip_pfm(path: str) -> str:
    return path[: -len(".pfm")] if path.endswith(".pfm") else path


def read_phase_mask(path: str) -> PhaseMask:
    stem_path = _strip_pfm(path)
    grid, _ = _read_sidecar(stem_path)
    return decode_phase_mask(read_bytes(stem_path + ".pfm"), grid)


def read_masks(directory: str) -> PhaseMaskPair:
    masks = PhaseMaskPair(
        read_phase_mask(path_join(directory, PHI_L_STEM)),
        read_phase_mask(path_join(directory, PHI_R_STEM)),
    )
    logger.info("Read phase masks from %s", directory)
    return masks


def read_profile(directory: str) -> MetasurfaceProfile:
    stem_path = path_join(directory, PROFILE_STEM)
    grid, document = _read_sidecar(stem_path)
    phase = decode_phase_mask(read_bytes(stem_path + ".pfm"), grid)
    pixels = tuple((int(row), int(col)) for row, col in document.get("degenerate_pixels", []))
    logger.info("Read metasurface profile from %s", directory)
    return MetasurfaceProfile.from_trl_phase(phase, pixels)


def read_intensity(path: str) -> tuple[IntensityMap, dict[str, Any]]:
    stem_path = _strip_pfm(path)
    grid, document = _read_sidecar(stem_path)
    values = decode_real_map(read_bytes(stem_path + ".pfm"), grid)
    measured = bool(document.get("measured", False))
    return IntensityMap.from_values(grid, values, measured=measured), document


@dataclass(frozen=True, eq=False)
class StoredHeraldImages:
    reference: IntensityMap
    erased: dict[float, IntensityMap]  # keyed by idler angle in radians
    raw: dict[float, IntensityMap]  # detector maps with dark counts, measured runs only
    reference_document: dict[str, Any]


def _heralded_by_angle(directory: str, prefix: str) -> dict[float, IntensityMap]:
    images: dict[float, IntensityMap] = {}
    for name in sorted(list_dir(directory)):
        if not (name.startswith(prefix) and name.endswith(".pfm")):
            continue
        image, document = read_intensity(path_join(directory, name))
        if "idler_angle_deg" not in document:
            raise FieldValidationError(f"Sidecar of {name} has no idler_angle_deg")
        images[math.radians(float(document["idler_angle_deg"]))] = image
    return images


def read_herald_images(directory: str) -> StoredHeraldImages:
    """The no-eraser image and the heralded images written by a herald run."""
    reference, reference_document = read_intensity(path_join(directory, NO_ERASER_STEM))
    erased = _heralded_by_angle(directory, HERALD_PREFIX)
    raw = _heralded_by_angle(directory, RAW_PREFIX + HERALD_PREFIX)
    logger.info("Read %d heralded images from %s", len(erased), directory)
    return StoredHeraldImages(reference, erased, raw, reference_document)


def read_frames(directory: str, stem: str) -> FrameStack:
    stem_path = path_join(directory, stem)
    return decode_frames(read_bytes(stem_path + ".u8"), open_file(stem_path + ".json"))


def read_sweep(path: str) -> list[SweepSample]:
    samples = read_sweep_csv(open_file(path))
    logger.info("Read %d sweep samples from %s", len(samples), path)
    return samples


class ArtifactStore:
    def __init__(self, output_dir: str) -> None:
        self.output_dir = output_dir
        if not path_exists(output_dir):
            logger.info("Creating output directory %s", output_dir)
        create_dirs(output_dir)
        self.written: list[str] = []

    def path(self, name: str) -> str:
        return path_join(self.output_dir, name)

    def write_text(self, name: str, content: str) -> str:
        path = self.path(name)
        write_file(path, content)
        self.written.append(name)
        logger.debug("Wrote %s", path)
        return path

    def write_binary(self, name: str, content: bytes) -> str:
        path = self.path(name)
        write_bytes(path, content)
        self.written.append(name)
        logger.debug("Wrote %s", path)
        return path

    def write_json(self, name: str, document: dict[str, Any]) -> str:
        return self.write_text(name, dumps_json(document))

    def write_manifest(self, command: str, config: dict[str, Any]) -> str:
        return self.write_json(
            MANIFEST_NAME,
            {"command": command, "created_at": get_timestamp_now(), "config": config},
        )

    def write_phase_mask(self, stem: str, mask: PhaseMask, extra: dict[str, Any]) -> None:
        self.write_binary(stem + ".pfm", encode_phase_mask(mask))
        self.write_text(stem + ".json", sidecar_json(mask.grid, "phase_mask", extra))

    def write_masks(self, masks: PhaseMaskPair) -> None:
        self.write_phase_mask(PHI_L_STEM, masks.phi_L, {"channel": "L"})
        self.write_phase_mask(PHI_R_STEM, masks.phi_R, {"channel": "R"})

    def write_profile(self, profile: MetasurfaceProfile, extra: dict[str, Any]) -> None:
        document = {
            **extra,
            "degenerate_pixel_count": len(profile.degenerate_pixels),
            "degenerate_fraction": profile.degenerate_fraction,
            "degenerate_pixels": [list(pixel) for pixel in profile.degenerate_pixels],
        }
        self.write_binary(PROFILE_STEM + ".pfm", encode_phase_mask(profile.trl_phase))
        self.write_text(
            PROFILE_STEM + ".json", sidecar_json(profile.grid, "metasurface_profile", document)
        )

    def write_intensity(self, stem: str, image: IntensityMap, extra: dict[str, Any]) -> None:
        normalization = grayscale_normalization(image.values)
        document = {
            **extra,
            "measured": image.measured,
            "total_weight": image.total_weight,
            "png_normalization": normalization,
        }
        self.write_binary(stem + ".pfm", encode_real_map(image.values))
        self.write_text(stem + ".json", sidecar_json(image.grid, "intensity", document))
        self.write_binary(stem + ".png", render_png(image.values, normalization))

    def write_frames(self, stem: str, stack: FrameStack) -> None:
        self.write_binary(stem + ".u8", encode_frames(stack))
        self.write_text(stem + ".json", frames_manifest(stack) + "\n")

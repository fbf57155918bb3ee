# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import json
import math
from pathlib import Path
from unittest.mock import Mock, patch

import numpy as np
import pytest

from qholo.artifact_management.artifact_store import (
    ArtifactStore,
    herald_stem,
    read_frames,
    read_herald_images,
    read_intensity,
    read_masks,
    read_profile,
    read_sweep,
)
from qholo.field_core.grid import FieldValidationError, GridSpec
from qholo.gs_design.gs_engine import random_initial_phases
from qholo.metasurface.profile import MetasurfaceProfile
from qholo.metrics.visibility import SweepSample
from qholo.quantum.intensity import IntensityMap
from qholo.report_generator.writers.csv_reporting_writer import CSVSweepWriter
from qholo.spad_sim.spad import SpadConfig, simulate_frames

GRID = GridSpec(8, 6, 2e-6)


def _image(scale: float = 1.0) -> IntensityMap:
    values = scale * np.arange(GRID.size, dtype=np.float64).reshape(GRID.shape)
    return IntensityMap.from_values(GRID, values)


@pytest.mark.parametrize(
    "degrees, stem",
    [(0.0, "herald_000.00deg"), (45.0, "herald_045.00deg"), (135.0, "herald_135.00deg")],
)
def test_herald_stem(degrees: float, stem: str) -> None:
    assert herald_stem(math.radians(degrees)) == stem


def test_masks_read_back_bit_identical(tmp_path: Path) -> None:
    masks = random_initial_phases(GRID, seed=2)
    store = ArtifactStore(str(tmp_path))

    store.write_masks(masks)

    read = read_masks(str(tmp_path))
    assert read.grid == GRID
    np.testing.assert_allclose(read.phi_L.phase, masks.phi_L.phase, atol=1e-6)
    np.testing.assert_allclose(read.phi_R.phase, masks.phi_R.phase, atol=1e-6)
    ArtifactStore(str(tmp_path / "again")).write_masks(read)
    assert (tmp_path / "again" / "phi_L.pfm").read_bytes() == (tmp_path / "phi_L.pfm").read_bytes()
    assert store.written == ["phi_L.pfm", "phi_L.json", "phi_R.pfm", "phi_R.json"]


def test_profile_keeps_its_degenerate_pixels(tmp_path: Path) -> None:
    phase = random_initial_phases(GRID, seed=5).phi_L
    profile = MetasurfaceProfile.from_trl_phase(phase, ((0, 1), (3, 2)))
    store = ArtifactStore(str(tmp_path))

    store.write_profile(profile, {"wavelength_m": 810e-9})

    read = read_profile(str(tmp_path))
    assert read.degenerate_pixels == ((0, 1), (3, 2))
    sidecar = json.loads((tmp_path / "profile_phase.json").read_text())
    assert sidecar["degenerate_pixel_count"] == 2
    assert sidecar["wavelength_m"] == 810e-9
    # a re-read profile writes the same bytes
    ArtifactStore(str(tmp_path / "again")).write_profile(read, {"wavelength_m": 810e-9})
    assert (tmp_path / "again" / "profile_phase.pfm").read_bytes() == (
        tmp_path / "profile_phase.pfm"
    ).read_bytes()


def test_intensity_sidecar_records_the_png_normalization(tmp_path: Path) -> None:
    store = ArtifactStore(str(tmp_path))

    store.write_intensity("no_eraser", _image(), {"tier": "ideal"})

    image, document = read_intensity(str(tmp_path / "no_eraser.pfm"))
    np.testing.assert_allclose(image.values, _image().values)
    assert document["tier"] == "ideal"
    assert document["measured"] is False
    assert document["png_normalization"]["white"] == GRID.size - 1
    assert (tmp_path / "no_eraser.png").read_bytes().startswith(b"\x89PNG")


def test_herald_images_are_keyed_by_their_sidecar_angle(tmp_path: Path) -> None:
    store = ArtifactStore(str(tmp_path))
    store.write_intensity("no_eraser", _image(), {"tier": "ideal"})
    for degrees in (0.0, 90.0):
        angle = math.radians(degrees)
        store.write_intensity(herald_stem(angle), _image(0.5), {"idler_angle_deg": degrees})
        store.write_intensity(
            "raw_" + herald_stem(angle), _image(0.6), {"idler_angle_deg": degrees}
        )

    stored = read_herald_images(str(tmp_path))

    assert sorted(stored.erased) == [0.0, pytest.approx(math.pi / 2)]
    assert sorted(stored.raw) == [0.0, pytest.approx(math.pi / 2)]
    assert stored.reference_document["tier"] == "ideal"
    np.testing.assert_allclose(stored.raw[0.0].values, _image(0.6).values, rtol=1e-6)


def test_herald_image_without_angle_is_rejected(tmp_path: Path) -> None:
    store = ArtifactStore(str(tmp_path))
    store.write_intensity("no_eraser", _image(), {})
    store.write_intensity("herald_unknown", _image(), {})

    with pytest.raises(FieldValidationError, match="idler_angle_deg"):
        read_herald_images(str(tmp_path))


def test_frames_read_back(tmp_path: Path) -> None:
    stack = simulate_frames(_image(), SpadConfig(frames=3, signal_photon_budget=100.0, seed=4))
    store = ArtifactStore(str(tmp_path))

    store.write_frames("frames", stack)

    read = read_frames(str(tmp_path), "frames")
    np.testing.assert_array_equal(read.frames, stack.frames)


def test_sweep_csv_read_back(tmp_path: Path) -> None:
    samples = [SweepSample(0.25 * step, {"H": float(step), "V": 2.0}) for step in range(3)]
    store = ArtifactStore(str(tmp_path))
    path = store.write_text("sweep.csv", CSVSweepWriter(["H", "V"]).write(samples))

    read = read_sweep(path)

    assert [sample.intensities for sample in read] == [sample.intensities for sample in samples]
    assert [sample.phi_s for sample in read] == pytest.approx([0.0, 0.25, 0.5])


@patch("qholo.artifact_management.artifact_store.get_timestamp_now")
def test_manifest_records_command_time_and_config(
    mock_get_timestamp_now: Mock, tmp_path: Path
) -> None:
    mock_get_timestamp_now.return_value = "2026-10-17T12:00:00+00:00"
    store = ArtifactStore(str(tmp_path / "nested" / "out"))

    path = store.write_manifest("herald", {"tier": "ideal"})

    assert json.loads(Path(path).read_text()) == {
        "command": "herald",
        "created_at": "2026-10-17T12:00:00+00:00",
        "config": {"tier": "ideal"},
    }

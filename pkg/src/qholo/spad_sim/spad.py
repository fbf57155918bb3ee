# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Heralded SPAD camera acquisition as per-frame Poisson counts."""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Any

import numpy as np
from numpy.typing import NDArray

from qholo.field_core.grid import GridSpec, RealArray
from qholo.quantum.intensity import IntensityMap
from qholo.utils.threads import resolve_thread_count

logger = logging.getLogger(__name__)

CountArray = NDArray[np.uint8]

_NON_NEGATIVE_FIELDS = (
    "frame_duration",
    "gate_window",
    "herald_rate",
    "signal_photon_budget",
    "dark_rate",
)


class SpadConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SpadConfig:
    frames: int = 600
    frame_duration: float = 0.1  # seconds
    max_count: int = 255
    gate_window: float = 18e-9  # seconds
    herald_rate: float = 1.0e4  # heralds per second, bookkeeping only
    signal_photon_budget: float = 50.0  # expected detected photons per frame
    dark_rate: float = 1.0  # expected background counts per pixel per frame
    seed: int = 0

    def __post_init__(self) -> None:
        if self.frames < 1:
            raise SpadConfigError(f"frames must be >= 1, got {self.frames}")
        if not 1 <= self.max_count <= 255:
            raise SpadConfigError(f"max_count must be in [1, 255], got {self.max_count}")
        for name in _NON_NEGATIVE_FIELDS:
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise SpadConfigError(f"{name} must be a non-negative number, got {value}")
        if not 0 <= self.seed < 2**64:
            raise SpadConfigError(f"seed must fit in 64 bits, got {self.seed}")

    @property
    def triggers_per_frame(self) -> float:
        return self.herald_rate * self.frame_duration

    def with_budget(self, signal_photon_budget: float) -> "SpadConfig":
        return SpadConfig(**{**asdict(self), "signal_photon_budget": signal_photon_budget})


default_config = SpadConfig()

# bright heralds and a cooled sensor; the letters clear the image-quality bars here
high_flux_config = SpadConfig(signal_photon_budget=2000.0, dark_rate=0.05)

SPAD_PRESETS = {"default": default_config, "high_flux": high_flux_config}


@dataclass(frozen=True, eq=False)
class FrameStack:
    grid: GridSpec
    frames: CountArray  # (frames, height, width)
    config: SpadConfig
    clamped_events: int = 0

    def __post_init__(self) -> None:
        frames = np.asarray(self.frames)
        if frames.dtype != np.uint8:
            raise SpadConfigError(f"Frame counts must be uint8, got {frames.dtype}")
        expected = (self.config.frames, *self.grid.shape)
        if frames.shape != expected:
            raise SpadConfigError(f"Frame stack shape {frames.shape} does not match {expected}")
        if int(frames.max(initial=0)) > self.config.max_count:
            raise SpadConfigError("Frame counts exceed max_count")


SIGNAL_STREAM = 0
BACKGROUND_STREAM = 1


def _frame_generator(seed: int, stream: int, frame: int) -> np.random.Generator:
    # keyed by (seed, stream, frame) so the schedule of worker threads never matters
    key = np.random.SeedSequence(seed, spawn_key=(stream, frame))
    return np.random.Generator(np.random.Philox(key))


def _per_pixel_means(intensity: IntensityMap, config: SpadConfig) -> RealArray:
    if np.any(intensity.values < 0):
        raise SpadConfigError("Cannot drive the detector with negative intensity")
    if config.signal_photon_budget == 0:
        return np.zeros(intensity.grid.shape)
    total = intensity.total()
    if total <= 0:
        raise SpadConfigError("Intensity map is zero everywhere but the photon budget is not")
    return np.asarray(config.signal_photon_budget * intensity.values / total, dtype=np.float64)


def _simulate(
    grid: GridSpec, means: RealArray, config: SpadConfig, stream: int
) -> FrameStack:
    rates = means + config.dark_rate

    def one_frame(frame: int) -> tuple[CountArray, int]:
        counts = _frame_generator(config.seed, stream, frame).poisson(rates)
        clamped = int(np.count_nonzero(counts > config.max_count))
        return np.minimum(counts, config.max_count).astype(np.uint8), clamped

    workers = min(resolve_thread_count(), config.frames)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(one_frame, range(config.frames)))

    stack = np.stack([counts for counts, _ in results])
    clamped = sum(events for _, events in results)
    if clamped:
        logger.warning(
            "%d pixel counts clamped at %d across %d frames",
            clamped,
            config.max_count,
            config.frames,
        )
    logger.info(
        "Simulated %d frames on a %dx%d detector (%d worker threads)",
        config.frames,
        grid.width,
        grid.height,
        workers,
    )
    return FrameStack(grid, stack, config, clamped)


def simulate_frames(intensity: IntensityMap, config: SpadConfig = default_config) -> FrameStack:
    """Counts ~ Poisson(budget * I / sum(I) + dark_rate), clamped to max_count."""
    return _simulate(intensity.grid, _per_pixel_means(intensity, config), config, SIGNAL_STREAM)


def simulate_background(grid: GridSpec, config: SpadConfig = default_config) -> FrameStack:
    """The same acquisition with the signal arm blocked."""
    return _simulate(grid, np.zeros(grid.shape), config.with_budget(0.0), BACKGROUND_STREAM)


def _check_compatible(signal: FrameStack, background: FrameStack) -> None:
    if not signal.grid.same_geometry(background.grid):
        raise SpadConfigError("Signal and background stacks were taken on different grids")
    if signal.frames.shape != background.frames.shape:
        raise SpadConfigError(
            f"Signal has {signal.frames.shape[0]} frames, background {background.frames.shape[0]}"
        )


def accumulate(stack: FrameStack) -> IntensityMap:
    """Summed raw counts, dark counts included."""
    values = stack.frames.sum(axis=0, dtype=np.int64).astype(np.float64)
    return IntensityMap.from_values(stack.grid, values, measured=True)


def accumulate_subtract(signal: FrameStack, background: FrameStack) -> IntensityMap:
    """Summed signal minus summed background; negative pixels are kept."""
    _check_compatible(signal, background)
    values = signal.frames.sum(axis=0, dtype=np.int64) - background.frames.sum(
        axis=0, dtype=np.int64
    )
    return IntensityMap.from_values(signal.grid, values.astype(np.float64), measured=True)


def encode_frames(stack: FrameStack) -> bytes:
    """One unsigned byte per pixel, frame-major then row-major, top row first."""
    return np.ascontiguousarray(stack.frames, dtype="<u1").tobytes()


def frames_manifest(stack: FrameStack) -> str:
    document: dict[str, Any] = {
        "width": stack.grid.width,
        "height": stack.grid.height,
        "pitch_m": stack.grid.pitch,
        "frames": stack.config.frames,
        "dtype": "uint8",
        "order": ["frame", "row", "column"],
        "clamped_events": stack.clamped_events,
        "triggers_per_frame": stack.config.triggers_per_frame,
        "spad": asdict(stack.config),
    }
    return json.dumps(document, indent=2, sort_keys=True)


def decode_frames(content: bytes, manifest: str) -> FrameStack:
    document = json.loads(manifest)
    known = {item.name for item in fields(SpadConfig)}
    unknown = set(document["spad"]) - known
    if unknown:
        raise SpadConfigError(f"Unknown detector settings: {sorted(unknown)}")
    config = SpadConfig(**document["spad"])
    grid = GridSpec(document["width"], document["height"], document["pitch_m"])
    expected = config.frames * grid.size
    if len(content) != expected:
        raise SpadConfigError(f"Frame payload has {len(content)} bytes, expected {expected}")
    frames = np.frombuffer(content, dtype="<u1").reshape(config.frames, *grid.shape).copy()
    return FrameStack(grid, frames, config, int(document.get("clamped_events", 0)))

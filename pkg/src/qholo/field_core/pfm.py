# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Portable float map (PFM) codec.

Single-channel little-endian PFM: header "Pf", "<width> <height>", and a
negative scale, followed by float32 rows stored bottom-to-top. Complex
fields are two such payloads back to back (real, then imaginary). Grid pitch
travels in a one-line JSON sidecar.
"""

import io
import json
from typing import Any

import numpy as np

from qholo.field_core.grid import (
    ComplexField,
    FieldValidationError,
    GridSpec,
    PhaseMask,
    RealArray,
)

_FLOAT_TOLERANCE = 1e-6


def encode_pfm(values: RealArray) -> bytes:
    data = np.asarray(values, dtype="<f4")
    if data.ndim != 2:
        raise FieldValidationError("PFM payloads are 2-D")
    height, width = data.shape
    header = f"Pf\n{width} {height}\n-1.0\n".encode("ascii")
    return header + np.flipud(data).tobytes()


def _read_line(stream: io.BytesIO) -> str:
    line = stream.readline()
    if not line:
        raise FieldValidationError("Truncated PFM header")
    return line.decode("ascii").strip()


def decode_pfm_stream(stream: io.BytesIO) -> RealArray:
    magic = _read_line(stream)
    if magic != "Pf":
        raise FieldValidationError(f"Unsupported PFM magic {magic!r}, expected 'Pf'")
    try:
        width, height = (int(v) for v in _read_line(stream).split())
        scale = float(_read_line(stream))
    except ValueError as e:
        raise FieldValidationError(f"Malformed PFM header: {e}") from e
    dtype = "<f4" if scale < 0 else ">f4"
    count = width * height
    payload = stream.read(count * 4)
    if len(payload) != count * 4:
        raise FieldValidationError("Truncated PFM payload")
    data = np.frombuffer(payload, dtype=dtype).reshape(height, width)
    return np.flipud(data).astype(np.float64)


def decode_pfm(content: bytes) -> list[RealArray]:
    """Decode every PFM payload concatenated in `content`."""
    stream = io.BytesIO(content)
    planes = []
    while stream.tell() < len(content):
        planes.append(decode_pfm_stream(stream))
    if not planes:
        raise FieldValidationError("Empty PFM content")
    return planes


def sidecar_json(grid: GridSpec, kind: str, extra: dict[str, Any] | None = None) -> str:
    document: dict[str, Any] = {
        "kind": kind,
        "width": grid.width,
        "height": grid.height,
        "pitch_m": grid.pitch,
    }
    if extra:
        document.update(extra)
    return json.dumps(document, sort_keys=True) + "\n"


def grid_from_sidecar(sidecar: str) -> tuple[GridSpec, dict[str, Any]]:
    document = json.loads(sidecar)
    try:
        grid = GridSpec(
            width=int(document["width"]),
            height=int(document["height"]),
            pitch=float(document["pitch_m"]),
        )
    except KeyError as e:
        raise FieldValidationError(f"Sidecar is missing {e}") from e
    return grid, document


def encode_complex_field(field: ComplexField) -> bytes:
    return encode_pfm(field.samples.real) + encode_pfm(field.samples.imag)


def decode_complex_field(content: bytes, grid: GridSpec) -> ComplexField:
    planes = decode_pfm(content)
    if len(planes) != 2:
        raise FieldValidationError(
            f"Complex field PFM needs 2 payloads (real, imaginary), found {len(planes)}"
        )
    return ComplexField(grid, planes[0] + 1j * planes[1])


def encode_phase_mask(mask: PhaseMask) -> bytes:
    return encode_pfm(mask.phase)


def decode_phase_mask(content: bytes, grid: GridSpec) -> PhaseMask:
    planes = decode_pfm(content)
    if len(planes) != 1:
        raise FieldValidationError(f"Phase mask PFM needs 1 payload, found {len(planes)}")
    phase = planes[0]
    # float32 rounding can step just outside (-pi, pi]; pull those back in
    # so that a re-encode reproduces the same bytes
    phase = np.where(
        (phase > np.pi) & (phase <= np.pi + _FLOAT_TOLERANCE), np.pi, phase
    )
    phase = np.where(
        (phase <= -np.pi) & (phase >= -np.pi - _FLOAT_TOLERANCE),
        np.nextafter(-np.pi, 0.0),
        phase,
    )
    return PhaseMask(grid, phase)


def encode_real_map(values: RealArray) -> bytes:
    return encode_pfm(values)


def decode_real_map(content: bytes, grid: GridSpec) -> RealArray:
    planes = decode_pfm(content)
    if len(planes) != 1:
        raise FieldValidationError(f"Real map PFM needs 1 payload, found {len(planes)}")
    if planes[0].shape != grid.shape:
        raise FieldValidationError(
            f"PFM shape {planes[0].shape} does not match sidecar grid {grid.shape}"
        )
    return planes[0]

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import csv
import io
import math
from typing import Sequence

import numpy as np

from qholo.metasurface.profile import MetasurfaceProfile
from qholo.metrics.visibility import FitError, SweepSample
from qholo.report_generator.writers.abstract_reporting_writer import ReportingWriter

ANGLE_COLUMN = "phi_s_degrees"
_INTENSITY_PREFIX = "I_"


class CSVSweepWriter(ReportingWriter[Sequence[SweepSample]]):
    """One row per signal polarizer angle, one I_<letter> column per letter."""

    def __init__(self, letters: Sequence[str]):
        self.letters = tuple(letters)

    def write(self, report: Sequence[SweepSample]) -> str:
        field_names = [ANGLE_COLUMN] + [_INTENSITY_PREFIX + letter for letter in self.letters]
        output = io.StringIO()
        writer = csv.DictWriter(output, fieldnames=field_names, lineterminator="\r\n")
        writer.writeheader()
        for sample in report:
            row = {ANGLE_COLUMN: repr(math.degrees(sample.phi_s))}
            for letter in self.letters:
                row[_INTENSITY_PREFIX + letter] = repr(sample.intensities[letter])
            writer.writerow(row)
        csv_string = output.getvalue()
        output.close()
        return csv_string


def read_sweep_csv(content: str) -> list[SweepSample]:
    reader = csv.DictReader(io.StringIO(content))
    if reader.fieldnames is None or reader.fieldnames[0] != ANGLE_COLUMN:
        raise FitError(f"Sweep CSV must start with a {ANGLE_COLUMN} column")
    letters = [name[len(_INTENSITY_PREFIX) :] for name in reader.fieldnames[1:]]
    samples = []
    try:
        for row in reader:
            samples.append(
                SweepSample(
                    math.radians(float(row[ANGLE_COLUMN])),
                    {
                        letter: float(row[_INTENSITY_PREFIX + letter])
                        for letter in letters
                    },
                )
            )
    except (TypeError, ValueError) as e:
        raise FitError(f"Malformed sweep CSV row: {e}") from e
    return samples


class CSVRotationWriter(ReportingWriter[MetasurfaceProfile]):
    """Nanofin rotation in degrees, one CSV row per grid row, top row first."""

    def write(self, report: MetasurfaceProfile) -> str:
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\r\n")
        for row in np.degrees(report.rotation):
            writer.writerow([f"{value:.6f}" for value in row])
        csv_string = output.getvalue()
        output.close()
        return csv_string

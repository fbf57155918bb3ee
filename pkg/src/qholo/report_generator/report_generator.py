# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from typing import Generic, TypeVar

from qholo.report_generator.writers.abstract_reporting_writer import ReportingWriter

ReportT = TypeVar("ReportT")


class ReportGenerator(Generic[ReportT]):
    def __init__(self, reporting_writer: ReportingWriter[ReportT]):
        self.reporting_writer = reporting_writer

    def generate_report(self, report: ReportT) -> str:
        return self.reporting_writer.write(report)

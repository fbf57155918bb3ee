# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

ReportT = TypeVar("ReportT", contravariant=True)


class ReportingWriter(ABC, Generic[ReportT]):
    @abstractmethod
    def write(self, report: ReportT) -> str:
        raise NotImplementedError

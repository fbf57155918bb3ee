# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

from .holograms import HologramPair, Tier, build_holograms

__all__ = ["HologramPair", "Tier", "build_holograms"]

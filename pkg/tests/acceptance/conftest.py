# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import pytest

from qholo.config.experiment_config import ExperimentConfig, GridConfig
from qholo.gs_design.gs_engine import ConvergenceReport, PhaseMaskPair
from qholo.gs_design.target import TargetHologram
from qholo.metasurface.profile import OpticalConfig
from qholo.pipeline.experiment_runner import build_target, design_masks
from qholo.pipeline.holograms import HologramPair, Tier, build_holograms

# 128 pixels at f = 200 um keep the canonical letters inside the physical field of view
ACCEPTANCE_CONFIG = ExperimentConfig(
    grid=GridConfig(size=128, pitch=0.7e-6),
    optics=OpticalConfig(focal_length=200e-6),
)


@pytest.fixture(scope="session")
def config() -> ExperimentConfig:
    return ACCEPTANCE_CONFIG


@pytest.fixture(scope="session")
def target(config: ExperimentConfig) -> TargetHologram:
    return build_target(config)


@pytest.fixture(scope="session")
def design(
    config: ExperimentConfig, target: TargetHologram
) -> tuple[PhaseMaskPair, ConvergenceReport]:
    return design_masks(config, target)


@pytest.fixture(scope="session")
def ideal(
    config: ExperimentConfig,
    target: TargetHologram,
    design: tuple[PhaseMaskPair, ConvergenceReport],
) -> HologramPair:
    return build_holograms(Tier.IDEAL, target, config.optics, phase_masks=design[0])


@pytest.fixture(scope="session")
def physical(
    config: ExperimentConfig,
    target: TargetHologram,
    design: tuple[PhaseMaskPair, ConvergenceReport],
) -> HologramPair:
    return build_holograms(Tier.PHYSICAL, target, config.optics, phase_masks=design[0])

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import json
import math
from dataclasses import replace
from unittest.mock import Mock, patch

import pytest

from qholo.config.experiment_config import ConfigError, ExperimentConfig, default_config
from qholo.config.json_config_parser import JsonConfigParser
from qholo.pipeline.holograms import Tier
from qholo.spad_sim.spad import high_flux_config


class TestJsonConfigParser:
    def test_empty_document_gives_the_defaults(self) -> None:
        config = JsonConfigParser.parse_experiment_config({})

        assert config == default_config

    def test_angles_are_read_in_degrees(self) -> None:
        config = JsonConfigParser.parse_experiment_config(
            {"idler_angles_deg": [0, 45], "signal_angles_deg": [90.0]}
        )

        assert config.idler_angles == (0.0, pytest.approx(math.pi / 4))
        assert config.signal_angles == (pytest.approx(math.pi / 2),)

    def test_sections_use_unit_suffixed_names(self) -> None:
        config = JsonConfigParser.parse_experiment_config(
            {
                "grid": {"size": 128, "pitch_m": 0.5e-6, "extent_fraction": 0.4},
                "optics": {"wavelength_m": 633e-9, "focal_length_m": 200e-6},
                "gs": {"max_iterations": 10, "phase_tolerance_deg": 2.0, "seed": 5},
                "spad": {"frames": 30, "dark_rate": 0.1},
                "tier": "physical",
                "monte_carlo": True,
                "inputs": {"masks_dir": "run/masks"},
                "output_dir": "run/out",
            }
        )

        assert config.grid.size == 128
        assert config.grid.pitch == 0.5e-6
        assert config.optics.wavelength == 633e-9
        assert config.optics.focal_length == 200e-6
        assert config.gs.phase_tolerance == pytest.approx(math.radians(2.0))
        assert config.gs.seed == 5
        assert config.spad.frames == 30
        assert config.tier is Tier.PHYSICAL
        assert config.monte_carlo
        assert config.inputs.masks_dir == "run/masks"
        assert config.output_dir == "run/out"

    @pytest.mark.parametrize(
        "document, message",
        [
            ({"colour": "red"}, "Unknown config keys"),
            ({"grid": {"pitch": 1e-6}}, "Unknown key 'pitch'"),
            ({"gs": {"phase_tolerance": 0.1}}, "phase_tolerance_deg"),
            (
                {"gs": {"phase_tolerance_deg": 1, "phase_tolerance_rad": 0.1}},
                "not both",
            ),
            ({"gs": {"phase_tolerance_deg": "1"}}, "must be a number"),
            ({"grid": {"size": 1}}, "Invalid 'grid'"),
            ({"grid": []}, "must be a JSON object"),
            ({"tier": "quantum"}, "Unknown tier"),
            ({"idler_angles_deg": "45"}, "list of angles"),
            ({"signal_angles_deg": [True]}, "non-numeric"),
            ({"monte_carlo": "yes"}, "true or false"),
            ({"spad": {"frames": 0}}, "Invalid 'spad'"),
            ({"spad": {"preset": "bright"}}, "Unknown spad preset"),
            ({"inputs": {"target_image": "letters.png"}}, "together"),
            ({"config": []}, "manifest"),
        ],
    )
    def test_invalid_documents_are_rejected(
        self, document: dict[str, object], message: str
    ) -> None:
        with pytest.raises(ConfigError, match=message):
            JsonConfigParser.parse_experiment_config(document)

    def test_spad_preset_supplies_defaults_that_keys_override(self) -> None:
        config = JsonConfigParser.parse_experiment_config(
            {"spad": {"preset": "high_flux", "frames": 30}}
        )

        assert config.spad == replace(high_flux_config, frames=30)
        assert config.spad.signal_photon_budget == 2000.0
        assert config.spad.dark_rate == 0.05

    def test_weighted_gs_is_opt_in(self) -> None:
        assert not JsonConfigParser.parse_experiment_config({}).gs.weighted
        assert JsonConfigParser.parse_experiment_config({"gs": {"weighted": True}}).gs.weighted

    def test_non_object_document_is_rejected(self) -> None:
        with pytest.raises(ConfigError):
            JsonConfigParser.parse_experiment_config([1, 2])

    def test_dump_reloads_to_the_same_config(self) -> None:
        config = JsonConfigParser.parse_experiment_config(
            {"tier": "physical", "signal_angles_deg": [0, 7.5, 180], "gs": {"seed": 9}}
        )

        document = JsonConfigParser.dump_experiment_config(config)

        assert JsonConfigParser.parse_experiment_config(json.loads(json.dumps(document))) == config

    def test_default_angles_dump_as_whole_degrees(self) -> None:
        document = JsonConfigParser.dump_experiment_config(default_config)

        assert document["idler_angles_deg"] == [0.0, 45.0, 90.0, 135.0]
        assert document["signal_angles_deg"] == [15.0 * step for step in range(13)]
        assert document["grid"]["pitch_m"] == default_config.grid.pitch
        assert "pitch" not in document["grid"]
        assert document["gs"]["phase_tolerance_rad"] == default_config.gs.phase_tolerance

    def test_manifest_replays_its_config(self) -> None:
        config = JsonConfigParser.parse_experiment_config({"gs": {"seed": 3}})
        manifest = {
            "command": "design",
            "created_at": "2026-01-01T00:00:00+00:00",
            "config": JsonConfigParser.dump_experiment_config(config),
        }

        assert JsonConfigParser.parse_experiment_config(manifest) == config

    @patch("qholo.config.json_config_parser.open_file")
    def test_load_experiment_config(self, mock_open_file: Mock) -> None:
        mock_open_file.return_value = json.dumps({"output_dir": "elsewhere"})

        config = JsonConfigParser.load_experiment_config("experiment.json")

        mock_open_file.assert_called_once_with("experiment.json")
        assert isinstance(config, ExperimentConfig)
        assert config.output_dir == "elsewhere"

    @patch("qholo.config.json_config_parser.open_file")
    def test_load_missing_file_is_reraised(self, mock_open_file: Mock) -> None:
        mock_open_file.side_effect = FileNotFoundError("experiment.json")

        with pytest.raises(FileNotFoundError):
            JsonConfigParser.load_experiment_config("experiment.json")

    @patch("qholo.config.json_config_parser.open_file")
    def test_load_invalid_json_is_reraised(self, mock_open_file: Mock) -> None:
        mock_open_file.return_value = "{not json"

        with pytest.raises(json.JSONDecodeError):
            JsonConfigParser.load_experiment_config("experiment.json")

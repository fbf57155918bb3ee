# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import logging

import pytest

from qholo.utils.logging import parse_log_level, setup_logging


@pytest.mark.parametrize(
    "name, level",
    [("DEBUG", logging.DEBUG), ("info", logging.INFO), ("Warning", logging.WARNING)],
)
def test_parse_log_level(name: str, level: int) -> None:
    assert parse_log_level(name) == level


def test_unknown_log_level_names_the_valid_ones() -> None:
    with pytest.raises(ValueError, match="DEBUG, INFO, WARNING, ERROR"):
        parse_log_level("LOUD")


def test_setup_logging_installs_one_handler() -> None:
    root = logging.getLogger()
    before = [handler for handler in root.handlers if not getattr(handler, "qholo_handler", False)]

    setup_logging(logging.DEBUG)
    setup_logging(logging.WARNING)

    ours = [handler for handler in root.handlers if getattr(handler, "qholo_handler", False)]
    assert len(ours) == 1
    assert logging.getLogger("qholo").level == logging.WARNING
    assert root.level == logging.WARNING
    assert [handler for handler in root.handlers if handler not in ours] == before


def test_debug_keeps_third_party_loggers_at_info() -> None:
    setup_logging(logging.DEBUG)

    assert logging.getLogger("qholo").level == logging.DEBUG
    assert logging.getLogger().level == logging.INFO

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

import logging

from qholo.adaptors.os import get_env

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "QHOLO_THREADS"


def resolve_thread_count() -> int:
    """Worker cap from QHOLO_THREADS; 1 when unset or unparsable."""
    raw = get_env(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", THREADS_ENV_VAR, raw)
        return 1
    return max(1, value)

# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

"""Here we collect a set of OS wrappers and adaptors to be easily replaced during testing and debugging."""

import os


def path_exists(file_path: str) -> bool:
    return os.path.exists(file_path)


def create_dirs(path: str) -> None:
    os.makedirs(path, exist_ok=True)


def path_join(path: str, *paths: str) -> str:
    return os.path.join(path, *paths)


def get_env(name: str) -> str | None:
    return os.environ.get(name)


def open_file(file_path: str) -> str:
    with open(file_path, "r", encoding="utf-8") as file:
        return file.read()


def write_file(file_path: str, content: str) -> None:
    # newline="" keeps CSV "\r\n" terminators untouched on every platform
    with open(file_path, "w", encoding="utf-8", newline="") as file:
        file.write(content)


def read_bytes(file_path: str) -> bytes:
    with open(file_path, "rb") as file:
        return file.read()


def write_bytes(file_path: str, content: bytes) -> None:
    with open(file_path, "wb") as file:
        file.write(content)


def dirname(file_path: str) -> str:
    return os.path.dirname(file_path)


def is_absolute(file_path: str) -> bool:
    return os.path.isabs(file_path)


def list_dir(path: str) -> list[str]:
    return os.listdir(path)

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Shared pytest fixtures."""

import logging
from collections.abc import Iterator
from pathlib import Path

import pytest

from vcyc.core.linalg.oracles import ORACLE_DEPTH_ENV
from vcyc.workflows.tests.corpus import corpus, write_document


@pytest.fixture(autouse=True)
def default_oracle_depth(monkeypatch: pytest.MonkeyPatch) -> None:
    """Run every test with the per-size oracle depth unless it sets one."""
    monkeypatch.delenv(ORACLE_DEPTH_ENV, raising=False)


@pytest.fixture(autouse=True)
def restore_root_logger() -> Iterator[None]:
    """`setup_logging` replaces the root handlers; put pytest's back afterwards."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers, root.level = handlers, level


@pytest.fixture
def corpus_path(tmp_path: Path) -> str:
    """The acceptance corpus written to a temporary file"""
    return write_document(tmp_path / "corpus.json", corpus())

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""CLI interface for vcyc."""

from vcyc.cli.app import app, cli, main

__all__ = ["app", "cli", "main"]

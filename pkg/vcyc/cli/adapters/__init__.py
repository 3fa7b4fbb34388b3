# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Conversion between workflow options and CLI arguments."""

from vcyc.cli.adapters.typer_adapter import FieldSpec, TyperOptionsAdapter, describe_field

__all__ = ["FieldSpec", "TyperOptionsAdapter", "describe_field"]

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""CLI commands for vcyc."""

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

from .logging import setup_logging

__all__ = ["setup_logging"]

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Rendering and writing of the documents produced by the workflows."""

from .markdown import render_markdown
from .reporting import Reporting

__all__ = ["Reporting", "render_markdown"]

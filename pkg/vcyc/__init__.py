# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
vcyc - Dimensions of classifying spaces for the family of virtually cyclic subgroups

Exact integer linear algebra, a zoo of virtually poly-Z groups and a rule
engine that turns a group description into hdim_fin, hdim_vcyc and the
result that decides them.
"""

__version__ = "0.1.0"
__author__ = "vcyc Contributors"
__license__ = "MIT"

__all__ = [
    "__version__",
    "cli",
]

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Dimensions of classifying spaces for proper and virtually cyclic actions."""

from .citations import DESCRIPTIONS, Citation
from .engine import Classification, classify_case, compute_report, hdim_fin, hdim_vcyc, verify_witness
from .low_dim import LowDimEntry, low_dim_table
from .products import product_dims
from .report import CaseTag, DimReport, Interval, UnsupportedGroupError, Witness, WitnessKind

__all__ = [
    "DESCRIPTIONS",
    "CaseTag",
    "Citation",
    "Classification",
    "DimReport",
    "Interval",
    "LowDimEntry",
    "UnsupportedGroupError",
    "Witness",
    "WitnessKind",
    "classify_case",
    "compute_report",
    "hdim_fin",
    "hdim_vcyc",
    "low_dim_table",
    "product_dims",
    "verify_witness",
]

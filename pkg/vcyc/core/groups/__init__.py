# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""The supported group zoo, its validation and structural invariants."""

from .invariants import center_rank, is_orientable, vcd_of, virtually_abelian_rank
from .spec import (
    CentralExtension,
    CountableLocal,
    Crystallographic,
    FreeAbelian,
    GroupSpec,
    HeisenbergByZ,
    LocalKind,
    Product,
    ZnByZ,
    ZOneOverP,
    describe,
    is_virtually_poly_z,
)
from .validation import InvalidSpecError, ValidationReport, Violation, normalize_spec, require_valid, validate_spec

__all__ = [
    "CentralExtension",
    "CountableLocal",
    "Crystallographic",
    "FreeAbelian",
    "GroupSpec",
    "HeisenbergByZ",
    "InvalidSpecError",
    "LocalKind",
    "Product",
    "ValidationReport",
    "Violation",
    "ZOneOverP",
    "ZnByZ",
    "center_rank",
    "describe",
    "is_orientable",
    "is_virtually_poly_z",
    "normalize_spec",
    "require_valid",
    "validate_spec",
    "vcd_of",
    "virtually_abelian_rank",
]

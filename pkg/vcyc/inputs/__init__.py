# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

from .spec_document import Diagnostic, NamedSpec, SpecDocument, SpecDocumentError, parse_spec, read_spec

__all__ = ["Diagnostic", "NamedSpec", "SpecDocument", "SpecDocumentError", "parse_spec", "read_spec"]

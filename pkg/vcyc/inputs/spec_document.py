# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
The input document: a versioned list of named group specs.

    {"version": "1", "groups": [{"name": "torus", "spec": {"tag": "free_abelian", "n": 2}}]}

Parsing is two-level. A document that is not UTF-8 JSON, or whose envelope
is wrong, raises `SpecDocumentError`. Problems with a single entry (unknown
tag, bad matrix, a violated invariant, a repeated name) become diagnostics
and the remaining entries are kept.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from vcyc.core.groups.spec import GroupSpec
from vcyc.core.groups.validation import validate_spec

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"

_SPEC_ADAPTER: TypeAdapter[GroupSpec] = TypeAdapter(GroupSpec)


class SpecDocumentError(ValueError):
    """Raised when the input is not a readable spec document at all."""


class Diagnostic(BaseModel):
    """A problem tied to one named entry of a batch."""

    model_config = ConfigDict(frozen=True)

    name: str
    rule: str = Field(description="Stable rule identifier, e.g. zn_by_z.not_unimodular.")
    message: str


class NamedSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    spec: GroupSpec


class SpecDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    version: Literal["1"] = SCHEMA_VERSION
    groups: list[NamedSpec] = Field(default_factory=list, description="Entries that passed validation.")
    diagnostics: list[Diagnostic] = Field(default_factory=list, description="Entries that were rejected.")

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def get(self, name: str) -> NamedSpec | None:
        return next((entry for entry in self.groups if entry.name == name), None)

    def rejected(self, name: str) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.name == name]


class _Envelope(BaseModel):
    model_config = ConfigDict(extra="forbid")

    version: Literal["1"]
    groups: list[Any]


def _first_error(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return f"{location}: {first['msg']}" if location else first["msg"]


def _parse_entry(index: int, raw: Any) -> NamedSpec | list[Diagnostic]:
    if not isinstance(raw, dict) or not isinstance(raw.get("name"), str) or not raw["name"]:
        return [Diagnostic(name=f"#{index}", rule="document.entry", message="Entries need a non-empty 'name'")]
    name = raw["name"]
    if "spec" not in raw:
        return [Diagnostic(name=name, rule="document.entry", message="Entry has no 'spec'")]

    try:
        spec = _SPEC_ADAPTER.validate_python(raw["spec"])
    except ValidationError as e:
        return [Diagnostic(name=name, rule="schema", message=_first_error(e))]

    report = validate_spec(spec)
    if not report.ok:
        return [Diagnostic(name=name, rule=v.rule, message=v.message) for v in report.violations]
    return NamedSpec(name=name, spec=spec)


def parse_spec(data: bytes) -> SpecDocument:
    """Parse and validate a spec document, keeping per-entry problems as diagnostics."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise SpecDocumentError(f"Spec document is not UTF-8: {e}") from e

    try:
        envelope = _Envelope.model_validate_json(text)
    except ValidationError as e:
        raise SpecDocumentError(f"Malformed spec document: {_first_error(e)}") from e

    groups: list[NamedSpec] = []
    diagnostics: list[Diagnostic] = []
    seen: set[str] = set()
    for index, raw in enumerate(envelope.groups):
        name = raw.get("name") if isinstance(raw, dict) else None
        if isinstance(name, str) and name:
            if name in seen:
                diagnostics.append(
                    Diagnostic(name=name, rule="document.duplicate_name", message="Name is used more than once")
                )
                continue
            seen.add(name)
        parsed = _parse_entry(index, raw)
        if isinstance(parsed, list):
            diagnostics.extend(parsed)
        else:
            groups.append(parsed)

    if diagnostics:
        logger.warning(f"Rejected {len(diagnostics)} entries: {', '.join(sorted({d.name for d in diagnostics}))}")
    logger.debug(f"Parsed {len(groups)} group specs")
    return SpecDocument(groups=groups, diagnostics=diagnostics)


def read_spec(location: str) -> SpecDocument:
    """Read a spec document from a path, or from standard input when `location` is "-"."""
    data = sys.stdin.buffer.read() if location == "-" else Path(location).read_bytes()
    return parse_spec(data)

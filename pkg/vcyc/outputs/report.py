# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Pydantic models for the documents the CLI writes.
Used for the JSON output of every command.
"""

from enum import StrEnum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from vcyc import __version__
from vcyc.core.cohomology.certificates import MVCertificate
from vcyc.core.cohomology.wang import CohomologyTable
from vcyc.core.dims.report import DimReport
from vcyc.inputs.spec_document import SCHEMA_VERSION, Diagnostic


class BaseDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    version: Literal["1"] = SCHEMA_VERSION
    tool_version: str = Field(default=__version__, description="vcyc version that wrote the document.")
    diagnostics: list[Diagnostic] = Field(default_factory=list)

    def to_json(self) -> str:
        """Canonical encoding: fixed field order, two-space indent, trailing newline."""
        return self.model_dump_json(indent=2) + "\n"


class ReportEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    report: DimReport
    cohomology: CohomologyTable | None = Field(default=None, description="Wang table, for Z^n ⋊ Z and Z^n.")
    certificate: MVCertificate | None = Field(default=None, description="Non-vanishing certificate in case (3).")


class ReportDocument(BaseDocument):
    """Output of compute, cohomology and product."""

    oracle_depth: int | None = Field(default=None, description="Depth of the brute-force oracles, if any ran.")
    entries: list[ReportEntry] = Field(default_factory=list, description="Sorted by name.")

    @classmethod
    def assemble(cls, entries: list[ReportEntry], diagnostics: list[Diagnostic]) -> "ReportDocument":
        return cls(
            entries=sorted(entries, key=lambda e: e.name),
            diagnostics=sorted(diagnostics, key=lambda d: (d.name, d.rule)),
        )


class CheckStatus(StrEnum):
    PASSED = "passed"
    WARNING = "warning"
    FAILED = "failed"


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Entry the check ran on.")
    check: str = Field(description="Check identifier, e.g. oracle.max_fixed_rank.")
    status: CheckStatus
    detail: str = ""


class VerificationDocument(BaseDocument):
    """Output of verify."""

    oracle_depth: int | None = Field(default=None, description="Largest oracle depth used, None if no oracle ran.")
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def discrepancies(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.FAILED]

    @property
    def warnings(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.WARNING]

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Executable test battery over a spec document.

Runs the brute-force oracles against the spectral decision procedures and the
structural cross-checks of `checks.py` on every entry. A failed check is a
discrepancy; an oracle that was too shallow to decide is only a warning.
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import Annotated

from rich.console import Console
from rich.table import Table

from vcyc.core.workflows import BatchOptions, BatchProcessor, ExitStatus, Workflow
from vcyc.outputs.report import CheckResult, CheckStatus, VerificationDocument
from vcyc.reporting import Reporting
from vcyc.workflows.verify.checks import oracle_depth_used, run_checks

logger = logging.getLogger(__name__)

_STYLES = {CheckStatus.PASSED: "green", CheckStatus.WARNING: "yellow", CheckStatus.FAILED: "bold red"}


@dataclass
class VerifyOptions(BatchOptions):
    """Options for the verify workflow."""

    oracle_depth: Annotated[
        int | None,
        {"help": "Powers tried by the brute-force oracles, lcm{d : φ(d) ≤ n} capped at 2520 if not provided"},
    ] = None

    def __post_init__(self) -> None:
        super().__post_init__()

        if self.oracle_depth is not None and self.oracle_depth < 1:
            raise ValueError("--oracle-depth must be at least 1")


def checks_table(document: VerificationDocument) -> Table:
    table = Table(title=f"vcyc verify: {len(document.discrepancies)} discrepancies, {len(document.warnings)} warnings")
    table.add_column("entry")
    table.add_column("check")
    table.add_column("status")
    table.add_column("detail")
    for result in document.checks:
        table.add_row(result.name, result.check, f"[{_STYLES[result.status]}]{result.status}[/]", result.detail)
    return table


class VerifyWorkflow(BatchProcessor[list[CheckResult]], Workflow[VerifyOptions, VerificationDocument]):
    """Cross-checks the engine against brute-force oracles, equivalent presentations and the Wang sequence."""

    name = "verify"

    async def run(self) -> VerificationDocument:
        document = self.load_document(self.args)
        processor = partial(run_checks, oracle_depth=self.args.oracle_depth)
        per_entry, diagnostics = await self.process_entries_concurrently(
            document.groups, processor, max_concurrent=self.args.max_concurrent
        )
        checks = sorted((c for results in per_entry for c in results), key=lambda c: c.name)
        result = VerificationDocument(
            oracle_depth=oracle_depth_used(document.groups, self.args.oracle_depth),
            checks=checks,
            diagnostics=sorted([*document.diagnostics, *diagnostics], key=lambda d: (d.name, d.rule)),
        )

        for warning in result.warnings:
            logger.warning(f"{warning.name} {warning.check}: {warning.detail}")
        for discrepancy in result.discrepancies:
            logger.error(f"{discrepancy.name} {discrepancy.check}: {discrepancy.detail}")
        logger.info(f"Ran {len(checks)} checks, {len(result.discrepancies)} discrepancies")

        Console(stderr=True).print(checks_table(result))
        Reporting(self.args.output).write(result.to_json())
        return result

    def exit_status(self, result: VerificationDocument) -> ExitStatus:
        if result.discrepancies:
            return ExitStatus.DISCREPANCY
        if result.diagnostics:
            return ExitStatus.INVALID
        return ExitStatus.OK

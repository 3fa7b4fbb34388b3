# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Dimension reports for every group of a spec document.
"""

import logging
from dataclasses import dataclass

from vcyc.core.dims.engine import compute_report
from vcyc.core.workflows import BatchOptions, BatchProcessor, ExitStatus, FormatOptions, Workflow
from vcyc.inputs.spec_document import NamedSpec
from vcyc.outputs.report import ReportDocument, ReportEntry
from vcyc.reporting import Reporting, render_markdown

logger = logging.getLogger(__name__)


@dataclass
class ComputeOptions(BatchOptions, FormatOptions):
    """Options for the compute workflow."""


def compute_entry(entry: NamedSpec) -> ReportEntry:
    logger.debug(f"Computing {entry.name}")
    return ReportEntry(name=entry.name, report=compute_report(entry.spec))


def render(document: ReportDocument, output_format: str) -> str:
    return render_markdown(document) if output_format == "md" else document.to_json()


class ComputeWorkflow(BatchProcessor[ReportEntry], Workflow[ComputeOptions, ReportDocument]):
    """Computes hdim_fin and hdim_vcyc, with the deciding case and citations, for every group."""

    name = "compute"

    async def run(self) -> ReportDocument:
        document = self.load_document(self.args)
        entries, diagnostics = await self.process_entries_concurrently(
            document.groups, compute_entry, max_concurrent=self.args.max_concurrent
        )
        report = ReportDocument.assemble(entries, [*document.diagnostics, *diagnostics])
        logger.info(f"Computed {len(report.entries)} reports, {len(report.diagnostics)} diagnostics")

        Reporting(self.args.output).write(render(report, self.args.format))
        return report

    def exit_status(self, result: ReportDocument) -> ExitStatus:
        return ExitStatus.INVALID if result.diagnostics else ExitStatus.OK

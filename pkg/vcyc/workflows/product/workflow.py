# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Dimension report for the direct product of two named groups.
"""

import logging
from dataclasses import dataclass
from typing import Annotated

from vcyc.core.dims.engine import compute_report
from vcyc.core.groups.spec import Product
from vcyc.core.workflows import BatchOptions, BatchProcessor, ExitStatus, FormatOptions, Workflow, WorkflowUsageError
from vcyc.core.workflows.batch_processing import DOCUMENT_NAME, diagnose
from vcyc.inputs.spec_document import Diagnostic
from vcyc.outputs.report import ReportDocument, ReportEntry
from vcyc.reporting import Reporting
from vcyc.workflows.compute.workflow import render

logger = logging.getLogger(__name__)


@dataclass
class ProductOptions(BatchOptions, FormatOptions):
    """Options for the product workflow."""

    left: Annotated[str | None, {"help": "Name of the left factor"}] = None
    right: Annotated[str | None, {"help": "Name of the right factor"}] = None

    def __post_init__(self) -> None:
        super().__post_init__()

        if not self.left or not self.right:
            raise ValueError("--left and --right are required")


class ProductWorkflow(BatchProcessor[ReportEntry], Workflow[ProductOptions, ReportDocument]):
    """Computes the dimensions of the product of two groups of the document, as an interval when not exact."""

    name = "product"

    async def run(self) -> ReportDocument:
        assert self.args.left is not None and self.args.right is not None
        document = self.load_document(self.args)
        name = f"{self.args.left} × {self.args.right}"

        diagnostics: list[Diagnostic] = [d for d in document.diagnostics if d.name == DOCUMENT_NAME]
        factors = []
        for factor in (self.args.left, self.args.right):
            entry = document.get(factor)
            rejected = document.rejected(factor)
            if entry is None and not rejected and not diagnostics:
                raise WorkflowUsageError(f"No group named {factor!r} in {self.args.input}")
            diagnostics.extend(rejected)
            factors.append(entry)

        entries = []
        left, right = factors
        if left is not None and right is not None:
            try:
                report = compute_report(Product(left=left.spec, right=right.spec))
                entries.append(ReportEntry(name=name, report=report))
                logger.info(f"{name}: hdim_vcyc {report.hdim_vcyc} ({report.case})")
            except ValueError as e:
                logger.warning(f"No report for {name}: {e}")
                diagnostics.extend(diagnose(name, e))

        result = ReportDocument.assemble(entries, diagnostics)
        Reporting(self.args.output).write(render(result, self.args.format))
        return result

    def exit_status(self, result: ReportDocument) -> ExitStatus:
        return ExitStatus.INVALID if result.diagnostics else ExitStatus.OK

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Cohomology tables and non-vanishing certificates for a spec document.

Wang tables are produced for Z^n ⋊_A Z and for Z^n, read as Z^{n-1} ⋊_I Z.
Entries in the Z^2-center case also get the Mayer-Vietoris certificate.
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import Annotated

from vcyc.core.cohomology.certificates import MVCertificate, WrongCaseError, mv_case3_certificate
from vcyc.core.cohomology.wang import CohomologyTable, wang_cohomology
from vcyc.core.dims.engine import compute_report
from vcyc.core.dims.report import CaseTag
from vcyc.core.groups.spec import FreeAbelian, GroupSpec, ZnByZ
from vcyc.core.linalg.matrix import IntMatrix
from vcyc.core.workflows import BatchOptions, BatchProcessor, ExitStatus, Workflow
from vcyc.inputs.spec_document import NamedSpec
from vcyc.outputs.report import ReportDocument, ReportEntry
from vcyc.reporting import Reporting

logger = logging.getLogger(__name__)


@dataclass
class CohomologyOptions(BatchOptions):
    """Options for the cohomology workflow."""

    degree_max: Annotated[int | None, {"help": "Highest degree to report, all degrees if not provided"}] = None

    def __post_init__(self) -> None:
        super().__post_init__()

        if self.degree_max is not None and self.degree_max < 0:
            raise ValueError("--degree-max must be non-negative")


def mapping_torus(g: GroupSpec) -> tuple[int, IntMatrix] | None:
    """(n, A) with g = Z^n ⋊_A Z, when the group is given in that shape."""
    match g:
        case ZnByZ(n=n, matrix=a):
            return n, a
        case FreeAbelian(n=n) if n >= 1:
            return n - 1, IntMatrix.identity(n - 1)
    return None


def cohomology_entry(entry: NamedSpec, degree_max: int | None = None) -> ReportEntry:
    report = compute_report(entry.spec)

    table: CohomologyTable | None = None
    torus = mapping_torus(report.spec)
    if torus is not None:
        table = wang_cohomology(*torus)
        if degree_max is not None:
            table = table.up_to(degree_max)

    certificate: MVCertificate | None = None
    if report.case is CaseTag.POLY_Z_MANY:
        try:
            certificate = mv_case3_certificate(report.spec)
        except WrongCaseError as e:
            logger.warning(f"No certificate for {entry.name}: {e}")

    logger.debug(f"{entry.name}: table={table is not None}, certificate={certificate is not None}")
    return ReportEntry(name=entry.name, report=report, cohomology=table, certificate=certificate)


class CohomologyWorkflow(BatchProcessor[ReportEntry], Workflow[CohomologyOptions, ReportDocument]):
    """Computes Wang cohomology tables and case (3) certificates for every group."""

    name = "cohomology"

    async def run(self) -> ReportDocument:
        document = self.load_document(self.args)
        processor = partial(cohomology_entry, degree_max=self.args.degree_max)
        entries, diagnostics = await self.process_entries_concurrently(
            document.groups, processor, max_concurrent=self.args.max_concurrent
        )
        result = ReportDocument.assemble(entries, [*document.diagnostics, *diagnostics])
        logger.info(
            f"Computed {sum(e.cohomology is not None for e in result.entries)} tables, "
            f"{sum(e.certificate is not None for e in result.entries)} certificates"
        )

        Reporting(self.args.output).write(result.to_json())
        return result

    def exit_status(self, result: ReportDocument) -> ExitStatus:
        return ExitStatus.INVALID if result.diagnostics else ExitStatus.OK

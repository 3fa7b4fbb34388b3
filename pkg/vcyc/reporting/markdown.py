# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Markdown rendering of a report document."""

from vcyc.core.dims.citations import DESCRIPTIONS
from vcyc.core.groups.spec import describe
from vcyc.outputs.report import ReportDocument

_COLUMNS = ["name", "group", "vcd", "hdim_fin", "hdim_vcyc", "case", "citations"]


def _cell(value: object) -> str:
    text = "–" if value is None else str(value)
    return text.replace("|", "\\|")


def render_markdown(document: ReportDocument) -> str:
    """A results table, the citations used with their statements, then the diagnostics."""
    lines = [
        f"# vcyc report (vcyc {document.tool_version})",
        "",
        "| " + " | ".join(_COLUMNS) + " |",
        "|" + "---|" * len(_COLUMNS),
    ]
    cited = []
    for entry in document.entries:
        report = entry.report
        row = [
            entry.name,
            describe(report.spec),
            report.vcd,
            report.hdim_fin,
            report.hdim_vcyc,
            report.case,
            ", ".join(report.citations),
        ]
        lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
        cited.extend(c for c in report.citations if c not in cited)

    if cited:
        lines += ["", "## Citations", ""]
        lines += [f"- `{citation}`: {DESCRIPTIONS[citation]}" for citation in cited]

    if document.diagnostics:
        lines += ["", "## Diagnostics", ""]
        lines += [f"- **{d.name}** `{d.rule}`: {d.message}" for d in document.diagnostics]

    return "\n".join(lines) + "\n"

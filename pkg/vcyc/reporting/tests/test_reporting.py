# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""Tests for writing and rendering reports"""

from pathlib import Path

import pytest

from vcyc.core.dims.engine import compute_report
from vcyc.core.groups.spec import FreeAbelian, ZnByZ, ZOneOverP
from vcyc.core.linalg.matrix import IntMatrix
from vcyc.inputs.spec_document import Diagnostic
from vcyc.outputs.report import ReportDocument, ReportEntry
from vcyc.reporting.markdown import render_markdown
from vcyc.reporting.reporting import Reporting


class TestReporting:
    """Test cases for Reporting"""

    def test_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert Reporting(None).write("{}\n") is None
        assert capsys.readouterr().out == "{}\n"

    def test_file_creates_parents(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        output = tmp_path / "reports" / "nested" / "report.json"
        assert Reporting(str(output)).write("{}\n") == output
        assert output.read_text() == "{}\n"
        assert capsys.readouterr().out == ""


class TestRenderMarkdown:
    """Test cases for render_markdown"""

    @pytest.fixture
    def document(self) -> ReportDocument:
        entries = [
            ReportEntry(name="klein", report=compute_report(ZnByZ(n=1, matrix=IntMatrix.from_rows([[-1]])))),
            ReportEntry(name="q", report=compute_report(ZOneOverP(p=2))),
            ReportEntry(name="torus", report=compute_report(FreeAbelian(n=2))),
        ]
        diagnostics = [Diagnostic(name="bad", rule="schema", message="tag: unknown")]
        return ReportDocument.assemble(entries, diagnostics)

    def test_table(self, document: ReportDocument) -> None:
        lines = render_markdown(document).splitlines()
        assert lines[0].startswith("# vcyc report")
        assert lines[2] == "| name | group | vcd | hdim_fin | hdim_vcyc | case | citations |"
        rows = [line for line in lines if line.startswith("| ")][1:]
        assert [row.split(" | ")[0] for row in rows] == ["| klein", "| q", "| torus"]

    def test_missing_vcd_renders_as_dash(self, document: ReportDocument) -> None:
        (row,) = [line for line in render_markdown(document).splitlines() if line.startswith("| q ")]
        assert row.split(" | ")[2] == "–"

    def test_citations_are_listed_once(self, document: ReportDocument) -> None:
        text = render_markdown(document)
        assert text.count("- `example:Z-one-over-p`:") == 1
        assert "## Citations" in text

    def test_diagnostics(self, document: ReportDocument) -> None:
        assert "- **bad** `schema`: tag: unknown" in render_markdown(document)

    def test_empty(self) -> None:
        text = render_markdown(ReportDocument.assemble([], []))
        assert "## Citations" not in text
        assert "## Diagnostics" not in text

# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""End-to-end tests for the vcyc command line"""

import json
from pathlib import Path

import pytest

from vcyc import __version__
from vcyc.cli import cli
from vcyc.core.dims import engine
from vcyc.core.dims.report import CaseTag
from vcyc.core.linalg import spectra
from vcyc.core.linalg.oracles import ORACLE_DEPTH_ENV
from vcyc.core.linalg.spectra import FixedRank
from vcyc.workflows.tests.corpus import EXPECTED, document, free_abelian, write_document, zn_by_z


class TestGlobalOptions:
    """Test cases for the top-level options"""

    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert cli(["--version"]) == 0
        assert capsys.readouterr().out.strip() == f"vcyc {__version__}"

    def test_help_lists_workflows(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert cli(["--help"]) == 0
        out = capsys.readouterr().out
        for command in ("compute", "verify", "cohomology", "product"):
            assert command in out

    def test_unknown_command(self) -> None:
        assert cli(["frobnicate"]) == 1

    def test_log_file(self, corpus_path: str, tmp_path: Path) -> None:
        logs = tmp_path / "logs"
        assert cli(["--debug", "--log-output", str(logs), "compute", "--input", corpus_path]) == 0
        assert "Computed" in (logs / "vcyc.log").read_text()


class TestCompute:
    """Test cases for `vcyc compute`"""

    def test_acceptance_corpus(self, corpus_path: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert cli(["compute", "--input", corpus_path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["version"] == "1"
        assert report["tool_version"] == __version__
        assert report["diagnostics"] == []
        for entry in report["entries"]:
            assert (entry["report"]["hdim_fin"], entry["report"]["hdim_vcyc"]) == EXPECTED[entry["name"]][1]

    def test_citations_name_the_rule(self, corpus_path: str, capsys: pytest.CaptureFixture[str]) -> None:
        cli(["compute", "--input", corpus_path])
        entries = {e["name"]: e["report"] for e in json.loads(capsys.readouterr().out)["entries"]}
        assert "theorem:H-by-Z/case-3" in entries["heisenberg_f_one"]["citations"]
        assert entries["zn_by_z_rot90_plus_one"]["case"] == CaseTag.POLY_Z_MANY
        assert entries["z_one_over_5"]["citations"] == ["example:Z-one-over-p"]

    def test_deterministic(self, corpus_path: str, capsys: pytest.CaptureFixture[str]) -> None:
        cli(["compute", "--input", corpus_path, "--max-concurrent", "1"])
        first = capsys.readouterr().out
        cli(["compute", "--input", corpus_path, "--max-concurrent", "8"])
        assert capsys.readouterr().out == first

    def test_output_file(self, corpus_path: str, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        output = tmp_path / "report.md"
        assert cli(["compute", "--input", corpus_path, "--format", "md", "--output", str(output)]) == 0
        assert capsys.readouterr().out == ""
        assert "## Citations" in output.read_text()

    def test_validation_failure(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write_document(tmp_path / "doc.json", document({"ok": free_abelian(1), "bad": zn_by_z([[2]])}))
        assert cli(["compute", "--input", path]) == 2
        report = json.loads(capsys.readouterr().out)
        assert [e["name"] for e in report["entries"]] == ["ok"]
        assert report["diagnostics"][0]["rule"] == "zn_by_z.not_unimodular"

    def test_malformed_document(self, tmp_path: Path) -> None:
        path = tmp_path / "doc.json"
        path.write_text('{"version": "2", "groups": []}')
        assert cli(["compute", "--input", str(path)]) == 2

    @pytest.mark.parametrize(
        "args",
        [
            ["compute", "--format", "html"],
            ["compute", "--max-concurrent", "0"],
            ["compute", "--input", "does-not-exist.json"],
            ["compute", "--no-such-flag"],
        ],
    )
    def test_usage_errors(self, args: list[str]) -> None:
        assert cli(args) == 1


class TestProduct:
    """Test cases for `vcyc product`"""

    @pytest.fixture
    def factors_path(self, tmp_path: Path) -> str:
        """A document with Z, G_{-1} and a hyperbolic Z^2 ⋊ Z"""
        groups = {"z": free_abelian(1), "g": EXPECTED["heisenberg_f_minus_one"][0], "hyp": zn_by_z([[2, 1], [1, 1]])}
        return write_document(tmp_path / "factors.json", document(groups))

    @pytest.mark.parametrize("name,expected", [("z", 3), ("g", 9)])
    def test_exact(self, factors_path: str, name: str, expected: int, capsys: pytest.CaptureFixture[str]) -> None:
        assert cli(["product", "--input", factors_path, "--left", name, "--right", name]) == 0
        (entry,) = json.loads(capsys.readouterr().out)["entries"]
        assert entry["report"]["hdim_vcyc"] == expected

    def test_interval(self, factors_path: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert cli(["product", "--input", factors_path, "--left", "g", "--right", "hyp"]) == 0
        (entry,) = json.loads(capsys.readouterr().out)["entries"]
        assert entry["report"]["hdim_vcyc"] == {"lo": 6, "hi": 8}
        assert entry["report"]["case"] == "ProductBounds"

    def test_hyperbolic_pair_is_exact(self, factors_path: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert cli(["product", "--input", factors_path, "--left", "hyp", "--right", "hyp"]) == 0
        (entry,) = json.loads(capsys.readouterr().out)["entries"]
        assert entry["report"]["hdim_vcyc"] == 6
        assert entry["report"]["case"] == "PolyZ_Empty"

    def test_unknown_name(self, factors_path: str) -> None:
        assert cli(["product", "--input", factors_path, "--left", "z", "--right", "missing"]) == 1

    def test_missing_name(self, factors_path: str) -> None:
        assert cli(["product", "--input", factors_path, "--left", "z"]) == 1


class TestCohomology:
    """Test cases for `vcyc cohomology`"""

    def test_klein_bottle(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write_document(tmp_path / "doc.json", document({"klein": zn_by_z([[-1]])}))
        assert cli(["cohomology", "--input", path, "--degree-max", "2"]) == 0
        (entry,) = json.loads(capsys.readouterr().out)["entries"]
        groups = entry["cohomology"]["groups"]
        assert groups == [
            {"free_rank": 1, "torsion": []},
            {"free_rank": 1, "torsion": []},
            {"free_rank": 0, "torsion": [2]},
        ]
        assert entry["certificate"]["conclusion"] == "nonvanishing in degree 3"


class TestVerify:
    """Test cases for `vcyc verify`"""

    def test_corpus_passes(self, corpus_path: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert cli(["verify", "--input", corpus_path]) == 0
        checks = json.loads(capsys.readouterr().out)["checks"]
        assert checks
        assert all(c["status"] != "failed" for c in checks)

    def test_shallow_depth_is_not_a_failure(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write_document(tmp_path / "doc.json", document({"rot90": zn_by_z([[0, -1], [1, 0]])}))
        assert cli(["verify", "--input", path, "--oracle-depth", "1"]) == 0
        statuses = {c["status"] for c in json.loads(capsys.readouterr().out)["checks"]}
        assert "warning" in statuses

    def test_depth_from_environment(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        monkeypatch.setenv(ORACLE_DEPTH_ENV, "1")
        path = write_document(tmp_path / "doc.json", document({"rot90": zn_by_z([[0, -1], [1, 0]])}))
        assert cli(["verify", "--input", path]) == 0
        assert any(c["status"] == "warning" for c in json.loads(capsys.readouterr().out)["checks"])

    def test_fault_in_fixed_rank(self, corpus_path: str, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr(spectra, "max_fixed_rank", lambda a: FixedRank(1, 0))
        assert cli(["verify", "--input", corpus_path]) == 3

    def test_fault_in_case_dispatch(self, corpus_path: str, monkeypatch: pytest.MonkeyPatch) -> None:
        def wrong_case(g: object) -> engine._Decision:
            return engine._Decision(4, CaseTag.POLY_Z_EMPTY, [], [])

        monkeypatch.setattr(engine, "_decide_zn_by_z", wrong_case)
        assert cli(["verify", "--input", corpus_path]) == 3

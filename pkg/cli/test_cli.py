import csv
import json

import pytest
from click.testing import CliRunner
from loguru import logger

from cli.cli import main
from cli.schema import LambdaReport, VerificationReport
from cli.verify import Suite, run_suite


@pytest.fixture
def runner():
    yield CliRunner()
    logger.remove()


def test_count(runner):
    result = runner.invoke(main, ["count", "5"])
    assert result.exit_code == 0
    assert result.output.strip() == "81"

    result = runner.invoke(main, ["count", "1"])
    assert result.output.strip() == "1"


@pytest.mark.parametrize("n", ["0", "9", "x"])
def test_count_rejects_bad_n(runner, n):
    assert runner.invoke(main, ["count", n]).exit_code == 2


def test_count_writes_cache(runner, tmp_path):
    result = runner.invoke(main, ["count", "4", "--write-cache", "--cache-dir", str(tmp_path)])
    assert result.exit_code == 0
    assert result.output.strip() == "12"
    assert (tmp_path / "lambda4.lmlf").exists()


def test_enum(runner):
    result = runner.invoke(main, ["enum", "3"])
    assert result.exit_code == 0
    assert "4 families" in result.output
    assert "⟨01, 02, 12⟩" in result.output


def test_lambda_exports(runner, tmp_path):
    result = runner.invoke(main, ["lambda", "c4", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.output

    report = LambdaReport.model_validate_json((tmp_path / "report.json").read_text())
    assert report.lambda_.size == 12
    assert report.group.labels == ["1", "i", "-1", "-i"]
    assert set(report.structure.idempotents) == {"1", "□"}
    assert report.structure.zero is None
    assert len(report.structure.maximal_ideal) == 8
    assert report.aut.lambda_name == "C2xC2"
    assert report.t17 is None
    assert "lambda" in json.loads((tmp_path / "report.json").read_text())

    with open(tmp_path / "table_indices.csv") as f:
        rows = list(csv.reader(f))
    assert len(rows) == 12 and all(len(row) == 12 for row in rows)
    with open(tmp_path / "table.csv") as f:
        header = next(csv.reader(f))
    assert header[0] == "" and "△" in header


def test_lambda_trivial(runner, tmp_path):
    result = runner.invoke(main, ["lambda", "c1", "--out", str(tmp_path), "--no-aut"])
    assert result.exit_code == 0
    report = LambdaReport.model_validate_json((tmp_path / "report.json").read_text())
    assert report.lambda_.size == 1
    assert report.structure.maximal_ideal is None
    assert report.aut is None


def test_lambda_t17(runner, tmp_path):
    result = runner.invoke(main, ["lambda", "c5", "--t17", "--no-aut", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.output
    report = LambdaReport.model_validate_json((tmp_path / "report.json").read_text())
    assert report.t17["Δ"]["2Λ"] == "2Θ"
    assert report.t17["Γ"]["Γ"] == "𝒵"
    assert (tmp_path / "t17.csv").exists()


def test_lambda_from_json(runner, tmp_path):
    path = tmp_path / "z3.json"
    path.write_text(json.dumps({"name": "Z3", "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}))
    out = tmp_path / "out"
    result = runner.invoke(main, ["lambda", str(path), "--out", str(out)])
    assert result.exit_code == 0, result.output
    report = LambdaReport.model_validate_json((out / "report.json").read_text())
    assert report.lambda_.size == 4
    assert report.aut.lambda_name == "C2"


@pytest.mark.parametrize("args", [["lambda", "z9"], ["lambda", "c4", "--t17"], ["aut", "c6"]])
def test_usage_errors(runner, args):
    assert runner.invoke(main, args).exit_code == 2


def test_bad_group_file(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"table": [[0, 1], [0, 1]]}))
    assert runner.invoke(main, ["lambda", str(path)]).exit_code == 2


@pytest.mark.parametrize("group, expected", [
    ("c1", "Aut(G)=C1, Aut(lambda(G))=C1"),
    ("c4", "Aut(G)=C2, Aut(lambda(G))=C2xC2"),
    ("c2xc2", "Aut(G)=S3, Aut(lambda(G))=S4"),
    ("c5", "Aut(G)=C4, Aut(lambda(G))=C4"),
])
def test_aut(runner, group, expected):
    result = runner.invoke(main, ["aut", group])
    assert result.exit_code == 0, result.output
    assert expected in result.output


def test_iso(runner):
    result = runner.invoke(main, ["iso", "c4", "c2xc2"])
    assert result.exit_code == 0
    assert "superextensions: not isomorphic" in result.output

    result = runner.invoke(main, ["iso", "c2xc2", "c2xc2"])
    assert "superextensions: isomorphic" in result.output


def test_verify_counts_only(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["verify-paper", "--only", "counts", "--quick", "--output", str(out)])
    assert result.exit_code == 0, result.output
    report = VerificationReport.model_validate_json(out.read_text())
    assert report.passed
    assert [check.id for check in report.checks] == [f"counts.n{n}" for n in range(1, 7)]
    assert report.skipped == ["counts.n7"]


def test_verify_reports_injected_fault(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["verify-paper", "--only", "c4", "--inject-fault", "product", "--output", str(out)])
    assert result.exit_code == 1
    report = VerificationReport.model_validate_json(out.read_text())
    assert "c4.products" in {check.id for check in report.failures}
    assert "FAILED c4.products" in result.output


def test_verify_rejects_unknown_group(runner):
    assert runner.invoke(main, ["verify-paper", "--only", "c7"]).exit_code == 2


def test_verify_alias_and_report_json(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["verify", "--only", "c3", "--output", str(out)])
    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text())
    assert data["passed"] is True
    assert {check["id"] for check in data["checks"]} >= {"c3.size", "c3.zero"}

    failing = VerificationReport(checks=[{"id": "x", "claim": "", "expected": "1", "computed": "2", "passed": False}])
    assert json.loads(failing.model_dump_json())["passed"] is False
    assert VerificationReport.model_validate_json(failing.model_dump_json()).failures[0].id == "x"


def test_run_suite_small_groups():
    report = run_suite(only=["c3", "c4", "c2xc2"])
    assert report.passed, [c.id for c in report.failures]
    assert {check.id.split(".")[0] for check in report.checks} == {"c3", "c4", "c2xc2"}


def test_run_suite_c5_and_aut():
    report = run_suite(only=["c5", "aut"])
    assert report.passed, [(c.id, c.computed) for c in report.failures]
    assert any("-2Λ₃" in note and "-2Λ₂" in note for note in report.notes)
    roots = next(check for check in report.checks if check.id == "c5.sqrt-zero")
    assert "without 𝒵" in roots.claim


def test_run_suite_oracle_theorems_properties():
    report = run_suite(only=["oracle", "theorems", "properties"])
    assert report.passed, [(c.id, c.computed) for c in report.failures]
    ids = {check.id for check in report.checks}
    assert {"properties.functorial", "properties.equivariant", "oracle.product-c5"} <= ids
    assert {check.id.split(".")[0] for check in report.checks} == {"oracle", "theorems", "properties"}


def test_suite_validates_arguments():
    with pytest.raises(ValueError):
        Suite(only=["nope"])
    with pytest.raises(ValueError):
        Suite(fault="associativity")


def test_experiment(runner):
    result = runner.invoke(main, ["experiment", "--max-order", "3"])
    assert result.exit_code == 0, result.output
    assert "C3" in result.output and "C1" in result.output
    assert runner.invoke(main, ["experiment", "--max-order", "7"]).exit_code == 2

import csv
import io
import json

import pytest

from mckay_labels import cli
from mckay_labels.core.config import Settings, settings


def run(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    return exc.value.code


def test_count_csv(capsys):
    code = run(["count", "--type", "C", "--rank", "2", "--p", "3", "--e", "0", "--format", "csv"])
    assert code == cli.EXIT_OK
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert {row["kappa_class"]: row["fixed"] for row in rows} == {"square": "18", "nonsquare": "6"}


def test_count_table(capsys):
    assert run(["count", "--type", "A", "--rank", "1", "--p", "5", "--e", "1", "--per-central"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "A_1" in out and "z=" in out


def test_excluded_exit_code(capsys):
    assert run(["count", "--type", "C", "--rank", "2", "--p", "2"]) == cli.EXIT_EXCLUDED
    assert "excluded" in capsys.readouterr().err


def test_unsupported_exit_code(capsys):
    assert run(["count", "--type", "E6", "--p", "2", "--f", "2", "--e", "0"]) == cli.EXIT_UNSUPPORTED
    assert "bad prime" in capsys.readouterr().err


def test_invalid_request_exit_code(capsys):
    assert run(["count", "--type", "A", "--rank", "1", "--p", "4"]) == cli.EXIT_UNSUPPORTED
    assert "Invalid request" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify", "bogus"],
    ["count", "--type", "A", "--rank", "1"],
    ["count", "--type", "A", "--rank", "1", "--p", "5", "--level", "Bt"],
    ["frobnicate"],
])
def test_usage_errors_are_not_exclusions(argv, capsys):
    code = run(argv)
    assert code == cli.EXIT_UNSUPPORTED
    assert code != cli.EXIT_EXCLUDED
    assert "usage:" in capsys.readouterr().err


def test_verify_rootdata(capsys):
    assert run(["verify", "rootdata"]) == cli.EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["suite"] == "rootdata"
    assert summary["failed"] == 0
    assert summary["passed"] > 0


def test_report_empty_grid_prints_header(capsys):
    assert run(["report", "--type", "C", "--ranks", "2"]) == cli.EXIT_OK
    assert capsys.readouterr().out.strip().split(",")[0] == "type"


def test_report_json_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    argv = ["report", "--type", "C", "--ranks", "2", "--q", "3", "2", "--e-max", "1", "--format", "json", "--output", str(path)]
    assert run(argv) == cli.EXIT_OK
    report = json.loads(path.read_text())
    assert report["schema"] == 1
    assert len(report["records"]) == 4
    assert str(path) in capsys.readouterr().out


def test_labels_listing(capsys):
    assert run(["labels", "--type", "A", "--rank", "1", "--p", "5", "--limit", "3"]) == cli.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "A_1(q=5): 20 labels, 20 fixed by e=1"
    assert len(lines) == 4
    assert all(line.startswith("*") for line in lines[1:])


def test_no_command_prints_help(capsys):
    assert run([]) == cli.EXIT_OK
    assert "count" in capsys.readouterr().out


def test_config_file(tmp_path, monkeypatch, capsys):
    for name in Settings.model_fields:
        monkeypatch.setattr(settings, name, getattr(settings, name))
    monkeypatch.setenv("MCKAY_LABELS_CONFIG", "")
    path = tmp_path / "mckay.json"
    path.write_text(json.dumps({"label_enumeration_bound": 4, "output_dir": str(tmp_path)}))
    argv = ["--config", str(path), "count", "--type", "A", "--rank", "1", "--p", "5", "--e", "1",
            "--level", "labels", "--format", "csv", "--output", "labels.csv"]
    assert run(argv) == cli.EXIT_OK
    assert settings.label_enumeration_bound == 4
    row = next(csv.DictReader(io.StringIO((tmp_path / "labels.csv").read_text())))
    # q = 5 is above the enumeration bound, so only the formula is reported
    assert row["fixed"] == "20" and row["method_b"] == ""

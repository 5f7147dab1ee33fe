"""CLI front end: golden files, format agreement, determinism across
runs and thread counts, and the exit-code contract."""

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from degenbern import IdentityReport, scalar_from_json, scalar_to_text
from degenbern import cli

GOLDEN_DIR = Path(__file__).parent / "golden"

GOLDENS = [
    ("b_routes_sym.json", ["b", "--max-n", "4", "--lambda", "sym", "--route", "all", "--format", "json"]),
    ("b_routes_sym.csv", ["b", "--max-n", "4", "--lambda", "sym", "--route", "all", "--format", "csv"]),
    ("b_half_r2.csv", ["b", "--max-n", "5", "--lambda", "1/2", "--order-r", "2", "--route", "all", "--format", "csv"]),
    ("a_triangle.csv", ["a", "--max-N", "3", "--route", "all", "--format", "csv"]),
    ("a_triangle.tex", ["a", "--max-N", "3", "--format", "latex"]),
    ("stirling_first.csv", ["stirling", "--kind", "first", "--max-n", "5", "--format", "csv"]),
    ("stirling_deg2.json", ["stirling", "--kind", "deg2", "--max-n", "3", "--format", "json"]),
    ("stirling_scaled.csv", ["stirling", "--kind", "scaled-deg2", "--max-n", "4", "--format", "csv"]),
    ("classical.json", ["classical", "--max-n", "6", "--format", "json"]),
    ("verify_ode.json", ["verify", "--suite", "ode", "--max-N", "3", "--format", "json"]),
    ("verify_cor42.csv", ["verify", "--suite", "cor42", "--max-N", "4", "--format", "csv"]),
    ("verify_thm41.csv", ["verify", "--suite", "thm41", "--max-N", "2", "--max-j", "2", "--format", "csv"]),
]


def run_cli(argv, check=True):
    proc = subprocess.run(
        [sys.executable, "-m", "degenbern", *argv],
        capture_output=True,
        text=True,
    )
    if check and proc.returncode != 0:
        raise AssertionError(
            f"cli {argv} exited {proc.returncode}: {proc.stderr}"
        )
    return proc


@pytest.mark.parametrize("name,argv", GOLDENS, ids=[g[0] for g in GOLDENS])
def test_golden(name, argv, bless):
    out = run_cli(argv).stdout
    path = GOLDEN_DIR / name
    if bless:
        GOLDEN_DIR.mkdir(exist_ok=True)
        path.write_text(out)
        return
    assert path.exists(), f"golden file {name} missing; run pytest --bless"
    assert out == path.read_text()


def test_repeated_runs_are_byte_identical():
    # negative rationals use the = form so argparse does not read a flag
    argv = ["b", "--max-n", "6", "--lambda=-1/3", "--route", "all"]
    assert run_cli(argv).stdout == run_cli(argv).stdout


def test_thread_count_does_not_change_bytes():
    base = ["verify", "--suite", "thm41", "--max-N", "3", "--max-j", "3"]
    one = run_cli(base + ["--threads", "1"]).stdout
    four = run_cli(base + ["--threads", "4"]).stdout
    assert one == four
    tbl = ["a", "--max-N", "5", "--route", "all", "--format", "csv"]
    assert run_cli(tbl + ["--threads", "3"]).stdout == run_cli(tbl + ["--threads", "1"]).stdout


def test_json_and_csv_agree_on_values():
    argv = ["b", "--max-n", "5", "--lambda", "sym", "--route", "all"]
    doc = json.loads(run_cli(argv + ["--format", "json"]).stdout)
    text = run_cli(argv + ["--format", "csv"]).stdout
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == doc["payload"]["columns"]
    for json_row, csv_row in zip(doc["payload"]["rows"], rows[1:]):
        rendered = []
        for cell in json_row:
            if isinstance(cell, bool):
                rendered.append("true" if cell else "false")
            elif isinstance(cell, int):
                rendered.append(str(cell))
            else:
                rendered.append(scalar_to_text(scalar_from_json(cell)))
        assert rendered == csv_row


def test_verify_exit_zero_on_pass():
    proc = run_cli(["verify", "--suite", "cor34", "--max-N", "5"], check=False)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["payload"]["all_pass"] is True
    assert doc["schema_version"] == 1


def test_verify_exit_one_on_failure(monkeypatch, capsys):
    def fake(N, order, domain, coeffs=None):
        return IdentityReport(
            identity="ode_family",
            parameters={"N": N, "order": order, "lambda": "sym"},
            verdict=False,
            witness={"exponent": -2, "lhs": "1", "rhs": "0"},
        )

    monkeypatch.setattr(cli, "verify_ode", fake)
    code = cli.main(["verify", "--suite", "ode", "--max-N", "1"])
    out = capsys.readouterr().out
    assert code == 1
    assert json.loads(out)["payload"]["all_pass"] is False


def test_error_exit_codes():
    assert run_cli(["b", "--max-n", "3", "--lambda", "0"], check=False).returncode == 2
    assert (
        run_cli(["b", "--max-n", "30", "--route", "multinomial"], check=False).returncode
        == 2
    )
    assert (
        run_cli(
            ["b", "--max-n", "3", "--order-r", "2", "--route", "recurrence"],
            check=False,
        ).returncode
        == 2
    )
    assert (
        run_cli(["a", "--max-N", "3", "--lambda", "0", "--route", "falling"], check=False).returncode
        == 2
    )
    assert run_cli(["verify", "--suite", "nope"], check=False).returncode == 2
    assert run_cli(["b", "--max-n", "3", "--lambda", "2/4/6"], check=False).returncode == 2


def test_error_messages_on_stderr():
    proc = run_cli(["b", "--max-n", "3", "--lambda", "0"], check=False)
    assert proc.stdout == ""
    assert proc.stderr.startswith("error:")


def test_a_at_lambda_zero_skips_falling_with_note():
    proc = run_cli(["a", "--max-N", "4", "--lambda", "0", "--route", "all"])
    doc = json.loads(proc.stdout)
    assert doc["payload"]["all_agree"] is True
    assert doc["payload"]["notes"] == ["falling route skipped: undefined at lambda = 0"]


def test_version_flag():
    proc = run_cli(["--version"])
    assert proc.stdout.strip().startswith("degenbern ")


def test_b_higher_order_all_agrees():
    doc = json.loads(
        run_cli(["b", "--max-n", "6", "--lambda", "2", "--order-r", "3", "--route", "all"]).stdout
    )
    assert doc["payload"]["columns"] == ["n", "series", "convolution", "agree"]
    assert doc["payload"]["all_agree"] is True


def test_command_echo_omits_threads():
    doc = json.loads(
        run_cli(["classical", "--max-n", "3", "--threads", "2"]).stdout
    )
    assert doc["command"] == ["classical", "--max-n", "3"]
    assert "--threads" not in doc["command"]

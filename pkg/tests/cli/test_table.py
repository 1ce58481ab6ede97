"""
Tests for the table subcommand

Tests the closed-form versus brute-force comparison table in CSV and JSON
"""
import json

from app.constants.error_codes import ExitCode


def test_table_size3(run_cli):
    """
    Test table for n = 7 and size 3

    Should print the header and one agreeing row per {0, a, b}
    """
    code, out, _ = run_cli("table", "--n-from", "7", "--n-to", "7", "--size", "3")

    lines = out.strip().splitlines()
    assert code == ExitCode.SUCCESS
    assert lines[0] == "n,a,b,p_closed_form,p_oracle,agree"
    assert len(lines) == 1 + 15
    assert "7,1,3,1,1,true" in lines
    assert all(line.endswith(",true") for line in lines[1:])


def test_table_size2(run_cli):
    """
    Test table for 3 ≤ n ≤ 4 and size 2

    Should leave the a column blank
    """
    code, out, _ = run_cli("table", "--n-from", "3", "--n-to", "4", "--size", "2")

    lines = out.strip().splitlines()
    assert code == ExitCode.SUCCESS
    assert lines[1:] == [
        "3,,1,1,1,true",
        "3,,2,1,1,true",
        "4,,1,2,2,true",
        "4,,2,2,2,true",
        "4,,3,2,2,true",
    ]


def test_table_oracle_max(run_cli):
    """
    Test table with n above --oracle-max

    Should leave p_oracle and agree blank
    """
    code, out, _ = run_cli("table", "--n-from", "6", "--n-to", "6", "--oracle-max", "5")

    lines = out.strip().splitlines()
    assert code == ExitCode.SUCCESS
    assert "6,1,2,3,," in lines


def test_table_out_file(run_cli, tmp_path):
    """
    Test table with --out

    Should write the CSV to the file and print a summary line
    """
    path = tmp_path / "table.csv"

    code, out, _ = run_cli("table", "--n-from", "7", "--n-to", "7", "--out", str(path))

    assert code == ExitCode.SUCCESS
    assert out.strip() == f"rows=15 disagreements=0 out={path}"
    content = path.read_text(encoding="utf-8").splitlines()
    assert content[0] == "n,a,b,p_closed_form,p_oracle,agree"
    assert len(content) == 16


def test_table_out_directory(run_cli, tmp_path):
    """
    Test table with --out pointing at a directory

    Should exit 4
    """
    code, _, err = run_cli("table", "--n-from", "7", "--n-to", "7", "--out", str(tmp_path))

    assert code == ExitCode.IO_ERROR
    assert err != ""


def test_table_json(run_cli):
    """
    Test table with --format json

    Should print a JSON list of rows
    """
    code, out, _ = run_cli("table", "--n-from", "3", "--n-to", "3", "--size", "2", "--format", "json")

    rows = json.loads(out)
    assert code == ExitCode.SUCCESS
    assert rows == [
        {"n": 3, "a": None, "b": 1, "p_closed_form": 1, "p_oracle": 1, "agree": True},
        {"n": 3, "a": None, "b": 2, "p_closed_form": 1, "p_oracle": 1, "agree": True},
    ]


def test_table_invalid_range(run_cli):
    """
    Test table with n_from greater than n_to

    Should exit 2
    """
    code, _, _ = run_cli("table", "--n-from", "9", "--n-to", "7")

    assert code == ExitCode.USAGE_ERROR

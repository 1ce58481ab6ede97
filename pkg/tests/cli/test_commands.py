"""
Tests for the single-instance subcommands

Tests pnum, witness, verify, oracle, tile, newman and blocking through main()
"""
import json

import pytest

from app.constants.error_codes import ExitCode


def test_pnum_text(run_cli):
    """
    Test pnum on {0,1,2} in Z_9

    Should print the number with its case tag and exit 0
    """
    code, out, _ = run_cli("pnum", "--n", "9", "--set", "0,1,2")

    assert code == ExitCode.SUCCESS
    assert out.strip() == "p=3 case=Mod3Tiling"


def test_pnum_fano(run_cli):
    """
    Test pnum on the Fano line {0,1,3} in Z_7

    Should report p = 1 in the Fano case
    """
    code, out, _ = run_cli("pnum", "--n", "7", "--set", "0,1,3")

    assert code == ExitCode.SUCCESS
    assert out.strip() == "p=1 case=FanoCase"


def test_pnum_oracle_method(run_cli):
    """
    Test pnum with --method oracle

    Should print the brute-force number without a case tag
    """
    code, out, _ = run_cli("pnum", "--n", "11", "--set", "0,1,3", "--method", "oracle", "--format", "json")

    report = json.loads(out)
    assert code == ExitCode.SUCCESS
    assert report["p"] == 2
    assert report["method"] == "oracle"
    assert report["case_tag"] is None
    assert report["set"] == [0, 1, 3]


def test_witness_text(run_cli):
    """
    Test witness on {0,1,2} in Z_9

    Should print the RBY coloring followed by its summary line
    """
    code, out, _ = run_cli("witness", "--n", "9", "--set", "0,1,2", "--verify")

    lines = out.strip().splitlines()
    assert code == ExitCode.SUCCESS
    assert lines[0] == "012012012"
    assert lines[1] == "p=3 case=Mod3Tiling transform=identity"


def test_witness_transform_summary(run_cli):
    """
    Test witness on {2,5,8} in Z_12

    Should report the translation and scale division to the canonical form
    """
    code, out, _ = run_cli("witness", "--n", "12", "--set", "2,5,8")

    lines = out.strip().splitlines()
    assert code == ExitCode.SUCCESS
    assert len(lines[0]) == 12
    assert lines[1] == "p=2 case=GenericTwo transform=translate(10) > divide(3)"


def test_verify_ok(run_cli):
    """
    Test verify with a polychromatic coloring

    Should print ok and exit 0
    """
    code, out, _ = run_cli("verify", "--n", "9", "--set", "0,1,2", "--coloring", "RBYRBYRBY", "--colors", "3")

    assert code == ExitCode.SUCCESS
    assert out.strip() == "ok"


@pytest.mark.parametrize(
    "n, elements",
    [("7", "0,1,3"), ("9", "0,1,2"), ("12", "2,5,8"), ("13", "0,1,5"), ("8", "0,3"), ("105", "0,18,25")],
)
def test_witness_json_passes_verify(run_cli, n, elements):
    """
    Test feeding the JSON output of witness back into verify

    Should accept the emitted coloring with the emitted number of colors
    """
    code, out, _ = run_cli("witness", "--n", n, "--set", elements, "--format", "json")
    report = json.loads(out)
    assert code == ExitCode.SUCCESS
    assert len(report["witness"]) == int(n)

    code, out, _ = run_cli(
        "verify",
        "--n", str(report["n"]),
        "--set", ",".join(str(e) for e in report["set"]),
        "--coloring", report["witness"],
        "--colors", str(report["p"]),
    )

    assert code == ExitCode.SUCCESS
    assert out.strip() == "ok"


def test_verify_violation(run_cli):
    """
    Test verify with a coloring that leaves one translate monochromatic

    Should list the violating translate and exit 1
    """
    code, out, _ = run_cli("verify", "--n", "7", "--set", "0,1,3", "--coloring", "0101010", "--colors", "2")

    assert code == ExitCode.SEMANTIC_FAILURE
    assert out.strip().splitlines() == ["violations=1", "shift=6 translate=0,2,6 missing=1"]


def test_verify_length_mismatch(run_cli):
    """
    Test verify with a coloring of the wrong length

    Should report the error on stderr and exit 2
    """
    code, out, err = run_cli("verify", "--n", "9", "--set", "0,1,2", "--coloring", "012012", "--colors", "3")

    assert code == ExitCode.USAGE_ERROR
    assert out == ""
    assert err != ""


def test_oracle(run_cli):
    """
    Test oracle on {0,1,2} in Z_9

    Should print p = 3 and a three-color witness
    """
    code, out, _ = run_cli("oracle", "--n", "9", "--set", "0,1,2")

    p_part, witness_part = out.strip().split()
    assert code == ExitCode.SUCCESS
    assert p_part == "p=3"
    assert len(witness_part.removeprefix("witness=")) == 9


def test_oracle_bound_exceeded(run_cli):
    """
    Test oracle far above the search bound

    Should exit 2
    """
    code, _, err = run_cli("oracle", "--n", "100", "--set", "0,1,3")

    assert code == ExitCode.USAGE_ERROR
    assert err != ""


def test_tile_found(run_cli):
    """
    Test tile on {0,1,2} in Z_9

    Should print the complement and the closure check
    """
    code, out, _ = run_cli("tile", "--n", "9", "--set", "0,1,2")

    assert code == ExitCode.SUCCESS
    assert out.strip().splitlines() == ["complement=0,3,6", "closure=true"]


def test_tile_not_found(run_cli):
    """
    Test tile on the Fano line

    Should report an exhausted search and exit 1
    """
    code, out, _ = run_cli("tile", "--n", "7", "--set", "0,1,3")

    assert code == ExitCode.SEMANTIC_FAILURE
    assert out.strip() == "complement=none exhausted=true"


def test_newman(run_cli):
    """
    Test newman on {0,1,3} with p = 3

    Should report that the set does not tile Z and still exit 0
    """
    code, out, _ = run_cli("newman", "--set", "0,1,3", "--p", "3", "--alpha", "1")

    assert code == ExitCode.SUCCESS
    assert out.strip() == "tiles=false valuations=0,1"


def test_newman_invalid_prime(run_cli):
    """
    Test newman with a composite p

    Should exit 2
    """
    code, _, _ = run_cli("newman", "--set", "0,1,2,3", "--p", "4", "--alpha", "1")

    assert code == ExitCode.USAGE_ERROR


def test_blocking(run_cli):
    """
    Test blocking on {0,1,2} in Z_6

    Should print the minimum size and the first witness
    """
    code, out, _ = run_cli("blocking", "--n", "6", "--set", "0,1,2")

    assert code == ExitCode.SUCCESS
    assert out.strip() == "size=2 blocking_set=0,3"


def test_invalid_set(run_cli):
    """
    Test a subcommand with a non-integer set

    Should exit 2
    """
    code, _, _ = run_cli("pnum", "--n", "9", "--set", "0,x,2")

    assert code == ExitCode.USAGE_ERROR


def test_missing_argument(run_cli):
    """
    Test a subcommand without --n

    Should exit 2 through argparse
    """
    code, _, _ = run_cli("pnum", "--set", "0,1,2")

    assert code == 2

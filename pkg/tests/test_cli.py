import json
from pathlib import Path

import pytest

import flowshop as fs
from flowshop.cli import main

from support import REF7X4_CANONICAL_TEXT

REPO_DEMO = Path(__file__).resolve().parent.parent / "instances" / "demo7x4.txt"


def run_cli(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def demo_file(tmp_path):
    path = tmp_path / "demo.txt"
    path.write_text(REF7X4_CANONICAL_TEXT)
    return str(path)


@pytest.fixture
def two_machine_file(tmp_path):
    path = tmp_path / "two.txt"
    path.write_text("3 2\n3 6\n5 2\n1 2\n")
    return str(path)


# --- solve ---------------------------------------------------------------------


def test_solve_hybrid_concat_text(demo_file, capsys):
    code, out, err = run_cli(
        ["solve", "--input", demo_file, "--algo", "hybrid-concat", "--format", "text"],
        capsys,
    )
    assert code == 0
    assert "sequence: 1 5 6 2 7 4 3" in out
    assert "makespan: 85" in out
    # the bundled instance carries the makespan-83 erratum note
    assert "83" in out and "85" in out


def test_solve_reads_shipped_demo_file(capsys):
    code, out, _ = run_cli(
        ["solve", "--input", str(REPO_DEMO), "--algo", "gupta"], capsys
    )
    assert code == 0
    assert "sequence: 6 1 2 5 7 4 3" in out
    assert "makespan: 89" in out


def test_solve_json_output(demo_file, capsys):
    code, out, _ = run_cli(
        ["solve", "--input", demo_file, "--algo", "hybrid", "--format", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["algorithm"] == "hybrid"
    assert payload["makespan"] == 85
    assert payload["condition_flags"]["any"] is True


def test_solve_output_is_reproducible(demo_file, capsys):
    argv = ["solve", "--input", demo_file, "--algo", "hybrid", "--format", "json"]
    code1, out1, _ = run_cli(argv, capsys)
    code2, out2, _ = run_cli(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_solve_writes_gantt_csv(demo_file, tmp_path, capsys):
    target = tmp_path / "gantt.csv"
    code, _, _ = run_cli(
        [
            "solve",
            "--input",
            demo_file,
            "--algo",
            "hybrid-concat",
            "--gantt",
            str(target),
        ],
        capsys,
    )
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "job,machine,start,end"
    assert lines[1] == "1,1,0,3"
    assert len(lines) == 1 + 28


def test_solve_johnson_on_four_machines_fails(demo_file, capsys):
    code, _, err = run_cli(
        ["solve", "--input", demo_file, "--algo", "johnson"], capsys
    )
    assert code == 1
    assert "solve" in err
    assert "NotTwoMachines" in err


def test_solve_missing_input_flag_is_usage_error(capsys):
    code, _, err = run_cli(["solve", "--algo", "gupta"], capsys)
    assert code == 2
    assert "usage" in err.lower()


def test_solve_unreadable_file(tmp_path, capsys):
    code, _, err = run_cli(
        ["solve", "--input", str(tmp_path / "missing.txt"), "--algo", "gupta"], capsys
    )
    assert code == 1
    assert "parse" in err


def test_solve_bad_file_reports_parse_stage(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n1 2\n3\n")
    code, _, err = run_cli(["solve", "--input", str(bad), "--algo", "gupta"], capsys)
    assert code == 1
    assert "parse" in err and "WrongColumnCount" in err


# --- exact ----------------------------------------------------------------------


def test_exact_on_demo(demo_file, capsys):
    code, out, _ = run_cli(["exact", "--input", demo_file], capsys)
    assert code == 0
    assert "makespan: 85" in out
    assert "explored: 5040" in out


def test_exact_single_job(tmp_path, capsys):
    path = tmp_path / "one.txt"
    path.write_text("1 1\n5\n")
    code, out, _ = run_cli(["exact", "--input", str(path)], capsys)
    assert code == 0
    assert "explored: 1" in out


def test_exact_rejects_twelve_jobs_by_default(tmp_path, capsys):
    path = tmp_path / "big.txt"
    path.write_text("12 2\n" + "1 2\n" * 12)
    code, _, err = run_cli(["exact", "--input", str(path)], capsys)
    assert code == 1
    assert "TooLarge" in err and "479,001,600" in err


def test_exact_cap_override(tmp_path, capsys):
    path = tmp_path / "four.txt"
    path.write_text("4 2\n" + "1 2\n" * 4)
    code, _, err = run_cli(["exact", "--input", str(path), "--max-jobs", "3"], capsys)
    assert code == 1 and "TooLarge" in err
    code, out, _ = run_cli(["exact", "--input", str(path), "--max-jobs", "4"], capsys)
    assert code == 0 and "explored: 24" in out


# --- compare --------------------------------------------------------------------


def test_compare_table_values(demo_file, capsys):
    code, out, _ = run_cli(
        ["compare", "--input", demo_file, "--algos", "gupta,hybrid-concat,hybrid"],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    gupta_row = next(line for line in lines if line.startswith("gupta"))
    concat_row = next(line for line in lines if line.startswith("hybrid-concat"))
    assert "89" in gupta_row and "1.0471" in gupta_row
    assert "85" in concat_row and "1.0000" in concat_row
    assert sum(line.count("*") for line in lines) == 1  # single best marker


def test_compare_single_algorithm_gap_is_one(demo_file, capsys):
    code, out, _ = run_cli(
        ["compare", "--input", demo_file, "--algos", "neh"], capsys
    )
    assert code == 0
    assert "1.0000" in out
    assert "best-known makespan: 85" in out


def test_compare_with_exact(demo_file, capsys):
    code, out, _ = run_cli(
        ["compare", "--input", demo_file, "--algos", "gupta", "--with-exact"], capsys
    )
    assert code == 0
    assert "exact" in out
    assert "best-known makespan: 85" in out


def test_compare_unknown_algorithm_is_usage_error(demo_file, capsys):
    code, _, err = run_cli(
        ["compare", "--input", demo_file, "--algos", "gupta,frobnicate"], capsys
    )
    assert code == 2
    assert "frobnicate" in err


def test_compare_json_is_reproducible(demo_file, capsys):
    argv = ["compare", "--input", demo_file, "--format", "json", "--with-exact"]
    code1, out1, _ = run_cli(argv, capsys)
    code2, out2, _ = run_cli(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["best_known"] == 85
    gaps = {row["algorithm"]: row["gap"] for row in payload["rows"]}
    assert gaps["gupta"] == "89/85"
    assert sum(row["best"] for row in payload["rows"]) == 1


def test_compare_text_is_reproducible(demo_file, capsys):
    argv = ["compare", "--input", demo_file]
    _, out1, _ = run_cli(argv, capsys)
    _, out2, _ = run_cli(argv, capsys)
    assert out1 == out2


# --- gen ------------------------------------------------------------------------


def test_gen_is_deterministic_per_seed(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    base = ["gen", "--jobs", "7", "--machines", "4", "--min", "0", "--max", "15", "--seed", "42"]
    assert run_cli(base + ["--out", str(a)], capsys)[0] == 0
    assert run_cli(base + ["--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_bad_range_is_usage_error(tmp_path, capsys):
    code, _, err = run_cli(
        [
            "gen", "--jobs", "3", "--machines", "2",
            "--min", "5", "--max", "3",
            "--seed", "1", "--out", str(tmp_path / "x.txt"),
        ],
        capsys,
    )
    assert code == 2
    assert "BadRange" in err


def test_generated_files_always_solve(tmp_path, capsys):
    # batch smoke: every generated instance must parse and solve cleanly
    for seed in range(100):
        path = tmp_path / f"gen{seed}.txt"
        code, _, _ = run_cli(
            [
                "gen", "--jobs", "4", "--machines", "3",
                "--min", "0", "--max", "9",
                "--seed", str(seed), "--out", str(path),
            ],
            capsys,
        )
        assert code == 0
        code, out, _ = run_cli(
            ["solve", "--input", str(path), "--algo", "hybrid"], capsys
        )
        assert code == 0
        assert "makespan:" in out

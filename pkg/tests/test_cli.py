import csv
import io
import json
import subprocess
import sys

import pytest

from cubicsched.cli import CSV_HEADER, ExperimentConfig, main, run_experiment
from cubicsched.errors import InputError
from cubicsched.graph import Chromatic, classify, format_graph, k4, parse_graph, prism
from cubicsched.scheduler import MachineSpeeds


@pytest.fixture
def prism_file(tmp_path):
    p = tmp_path / "prism.txt"
    p.write_text(format_graph(prism()))
    return str(p)


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "cubicsched", *args], capture_output=True, text=True
    )


def test_solve_prism(prism_file, capsys):
    assert main(["solve", "--graph", prism_file, "--speeds", "4/3,1,1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["makespan"] == "2" and doc["route"] == "prism"
    assert sorted(v for load in doc["loads"] for v in load) == list(range(1, 7))


def test_solve_k4(tmp_path, capsys):
    p = tmp_path / "k4.txt"
    p.write_text(format_graph(k4()))
    assert main(["solve", "--graph", str(p), "--speeds", "1,1,1"]) == 2
    assert "infeasible: 4-chromatic" in capsys.readouterr().err


def test_solve_malformed(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("p cub 6 9\ne 1 2\n")
    assert main(["solve", "--graph", str(p), "--speeds", "1,1,1"]) == 1


def test_solve_missing_file_and_bad_speeds(prism_file, tmp_path):
    assert main(["solve", "--graph", str(tmp_path / "nope"), "--speeds", "1,1,1"]) == 1
    assert main(["solve", "--graph", prism_file, "--speeds", "1,2,1"]) == 1


def test_unsupported_exit_two(tmp_path, capsys):
    from cubicsched.graph import disjoint_union, petersen

    p = tmp_path / "two.txt"
    p.write_text(format_graph(disjoint_union(petersen(), petersen())))
    assert main(["solve", "--graph", str(p), "--speeds", "2,1,1"]) == 2
    assert "unsupported" in capsys.readouterr().err


def test_oracle_command(prism_file, capsys):
    assert main(["oracle", "--graph", prism_file, "--speeds", "4/3,1,1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["makespan"] == "2" and doc["route"] == "oracle"


def test_oracle_over_budget(tmp_path):
    p = tmp_path / "big.txt"
    assert main(["gen", "--n", "30", "--seed", "1", "--out", str(p)]) == 0
    assert main(["oracle", "--graph", str(p), "--speeds", "1,1,1"]) == 2


def test_gen(tmp_path):
    p = tmp_path / "g.txt"
    assert main(["gen", "--n", "8", "--seed", "1", "--out", str(p)]) == 0
    assert p.read_text().splitlines()[0] == "p cub 8 12"
    assert main(["gen", "--n", "7", "--seed", "1", "--out", str(tmp_path / "h")]) == 1
    q = tmp_path / "t.txt"
    assert main(["gen", "--n", "10", "--seed", "3", "--class", "tricubic", "--out", str(q)]) == 0
    assert classify(parse_graph(q.read_bytes())).kind is Chromatic.TRICUBIC


def test_usage_error_exit_one():
    assert run("solve", "--speeds", "1,1,1").returncode == 1
    assert run("bogus").returncode == 1


def test_experiment_rows_and_ratio():
    config = ExperimentConfig(10, 50, 7, MachineSpeeds.parse("4/3,1,1"), Chromatic.TRICUBIC, True)
    rows = run_experiment(config)
    assert len(rows) == 50
    assert all(r[7] == "" for r in rows)
    assert all(float(r[6]) < 1.333334 for r in rows)


def test_experiment_config_rejects():
    with pytest.raises(InputError):
        ExperimentConfig(10, 0, 7, MachineSpeeds(1, 1, 1), Chromatic.TRICUBIC)
    big = ExperimentConfig(40, 1, 7, MachineSpeeds(1, 1, 1), Chromatic.TRICUBIC, True)
    assert not big.oracle_enabled


def test_experiment_command(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    args = ["experiment", "--n", "12", "--count", "6", "--seed-base", "3", "--speeds", "4/3,1,1",
            "--class", "tricubic", "--oracle", "--out", str(out)]
    assert main(args) == 0
    table = list(csv.reader(io.StringIO(out.read_text())))
    assert table[0] == CSV_HEADER and len(table) == 7
    assert [r[0] for r in table[1:]] == [str(s) for s in range(3, 9)]
    assert "instances=6" in capsys.readouterr().err
    bad = args[:]
    bad[bad.index("6")] = "0"
    assert main(bad) == 1


def test_experiment_stdout_deterministic():
    args = ["experiment", "--n", "14", "--count", "8", "--seed-base", "11", "--speeds", "2,1,1",
            "--class", "bicubic", "--oracle", "--out", "-"]
    first, second = run(*args), run(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.splitlines()[0] == ",".join(CSV_HEADER)


def test_workers_do_not_change_output():
    config = ExperimentConfig(12, 12, 1, MachineSpeeds(2, 1, 1), Chromatic.BICUBIC, True)
    assert run_experiment(config, workers=2) == run_experiment(config, workers=1)

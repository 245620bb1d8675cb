import json
import os
import subprocess
import sys

import pytest

from expminors.cli import main
from expminors.graph import Graph, parse_edge_list


def run(*args, stdin=None, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "expminors", *args], input=stdin, capture_output=True,
                          text=True, env=full_env, timeout=600)


@pytest.fixture
def k6(tmp_path):
    path = tmp_path / "k6.txt"
    res = run("generate", "--family", "explicit", "--name", "complete", "--n", "6", "-o", str(path))
    assert res.returncode == 0
    return path


def test_generate_then_certify(k6):
    assert parse_edge_list(k6.read_text()) == Graph.complete(6)
    res = run("certify", str(k6), "--alpha", "0.5", "--t", "2")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["verdict"] == "certified-exact" and out["cap"] == 1


def test_certify_refutes_cycle(tmp_path):
    path = tmp_path / "c8.txt"
    run("generate", "--family", "explicit", "--name", "cycle", "--n", "8", "-o", str(path))
    res = run("certify", str(path), "--alpha", "0.5", "--t", "2")
    assert res.returncode == 1
    assert json.loads(res.stdout)["witness"] == [0, 1]


def test_run_record_on_stderr(k6):
    res = run("certify", str(k6), "--alpha", "0.5", "--t", "2", "--seed", "3")
    record = json.loads(res.stderr.strip().splitlines()[-1])
    assert record["command"] == "certify" and record["seed"] == 3 and record["exit"] == 0
    assert {"config_hash", "version", "wall_time_s"} <= set(record)


def test_embed_and_verify(tmp_path):
    host = tmp_path / "host.txt"
    pattern = tmp_path / "h.txt"
    model = tmp_path / "model.json"
    run("generate", "--family", "random-regular", "--n", "512", "--d", "16", "--seed", "1", "-o", str(host))
    run("generate", "--family", "explicit", "--name", "cycle", "--n", "5", "-o", str(pattern))
    res = run("embed", str(host), "--pattern", str(pattern), "--alpha", "0.25", "--t", "12", "--max-size", "5",
              "-o", str(model))
    assert res.returncode == 0, res.stderr
    res = run("verify", str(host), str(model))
    assert res.returncode == 0 and json.loads(res.stdout)["valid"]

    # a vertex listed in two branch sets breaks disjointness
    data = json.loads(model.read_text())
    sets = data["branch_sets"]
    sets["1"].append(sets["0"][0])
    model.write_text(json.dumps(data))
    res = run("verify", str(host), str(model))
    assert res.returncode == 1
    assert json.loads(res.stdout)["clause"] == "disjointness"
    assert "disjointness" in res.stderr


def test_embed_complete(tmp_path):
    host = tmp_path / "host.txt"
    run("generate", "--family", "random-regular", "--n", "1024", "--d", "32", "--seed", "2", "-o", str(host))
    res = run("embed", str(host), "--complete", "--alpha", "0.25", "--t", "16", "--K", "0.25",
              "--sample-constant", "0.05", "--target", "none")
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert out["summary"]["k"] == out["pattern_n"] >= 5


def test_bounds(tmp_path):
    res = run("bounds", "--n", "1000000", "--d", "10")
    out = json.loads(res.stdout)
    assert out["m"] == 1079180 and out["separation"] < 0
    assert res.returncode == 1
    res = run("bounds", "--n", "1000000000000", "--d", "10", "--format", "human")
    assert res.returncode == 0 and "separation" in res.stdout


def test_find_non_minor(tmp_path):
    path = tmp_path / "c12.txt"
    run("generate", "--family", "explicit", "--name", "cycle", "--n", "12", "-o", str(path))
    res = run("find-non-minor", str(path), "--k", "4", "--e", "6")
    assert res.returncode == 0
    assert parse_edge_list(res.stdout) == Graph.complete(4)
    res = run("find-non-minor", "-", "--k", "3", "--e", "2", stdin=path.read_text())
    assert res.returncode == 1


def test_experiment_csv():
    res = run("experiment", "--n", "512", "1024", "--d", "32", "--seeds", "1", "--alpha", "0.25", "--t", "16",
              "--K", "0.25", "--sample-constant", "0.05", "--target", "none")
    assert res.returncode == 0, res.stderr
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "n,t,seed,k_found,bound,ratio"
    assert [line.split(",")[0] for line in lines[1:]] == ["512", "1024"]


def test_errors_exit_3(tmp_path):
    assert run("certify", str(tmp_path / "missing.txt")).returncode == 3
    assert run("certify", "-", stdin="3 1\n0 0\n").returncode == 3
    assert run("frobnicate").returncode == 3
    assert run("certify", "-", "--alpha", "2", stdin="2 1\n0 1\n").returncode == 3


def test_budget_env_and_inconclusive(tmp_path):
    path = tmp_path / "g.txt"
    run("generate", "--family", "random-regular", "--n", "300", "--d", "10", "--seed", "0", "-o", str(path))
    res = run("certify", str(path), "--mode", "exact", "--alpha", "0.5", "--t", "2",
              env={"EXPMINORS_BUDGET": "1000"})
    assert res.returncode == 3
    res = run("certify", str(path), "--alpha", "0.5", "--t", "2", env={"EXPMINORS_BUDGET": "1000"})
    assert res.returncode in (1, 2)


def test_generate_is_byte_identical(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text('{"family": "d-out", "n": 2000, "d": 4, "seed": 7}')
    a = run("generate", "--spec", str(spec)).stdout
    b = run("generate", "--spec", str(spec)).stdout
    assert a == b and a.startswith("2000 ")


def test_main_in_process(capsys, k6):
    assert main(["certify", str(k6), "--alpha", "0.5", "--t", "2", "--format", "human"]) == 0
    assert "certified" in capsys.readouterr().out

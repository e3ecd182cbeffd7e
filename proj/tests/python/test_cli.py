"""Integration tests for the command line tool: exit codes, output schema,
determinism. Requires TRUNCMEAN_CLI (and TRUNCMEAN_DATA for the bundled
problems)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("TRUNCMEAN_CLI")
DATA = os.environ.get("TRUNCMEAN_DATA")

pytestmark = pytest.mark.skipif(CLI is None, reason="TRUNCMEAN_CLI not set")


def run(*args, check=False):
    result = subprocess.run([CLI, *args], capture_output=True, text=True)
    if check and result.returncode != 0:
        raise AssertionError(f"{args} failed: {result.stderr}")
    return result


def test_version():
    result = run("version", check=True)
    assert result.stdout.startswith("truncmean ")


def test_solve_exit_codes(tmp_path):
    assert DATA is not None
    # 0: success
    ok = run("solve", "--input", os.path.join(DATA, "table1.json"))
    assert ok.returncode == 0
    doc = json.loads(ok.stdout)
    assert doc["converged"] is True
    assert len(doc["fixed_point"]) == 5
    assert doc["dominant"] is True

    # 1: missing file
    assert run("solve", "--input", str(tmp_path / "missing.json")).returncode == 1

    # 1: malformed JSON
    bad = tmp_path / "bad.json"
    bad.write_text("{ nope")
    assert run("solve", "--input", str(bad)).returncode == 1

    # 1: covariance not positive definite
    notpd = tmp_path / "notpd.json"
    notpd.write_text(json.dumps({
        "mu": [0.0, 0.0],
        "sigma": [[1.0, 2.0], [2.0, 1.0]],
        "bounds": [{"side": "left", "cut": 0.0}, {"side": "left", "cut": 0.0}],
    }))
    assert run("solve", "--input", str(notpd)).returncode == 1

    # 2: iteration budget exhausted
    out = run("solve", "--input", os.path.join(DATA, "experiment3.json"),
              "--max-iters", "2", "--tol", "1e-14")
    assert out.returncode == 2
    assert json.loads(out.stdout)["converged"] is False


def test_solve_enforce_dominance():
    assert DATA is not None
    out = run("solve", "--input", os.path.join(DATA, "experiment2.json"),
              "--enforce-dominance")
    assert out.returncode == 1


def test_solve_diagonal_expcorr(tmp_path):
    n = 10
    spec = tmp_path / "diag.json"
    spec.write_text(json.dumps({
        "mu": [0.0] * n,
        "expcorr": {"n": n, "rho": 0.0},
        "bounds": [{"side": "left", "cut": 0.0}] * n,
    }))
    doc = json.loads(run("solve", "--input", str(spec), check=True).stdout)
    for w in doc["fixed_point"]:
        assert abs(w - 0.7978845608028654) < 1e-12


def test_mcmc_deterministic():
    assert DATA is not None
    args = ("mcmc", "--input", os.path.join(DATA, "experiment2.json"),
            "--iters", "10000", "--burnin", "1000", "--seed", "5")
    a, b = run(*args, check=True), run(*args, check=True)
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert len(doc["mean"]) == 3
    assert len(doc["standard_error"]) == 3
    assert doc["samples"] == 9000


def test_sweep_csv_schema(tmp_path):
    out_file = tmp_path / "sweep.csv"
    run("sweep", "--n", "3", "--rho-grid", "0.0,0.3", "--a-grid", "0.0",
        "--iters", "2000", "--burnin", "200", "--seed", "1",
        "--csv-out", str(out_file), check=True)
    lines = out_file.read_text().splitlines()
    assert lines[0].startswith("# truncmean sweep csv v1")
    assert lines[1] == "rho,a,n,delta,solver_iterations,ok,error"
    assert len(lines) == 2 + 2
    for line in lines[2:]:
        fields = line.split(",")
        assert fields[2] == "3"
        assert float(fields[3]) >= 0.0


def test_compare_json_mode():
    out = run("compare", "--dims", "2..3", "--trials", "2",
              "--iters", "2000", "--burnin", "200", "--seed", "2", "--json", check=True)
    rows = json.loads(out.stdout)
    assert [r["n"] for r in rows] == [2, 3]
    for r in rows:
        assert r["mean_delta"] >= 0.0


def test_scale_band_path():
    out = run("scale", "--n", "1000", "--rho", "0.4", "--seed", "9", check=True)
    doc = json.loads(out.stdout)
    assert doc["converged"] is True
    assert doc["dominant"] is True
    assert doc["n"] == 1000
    # timing goes to stderr, never into the machine output
    assert "wall" not in doc
    again = run("scale", "--n", "1000", "--rho", "0.4", "--seed", "9", check=True)
    assert out.stdout == again.stdout


def test_table1_regression():
    doc = json.loads(run("table1", check=True).stdout)
    assert doc["converged"] is True
    deltas = doc["deltas"]
    below = [i + 1 for i, d in enumerate(deltas) if d <= 1e-6]
    assert below and below[0] <= 9

"""CLI: determinism, formats, schema, exit codes, selftest hooks."""

import json
import math
import subprocess
import sys

import pytest

from spindet.spectral import SpectralConfig, boundary_log_det


def run_cli(*args, env_extra=None, timeout=240):
    import os
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "spindet.cli", *args],
                          capture_output=True, text=True, env=env,
                          timeout=timeout)


def test_det_s1_row():
    r = run_cli("det", "--n", "1")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "command,n,nu,value,abs_error,route"
    assert lines[1].startswith("header,")
    assert "schema=1" in lines[1]
    fields = lines[2].split(",")
    assert fields[0] == "det" and fields[1] == "1"
    assert float(fields[3]) == pytest.approx(4.0, abs=1e-12)
    assert fields[5] == "closed-form"


def test_anomaly_row_value():
    r = run_cli("anomaly", "--n", "2", "--nu", "0.5")
    assert r.returncode == 0
    row = r.stdout.strip().splitlines()[-1].split(",")
    assert float(row[3]) == pytest.approx(-1.0 / 3.0, abs=1e-15)
    assert row[5] == "exact-rational"


def test_deterministic_output():
    a = run_cli("--format", "json-lines", "det", "--n", "1:6",
                "--nu", "0.1:0.5:3")
    b = run_cli("--format", "json-lines", "det", "--n", "1:6",
                "--nu", "0.1:0.5:3")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_json_lines_round_trip():
    r = run_cli("--format", "json-lines", "det", "--n", "3", "--nu", "0.25")
    assert r.returncode == 0
    lines = [json.loads(line) for line in r.stdout.strip().splitlines()]
    assert lines[0]["route"] == "schema=1"
    rec = lines[1]
    # serialized floats must re-parse to the exact binary values
    want = boundary_log_det(SpectralConfig(3, 0.25)).value
    assert rec["value"] == want
    assert rec["n"] == 3 and rec["nu"] == 0.25


def test_rows_ordered_by_n_then_nu():
    r = run_cli("--format", "json-lines", "det", "--n", "2:4",
                "--nu", "0.1:0.3:2")
    rows = [json.loads(line) for line in r.stdout.strip().splitlines()[1:]]
    keys = [(rec["n"], rec["nu"]) for rec in rows]
    assert keys == sorted(keys)


def test_scan_rows():
    r = run_cli("scan", "--n-max", "25")
    rows = r.stdout.strip().splitlines()[2:]
    assert len(rows) == 25
    assert float(rows[0].split(",")[3]) == pytest.approx(4.0, abs=1e-12)
    # the n = 25 determinant sits below the frozen tail threshold
    assert abs(math.log(float(rows[-1].split(",")[3]))) < 1e-3


def test_barnes_command():
    r = run_cli("barnes", "--n", "1:3", "--z", "0.5")
    rows = r.stdout.strip().splitlines()[2:]
    assert len(rows) == 3
    assert float(rows[0].split(",")[3]) == \
        pytest.approx(-0.5 * math.log(2), rel=1e-12)


def test_pretty_format():
    r = run_cli("--format", "pretty", "fcoef", "--n", "3")
    assert r.returncode == 0
    assert "closed-form" in r.stdout
    assert "fcoef" in r.stdout


def test_invalid_arguments_exit_2():
    assert run_cli("det").returncode == 2                      # missing --n
    assert run_cli("det", "--n", "abc").returncode == 2
    assert run_cli("det", "--n", "5:1").returncode == 2
    assert run_cli("fcoef", "--n", "2").returncode == 2        # parity
    assert run_cli("--precision", "0.01", "det", "--n", "1").returncode == 2
    assert run_cli("nosuchcommand").returncode == 2


def test_convergence_failure_exit_3(monkeypatch, capsys):
    from spindet import cli
    from spindet.errors import ExtrapolationInstabilityError

    def boom(*args, **kwargs):
        raise ExtrapolationInstabilityError(
            "dimreg_continuation(n=3, nu=0.5): orders disagree")

    monkeypatch.setattr(cli, "dimreg_continuation", boom)
    code = cli.main(["dimreg", "--n", "3", "--nu", "0.5"])
    assert code == 3
    err = capsys.readouterr().err
    assert "dimreg" in err and "n=3" in err and "nu=0.5" in err


def test_order_cap_is_argument_error():
    assert run_cli("barnes", "--n", "40", "--z", "1.0").returncode == 2


def test_precision_env_override():
    r = run_cli("det", "--n", "1",
                env_extra={"SPINDET_PRECISION": "1e-8"})
    assert r.returncode == 0
    r_bad = run_cli("det", "--n", "1",
                    env_extra={"SPINDET_PRECISION": "1e-2"})
    assert r_bad.returncode == 2


def test_selftest_passes_and_corruption_hook():
    r = run_cli("selftest")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "all" in r.stdout and "pass" in r.stdout
    r_bad = run_cli("selftest",
                    env_extra={"SPINDET_SELFTEST_CORRUPT": "bernoulli"})
    assert r_bad.returncode == 1
    assert "bernoulli-recurrence" in r_bad.stdout


def test_selftest_scales_with_relaxed_precision():
    r = run_cli("--precision", "1e-8", "selftest")
    assert r.returncode == 0, r.stdout + r.stderr

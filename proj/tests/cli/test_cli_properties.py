import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ["KLEINFV_CLI"]
POINT = ["--mass", "1", "--coupling", "4"]


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def table(*args):
    res = run(*args)
    assert res.returncode == 0, res.stderr
    return list(csv.DictReader(io.StringIO(res.stdout)))


def test_klein_sweep_identity():
    for r in ("0", "0.1"):
        rows = table("sweep", *POINT, "--smoothness", r, "--e-min", "1.05", "--e-max", "2.95", "--steps", "40")
        assert len(rows) == 40
        assert all(row["regime"] == "R3" for row in rows)
        assert max(abs(float(row["identity_residual"])) for row in rows) <= 1e-8


def test_free_sweep_transmits():
    rows = table("sweep", "--mass", "1", "--coupling", "0", "--e-min", "1.1", "--e-max", "9", "--steps", "25")
    assert {row["T"] for row in rows} == {"1.00000000e+00"}


def test_sweep_crossing_barrier_top():
    res = run("sweep", *POINT, "--e-min", "3.5", "--e-max", "4.5", "--steps", "11")
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    ratios = [float(row["rho_ratio"]) for row in rows]
    energies = [float(row["E"]) for row in rows]
    assert energies == sorted(energies)
    assert ratios[0] < 0 < ratios[-1]
    top = [row for row in rows if float(row["E"]) == 4.0]
    assert len(top) == 1 and float(top[0]["rho_ratio"]) == 0.0
    assert "E = u" in res.stderr


def test_sweep_header_always_present():
    res = run("sweep", *POINT, "--e-min", "0.2", "--e-max", "0.3", "--steps", "2")
    assert res.returncode == 2
    assert res.stdout.splitlines()[0] == "E,regime,k1,k2_re,k2_im,R,T,identity_residual,rho_ratio"


@pytest.mark.parametrize("extra", [["--energy", "6"], ["--energy", "2.5"], ["--energy", "6", "--smoothness", "0.1"],
                                   ["--energy", "1.5", "--smoothness", "0.2", "--c1", "0.3,1", "--d2", "2"]])
def test_wave_current_constant(extra):
    rows = table("wave", *POINT, *extra, "--x-min", "-4", "--x-max", "4", "--points", "81")
    j = [float(row["j"]) for row in rows]
    assert max(j) - min(j) <= 1e-6 * max(abs(v) for v in j)


def test_wave_step_charge_jump():
    rows = table("wave", *POINT, "--energy", "2", "--x-min", "-1e-9", "--x-max", "1e-9", "--points", "2")
    left, right = (float(row["rho"]) for row in rows)
    assert right / left == pytest.approx((2 - 4) / 2, rel=1e-6)


def test_wave_smooth_origin_prefactors():
    rows = table("wave", *POINT, "--energy", "6", "--smoothness", "0.1", "--x-min", "-1", "--x-max", "1",
                 "--points", "3")
    mid = rows[1]
    psi1 = complex(float(mid["re_psi1"]), float(mid["im_psi1"]))
    psi3 = complex(float(mid["re_psi3"]), float(mid["im_psi3"]))
    w = 6 - 4 / 2
    assert abs(psi1 / psi3 - (1 + w) / (1 - w)) < 1e-7


def test_wave_null_amplitudes():
    rows = table("wave", *POINT, "--energy", "6", "--c1", "0", "--d1", "0", "--c2", "0", "--d2", "0")
    assert all(float(v) == 0.0 for row in rows for k, v in row.items() if k != "x")


def test_limit_columns():
    rows = table("limit", "--mass", "1", "--coupling", "0", "--energy", "6")
    assert all(abs(float(row["R_err"])) <= 1e-15 and abs(float(row["T_err"])) <= 1e-15 for row in rows)
    rows = table("limit", *POINT, "--energy", "6", "--r-list", "0.1,0.03,0.01,0.003,0.001,0.0001")
    errs = [float(row["R_err"]) for row in rows]
    assert errs == sorted(errs, reverse=True)
    assert errs[-1] < 1e-3


def test_verify_document():
    res = run("verify")
    doc = json.loads(res.stdout)
    assert res.returncode == 0 and doc["pass"] and doc["pair_creation"]
    assert all(c["residual"] <= 1e-10 for c in doc["checks"])
    res = run("verify", *POINT, "--energy", "6", "--smoothness", "0.1")
    doc = json.loads(res.stdout)
    checks = {c["name"]: c for c in doc["checks"]}
    assert res.returncode == 0
    assert all(checks[f"ode[{s}]"]["residual"] <= 1e-6 for s in ("xi_s", "xi_d", "eta_s", "eta_d"))
    assert checks["flux"]["pass"]


def test_series_cap_env():
    env = dict(os.environ, KS_MAX_TERMS="100000")
    assert run("wave", *POINT, "--energy", "6", "--smoothness", "0.1", "--points", "5", env=env).returncode == 0

"""Smoke tests for the python module and the CLI binary.

The ctest harness points NILGEO_BIN at the built CLI and NILGEO_DATA at
the repository's data directory, and puts both the python package and the
built extension on PYTHONPATH.
"""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import nilgeo

BIN = os.environ.get("NILGEO_BIN")
DATA = os.environ.get("NILGEO_DATA")


def run_cli(*args, **kw):
    assert BIN, "NILGEO_BIN not set"
    env = dict(os.environ, NILGEO_COLOR="0")
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env, **kw)


# ---- python module ----


def test_catalog_names():
    names = nilgeo.catalog_names()
    assert "paper-nj" in names
    assert "paper-njprime" in names


def test_catalog_roundtrip():
    a = nilgeo.catalog("paper-nj")
    assert a["dim_v"] == 6
    assert a["dim_z"] == 3
    assert len(a["j"]) == 3


def test_inspect_first_pair_member():
    rep = nilgeo.inspect(nilgeo.catalog("paper-nj"), source="nj")
    assert rep["source"] == "nj"
    assert rep["dim_v"] == 6
    props = rep["properties"]
    assert props["type_A"] is True
    assert props["heisenberg_type"] is False
    assert Fraction(props["scalar_J"]) == -2
    assert Fraction(props["scalar_B"]) == 4
    assert props["parallel_ricci"] is False
    assert rep["oracle_checks"]["failures"] == 0
    assert rep["naturally_reductive"]["kind"] == "structure"


def test_inspect_second_pair_member_obstruction():
    rep = nilgeo.inspect(nilgeo.catalog("paper-njprime"))
    nr = rep["naturally_reductive"]
    assert nr["kind"] == "obstruction"
    assert nr["obstruction_kind"] == "commutator-outside-image"


def test_isospec_pair():
    rep = nilgeo.isospec(nilgeo.catalog("paper-nj"), nilgeo.catalog("paper-njprime"))
    crit = rep["criteria"]
    assert crit["eigenvalues"]["status"] == "pass"
    assert crit["bracket_lattice"]["status"] == "pass"
    assert crit["kernels"]["status"] == "pass"
    assert crit["isospectral_by_criterion"] is True
    assert rep["census"]["first_difference"] == 3


def test_isospec_sampled_mode():
    rep = nilgeo.isospec(
        nilgeo.catalog("paper-nj"),
        nilgeo.catalog("paper-njprime"),
        mode="sampled",
        bound=16,
    )
    assert rep["criteria"]["kernels"]["mode"] == "sampled"
    assert rep["criteria"]["kernels"]["status"] == "pass"


def test_oracle_check():
    out = nilgeo.oracle_check(nilgeo.catalog("quaternionic"))
    assert out["failures"] == 0
    assert out["checks_run"] > 0


def test_paper_verify():
    claims = nilgeo.paper_verify()
    assert len(claims) >= 20
    assert all(c["pass"] for c in claims), [c["name"] for c in claims if not c["pass"]]


def test_validation_error():
    bad = {"dim_v": 2, "dim_z": 1, "j": [[[0, 1], [1, 0]]]}
    with pytest.raises(ValueError):
        nilgeo.inspect(bad)


def test_unknown_catalog():
    with pytest.raises(ValueError):
        nilgeo.catalog("nope")


# ---- CLI ----


def test_cli_inspect_catalog():
    r = run_cli("inspect", "--catalog", "paper-nj")
    assert r.returncode == 0, r.stderr
    assert "dim v = 6" in r.stdout


def test_cli_inspect_json_output():
    r = run_cli("inspect", "--catalog", "paper-nj", "--json")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["properties"]["type_A"] is True


def test_cli_inspect_data_file():
    r = run_cli("inspect", os.path.join(DATA, "free_two_step_3.json"))
    assert r.returncode == 0, r.stderr


def test_cli_inspect_broken_file(tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text(json.dumps({"dim_v": 2, "dim_z": 1, "j": [[[0, 1], [1, 0]]]}))
    r = run_cli("inspect", str(bad))
    assert r.returncode == 2
    assert "skew" in r.stderr


def test_cli_inspect_missing_file():
    r = run_cli("inspect", "no_such_file.json")
    assert r.returncode == 2


def test_cli_nr_check_exit_codes():
    assert run_cli("nr-check", "--catalog", "paper-nj").returncode == 0
    assert run_cli("nr-check", "--catalog", "paper-njprime").returncode == 1


def test_cli_isospec_exit_codes():
    assert run_cli("isospec", "paper-nj", "paper-njprime").returncode == 0
    r = run_cli("isospec", "paper-nj", "paper-njprime", "--lattice-L", "2,2,2")
    assert r.returncode == 1
    assert "bracket" in r.stdout


def test_cli_isospec_self():
    assert run_cli("isospec", "paper-nj", "paper-nj").returncode == 0


def test_cli_paper_verify():
    r = run_cli("paper-verify")
    assert r.returncode == 0
    assert "FAIL" not in r.stdout

    j = run_cli("paper-verify", "--json")
    claims = json.loads(j.stdout)
    assert all(c["pass"] for c in claims)


def test_cli_fuzz_deterministic():
    a = run_cli("fuzz", "--seed", "1", "--count", "3", "--n", "3", "--m", "2")
    b = run_cli("fuzz", "--seed", "1", "--count", "3", "--n", "3", "--m", "2")
    assert a.returncode == 0, a.stdout
    assert a.stdout == b.stdout
    assert "0 discrepancies" in a.stdout


def test_cli_fuzz_count_zero_is_usage_error():
    assert run_cli("fuzz", "--count", "0").returncode == 2


def test_cli_unknown_catalog_is_input_error():
    assert run_cli("inspect", "--catalog", "nope").returncode == 2

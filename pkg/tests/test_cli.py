"""Command-line behavior: outputs, exit codes, formats, determinism."""

import json
import os
import subprocess
import sys
from unittest import mock

from legdet import cli
from legdet.report import VerificationReport


def _run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "legdet.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_det_examples():
    """Documented invocations print the exact determinants."""
    r = _run("det", "--kind", "tp", "--p", "23")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "-6656"
    r = _run("det", "--kind", "cd", "--c", "6", "--d", "1", "--p", "11", "--full")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "0"
    assert "dim=11" in r.stdout
    r = _run("det", "--kind", "carlitz", "--p", "5")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "5"
    assert "dim=4" in r.stdout and "entries=16" in r.stdout


def test_det_json():
    """JSON mode emits one record with the determinant as a decimal string."""
    r = _run("det", "--kind", "tp", "--p", "97", "--json")
    assert r.returncode == 0
    rec = json.loads(r.stdout)
    assert rec["kind"] == "tp" and rec["p"] == 97 and rec["dim"] == 48
    assert isinstance(rec["det"], str)
    assert int(rec["det"]) == 7050155897210261009305779774160896


def test_verify_sweep_exit_zero():
    """A clean sweep exits 0 and prints one line per prime plus a footer."""
    r = _run("verify", "--thm", "thm-triangular", "--pmax", "100")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[-1] == "pass=24 fail=0 skipped=0"
    assert sum(1 for ln in lines if ln.startswith("thm-triangular p=")) == 24
    assert "wall=" in r.stderr and "wall=" not in r.stdout


def test_verify_json_records():
    """Structured mode is parseable and keeps big integers as strings."""
    r = _run("verify", "--thm", "cor-squares", "--pmin", "41", "--pmax", "41", "--json")
    assert r.returncode == 0
    recs = [json.loads(ln) for ln in r.stdout.splitlines()]
    assert len(recs) == 1
    rec = recs[0]
    assert rec["theorem_id"] == "cor-squares"
    assert rec["p"] == 41
    assert rec["verdict"] == "pass"
    assert rec["v_32"] == "17951494350240"
    assert all(isinstance(v, (str, int, float, bool)) for v in rec.values())


def test_verify_all_and_determinism():
    """--thm all covers every check and reruns are byte-identical."""
    first = _run("verify", "--thm", "all", "--pmax", "20", "--json")
    second = _run("verify", "--thm", "all", "--pmax", "20", "--json")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    ids = {json.loads(ln)["theorem_id"] for ln in first.stdout.splitlines()}
    assert len(ids) == 16


def test_verify_csv():
    """CSV mode has a header and one row per record."""
    r = _run("verify", "--thm", "carlitz", "--pmax", "20", "--csv")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0].startswith("theorem_id,p,")
    assert len(lines) == 1 + 7


def test_search_ss_examples():
    """Documented searches print the golden prime lists."""
    r = _run("search-ss", "--c", "6", "--d", "1", "--pmax", "100")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "7 11 19 23 31 43 47 59 67 71 79 83"
    assert "det-certified: 12 of 12" in r.stdout
    r = _run("search-ss", "--c", "1", "--d", "1", "--pmax", "200")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "7 47 191"


def test_search_ss_degenerate_exits_one():
    """A degenerate pair is a usage-level error."""
    r = _run("search-ss", "--c", "2", "--d", "1")
    assert r.returncode == 1
    assert "degenerate" in r.stderr


def test_usage_errors_exit_one():
    """argparse failures exit 1; 2 stays reserved for falsification."""
    assert _run("det", "--kind", "bogus", "--p", "5").returncode == 1
    assert _run("verify", "--thm", "thm-triangular").returncode == 1
    assert _run("det", "--kind", "tp", "--p", "8").returncode == 1
    assert _run().returncode == 1
    assert _run("verify", "--thm", "carlitz", "--pmax", "10", "--workers", "0").returncode == 1


def test_failure_exits_two():
    """Any fail verdict flips the exit code to 2."""
    fake = [VerificationReport("carlitz", 5, {}, {"det": 1}, verdict="fail", reason="boom")]
    with mock.patch.object(cli, "sweep", return_value=fake):
        assert cli.main(["verify", "--thm", "carlitz", "--pmax", "10"]) == 2
    with mock.patch.object(cli, "sweep", return_value=[]):
        assert cli.main(["verify", "--thm", "carlitz", "--pmax", "10"]) == 0


def test_size_cap_env():
    """LEGDET_MAX_P caps the buildable dimension through the CLI."""
    r = _run("det", "--kind", "carlitz", "--p", "101", env_extra={"LEGDET_MAX_P": "50"})
    assert r.returncode == 1
    assert "cap" in r.stderr.lower()
    r = _run("det", "--kind", "carlitz", "--p", "101", env_extra={"LEGDET_MAX_P": "200"})
    assert r.returncode == 0


def test_det_param_validation():
    """cd needs c and d; fixed kinds refuse them; p must be an odd prime."""
    assert _run("det", "--kind", "cd", "--p", "11").returncode == 1
    assert _run("det", "--kind", "tp", "--p", "11", "--c", "1").returncode == 1
    assert _run("det", "--kind", "tp", "--p", "9").returncode == 1
    assert _run("det", "--kind", "squares", "--p", "11", "--full").returncode == 1


def test_search_ss_json():
    """JSON search output is one record per hit with certification flag."""
    r = _run("search-ss", "--c", "6", "--d", "1", "--pmax", "60", "--json")
    assert r.returncode == 0
    recs = [json.loads(ln) for ln in r.stdout.splitlines()]
    assert [rec["p"] for rec in recs] == [7, 11, 19, 23, 31, 43, 47, 59]
    assert all(rec["det_certified"] for rec in recs)


def test_workers_pool_matches_serial():
    """--workers 2 produces the same stdout as the serial run."""
    serial = _run("verify", "--thm", "carlitz", "--pmax", "40")
    pooled = _run("verify", "--thm", "carlitz", "--pmax", "40", "--workers", "2")
    assert serial.stdout == pooled.stdout
    s1 = _run("search-ss", "--c", "6", "--d", "1", "--pmax", "100")
    s2 = _run("search-ss", "--c", "6", "--d", "1", "--pmax", "100", "--workers", "2")
    assert s1.stdout == s2.stdout

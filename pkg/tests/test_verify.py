"""Verification layer: goldens, sweeps, skip logic, and parameter handling."""

import pytest

from legdet.arith import make_context, primes_in
from legdet.ecount import CurveParams, char_trace
from legdet.report import summarize
from legdet.verify import PARAM_ARITY, THEOREMS, normalize_theorem, sweep, verify


def test_theorem_registry():
    """Every registered id normalizes to itself and has an arity entry when needed."""
    for tid in THEOREMS:
        assert normalize_theorem(tid) == tid
        assert normalize_theorem(tid.upper().replace("-", "_")) == tid
    assert set(PARAM_ARITY) <= set(THEOREMS)
    with pytest.raises(ValueError):
        normalize_theorem("no-such-claim")


def test_param_validation():
    """Parameters are rejected for theorems that do not take them."""
    ctx = make_context(13)
    with pytest.raises(ValueError):
        verify("carlitz", ctx, c=1)
    with pytest.raises(ValueError):
        verify("c1p", ctx, d=2)  # only c is accepted
    r = verify("c1p", ctx, c=3)
    assert r.ok() and r.params == {"c": 3}


def test_carlitz_sweep():
    """Prime-power determinant identity holds through 50."""
    reports = sweep("carlitz", 3, 50)
    assert summarize(reports) == {"pass": len(reports), "fail": 0, "skipped": 0}
    for r in reports:
        assert r.computed["det"] == r.p ** ((r.p - 3) // 2)


def test_triangular_golden():
    """p = 19 reproduces the published determinant 928."""
    r = verify("thm-triangular", make_context(19))
    assert r.ok()
    assert r.computed["det"] == 928


def test_cor_squares_golden():
    """p = 41 reproduces the published square root 17951494350240."""
    r = verify("cor-squares", make_context(41))
    assert r.ok()
    assert r.computed["x1"] == 5
    assert r.computed["v_32"] == 17951494350240
    assert r.computed["det_32"] == 5 * 17951494350240**2


def test_quartic_sextic_goldens():
    """Published quartic and sextic determinants at small primes."""
    from legdet.bigmat import det_exact
    from legdet.legmat import build

    assert det_exact(build("quartic", make_context(13))) == 4
    assert det_exact(build("quartic", make_context(17))) == -3
    assert det_exact(build("sextic", make_context(31))) == 16
    assert det_exact(build("sextic", make_context(13))) == 1
    assert verify("thm-w", make_context(13)).ok()
    assert verify("thm-w", make_context(17)).ok()
    assert verify("thm-y", make_context(31)).ok()
    assert verify("thm-y", make_context(13)).ok()


def test_krachun_zero_sweep():
    """All four determinants vanish for p = 3 mod 4; p = 1 mod 4 is skipped."""
    for r in sweep("krachun-zero", 5, 100):
        if r.p % 4 == 3:
            assert r.verdict == "pass", r
            assert r.computed["det_61"] == 0
            assert r.computed["det_61_full"] == 0
            assert r.computed["det_32"] == 0
            assert r.computed["det_32_full"] == 0
        else:
            assert r.verdict == "skipped"


def test_supersingular_det_sweep():
    """Zero determinants occur exactly at the trace-zero primes."""
    reports = sweep("cdfull-ss", 5, 100, c=6, d=1)
    passed = {r.p for r in reports if r.verdict == "pass"}
    expect = {
        p
        for p in primes_in(5, 100)
        if CurveParams(6, 1).is_elliptic_mod(p) and char_trace(CurveParams(6, 1), make_context(p)) == 0
    }
    assert passed == expect
    for r in reports:
        assert r.verdict in ("pass", "skipped")


def test_chapman_skip_reason():
    """p = 3 is outside the classical statement and is reported as skipped."""
    r = verify("chapman-c1c2", make_context(3))
    assert r.verdict == "skipped"
    assert "p > 3" in r.reason


def test_size_cap_skip(monkeypatch):
    """Sweeps degrade to skips, never crashes, when the dimension cap bites."""
    monkeypatch.setenv("LEGDET_MAX_P", "16")
    r = verify("carlitz", make_context(19))
    assert r.verdict == "skipped"
    assert "size cap" in r.reason
    monkeypatch.delenv("LEGDET_MAX_P")
    assert verify("carlitz", make_context(19)).ok()


def test_sweep_workers_match_serial():
    """A worker pool returns the same reports as the serial path."""
    serial = sweep("thm-triangular", 3, 60)
    pooled = sweep("thm-triangular", 3, 60, workers=2)
    assert [(r.p, r.verdict, r.computed) for r in serial] == [
        (r.p, r.verdict, r.computed) for r in pooled
    ]


def test_all_theorems_smoke():
    """Every registered check yields only pass or skipped verdicts on a short sweep."""
    for tid in THEOREMS:
        for r in sweep(tid, 3, 30):
            assert r.verdict in ("pass", "skipped"), (tid, r.p, r.reason)


def test_summarize():
    """Counts group by verdict."""
    reports = sweep("carlitz", 3, 20)
    s = summarize(reports)
    assert s["pass"] == 7 and s["fail"] == 0 and s["skipped"] == 0

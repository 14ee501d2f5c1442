"""Mechanical verification of the determinant identities over sweepable prime ranges."""

from __future__ import annotations

import math
import multiprocessing
import time
from fractions import Fraction

from .arith import PrimeContext, legendre, make_context, primes_in, sqrt_mod
from .bigmat import det_exact, is_perfect_square
from .charsum import spectrum, trinomial_coeff_mod
from .ecount import CurveParams, char_trace
from .errors import NotAPower, NotAUnit
from .legmat import build, dimension, size_cap
from .quadrep import (
    X1MOD3,
    X1MOD4,
    XEQ2SYMBOL,
    evil_value,
    represent,
    unit_power_from_dets,
)
from .report import VerificationReport, summarize

__all__ = [
    "THEOREMS",
    "PARAM_ARITY",
    "PARAM_DEFAULTS",
    "VerificationReport",
    "summarize",
    "verify",
    "sweep",
]

THEOREMS = (
    "carlitz",
    "chapman-c1c2",
    "chapman-c3",
    "thm-triangular",
    "cdfull-degenerate",
    "cdfull-ss",
    "c1p-degenerate",
    "c1p",
    "scaling",
    "nonresidue-zero",
    "krachun-zero",
    "s1p",
    "cor-squares",
    "thm-w",
    "thm-y",
    "eigen-product",
)

# Which checks consume which parameters, and the sweep defaults for each.
PARAM_ARITY = {
    "cdfull-degenerate": "cd",
    "cdfull-ss": "cd",
    "scaling": "cd",
    "nonresidue-zero": "cd",
    "c1p-degenerate": "c",
    "c1p": "c",
    "eigen-product": "c",
}

PARAM_DEFAULTS = {
    "cdfull-degenerate": {"c": 2, "d": 1},
    "cdfull-ss": {"c": 1, "d": 1},
    "scaling": {"c": 1, "d": 4},
    "nonresidue-zero": {"c": 0, "d": -1},
    "c1p-degenerate": {"c": 2},
    "c1p": {"c": 1},
    "eigen-product": {"c": 1},
}

_SPECTRUM_MAX_P = 80
_LOG2_REL_TOL = 1.45e-6


def _cap_reason(p: int, *kinds: str) -> str | None:
    cap = size_cap()
    for k in kinds:
        n = dimension(k, p)
        if n > cap:
            return f"size cap: dimension {n} exceeds {cap}"
    return None


def _square_quotient(num: int, den: int) -> tuple[bool, int, str]:
    """num/den must be a nonnegative perfect square; returns (ok, root, why)."""
    if den == 0:
        return (num == 0, 0, "" if num == 0 else "zero divisor with nonzero numerator")
    q, r = divmod(num, den)
    if r:
        return False, 0, f"{num} is not divisible by {den}"
    if q < 0:
        return False, 0, f"quotient {q} is negative"
    ok, root = is_perfect_square(q)
    return (True, root, "") if ok else (False, 0, f"quotient {q} is not a perfect square")


def _check_carlitz(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    reason = _cap_reason(p, "carlitz")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("carlitz", ctx))
    expected = p ** ((p - 3) // 2)
    ok = det == expected
    return ("pass" if ok else "fail"), (None if ok else "determinant mismatch"), {
        "det": det,
        "expected": expected,
    }


def _check_chapman_c1c2(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    if p == 3:
        return "skipped", "needs p > 3", {}
    reason = _cap_reason(p, "c2")
    if reason:
        return "skipped", reason, {}
    lo = det_exact(build("c1", ctx))
    hi = det_exact(build("c2", ctx))
    computed: dict = {"det_half_lo": lo, "det_half_hi": hi}
    if p % 4 == 3:
        expected_hi = 1 << ((p - 1) // 2)
        computed["expected_hi"] = expected_hi
        ok = lo == 0 and hi == expected_hi
        return ("pass" if ok else "fail"), (None if ok else "closed form mismatch"), computed
    try:
        up = unit_power_from_dets(p, lo, hi)
    except (NotAUnit, NotAPower) as exc:
        return "fail", str(exc), computed
    computed.update({"two_a": up.two_a, "two_b": up.two_b, "h": up.h, "norm": up.norm})
    return "pass", None, computed


def _check_chapman_c3(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    reason = _cap_reason(p, "c3")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("c3", ctx))
    try:
        expected = evil_value(p)
    except (NotAUnit, NotAPower) as exc:
        return "fail", str(exc), {"det": det}
    ok = det == expected
    return ("pass" if ok else "fail"), (None if ok else "determinant mismatch"), {
        "det": det,
        "expected": expected,
    }


def _check_triangular(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    reason = _cap_reason(p, "tp")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("tp", ctx))
    sym = legendre(det, p)
    computed: dict = {"det": det, "symbol": sym}
    if p % 8 in (3, 5):
        expected = (-1) ** ((p - 3) // 2)
        neg_sym = legendre(-det, p)
        computed.update({"expected_symbol": expected, "neg_symbol": neg_sym})
        ok = sym == expected and neg_sym == -1
        why = None if ok else "symbol or non-residue claim failed"
    else:
        expected = legendre(-3, p)
        computed["expected_symbol"] = expected
        ok = sym == expected
        why = None if ok else "symbol mismatch"
    return ("pass" if ok else "fail"), why, computed


def _check_cdfull_degenerate(ctx: PrimeContext, c: int, d: int) -> tuple[str, str | None, dict]:
    p = ctx.p
    if d == 0 or c * c != 4 * d:
        return "skipped", "parameters are not globally degenerate (need c^2 = 4d, d != 0)", {}
    reason = _cap_reason(p, "cdfull")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("cdfull", ctx, c=c, d=d))
    expected = legendre(-2 * c, p) * (p - 1)
    ok = det == expected
    return ("pass" if ok else "fail"), (None if ok else "determinant mismatch"), {
        "det": det,
        "expected": expected,
    }


def _check_cdfull_ss(ctx: PrimeContext, c: int, d: int) -> tuple[str, str | None, dict]:
    p = ctx.p
    reason = _cap_reason(p, "cdfull")
    if reason:
        return "skipped", reason, {}
    if d % p == 0 or (c * c - 4 * d) % p == 0:
        return "skipped", "curve is singular mod p", {}
    coeff = trinomial_coeff_mod(c, d, ctx)
    if coeff != 0:
        return "skipped", "not supersingular (central trinomial coefficient nonzero)", {
            "trinomial": coeff
        }
    trace = char_trace(CurveParams(c, d), ctx)
    det = det_exact(build("cdfull", ctx, c=c, d=d))
    ok = det == 0
    return ("pass" if ok else "fail"), (None if ok else "determinant nonzero"), {
        "trinomial": coeff,
        "trace": trace,
        "det": det,
    }


def _check_c1p_degenerate(ctx: PrimeContext, c: int) -> tuple[str, str | None, dict]:
    p = ctx.p
    if (c - 2) % p != 0 and (c + 2) % p != 0:
        return "skipped", "c is not congruent to +-2 mod p", {}
    reason = _cap_reason(p, "cd")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("cd", ctx, c=c, d=1))
    expected = legendre(-2 * c, p) * (2 - p)
    ok = det == expected
    return ("pass" if ok else "fail"), (None if ok else "determinant mismatch"), {
        "det": det,
        "expected": expected,
    }


def _check_c1p(ctx: PrimeContext, c: int) -> tuple[str, str | None, dict]:
    p = ctx.p
    if (c - 2) % p == 0 or (c + 2) % p == 0:
        return "skipped", "c is congruent to +-2 mod p (degenerate case)", {}
    reason = _cap_reason(p, "cd")
    if reason:
        return "skipped", reason, {}
    trace = char_trace(CurveParams(c, 1), ctx)
    det = det_exact(build("cd", ctx, c=c, d=1))
    computed: dict = {"trace": trace, "det": det}
    if trace == 0:
        ok = det == 0
        return ("pass" if ok else "fail"), (None if ok else "trace zero but determinant nonzero"), computed
    ok, root, why = _square_quotient(det, 2 * trace)
    computed["x"] = root
    return ("pass" if ok else "fail"), (None if ok else why), computed


def _check_scaling(ctx: PrimeContext, c: int, d: int) -> tuple[str, str | None, dict]:
    p = ctx.p
    if d % p == 0:
        return "skipped", "d is divisible by p", {}
    if legendre(d, p) == -1:
        return "skipped", "d is a non-residue mod p", {}
    reason = _cap_reason(p, "cd")
    if reason:
        return "skipped", reason, {}
    f = sqrt_mod(d, p)
    g = c * pow(f, p - 2, p) % p
    lhs = det_exact(build("cd", ctx, c=c, d=d))
    rhs = legendre(f, p) * det_exact(build("cd", ctx, c=g, d=1))
    ok = lhs == rhs
    return ("pass" if ok else "fail"), (None if ok else "scaling identity failed"), {
        "f": f,
        "g": g,
        "lhs": lhs,
        "rhs": rhs,
    }


def _check_nonresidue_zero(ctx: PrimeContext, c: int, d: int) -> tuple[str, str | None, dict]:
    p = ctx.p
    if d % p == 0:
        return "skipped", "d is divisible by p", {}
    if legendre(d, p) != -1:
        return "skipped", "d is a residue mod p", {}
    reason = _cap_reason(p, "cd")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("cd", ctx, c=c, d=d))
    ok = det == 0
    return ("pass" if ok else "fail"), (None if ok else "determinant nonzero"), {"det": det}


def _check_krachun_zero(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    if p % 4 != 3:
        return "skipped", "p is not 3 mod 4", {}
    reason = _cap_reason(p, "cdfull")
    if reason:
        return "skipped", reason, {}
    dets = {
        "det_61": det_exact(build("cd", ctx, c=6, d=1)),
        "det_61_full": det_exact(build("cdfull", ctx, c=6, d=1)),
        "det_32": det_exact(build("cd", ctx, c=3, d=2)),
        "det_32_full": det_exact(build("cdfull", ctx, c=3, d=2)),
    }
    bad = [k for k, v in dets.items() if v != 0]
    ok = not bad
    return ("pass" if ok else "fail"), (None if ok else f"nonzero: {', '.join(bad)}"), dets


def _check_s1p(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    reason = _cap_reason(p, "squares")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("squares", ctx))
    sym = legendre(-det, p)
    computed: dict = {"det": det, "neg_symbol": sym}
    if sym == -1:
        return "fail", "negated determinant is a non-residue", computed
    if p % 4 == 3:
        ok, root = is_perfect_square(-det)
        computed["root"] = root
        return ("pass" if ok else "fail"), (None if ok else "-det is not a perfect square"), computed
    x1 = represent(p, 4, X1MOD4).x
    ok, root, why = _square_quotient(det, x1)
    computed.update({"x1": x1, "root": root})
    return ("pass" if ok else "fail"), (None if ok else why), computed


def _check_cor_squares(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    if p % 4 != 1:
        return "skipped", "no family applies (p not 1 mod 4)", {}
    reason = _cap_reason(p, "cd")
    if reason:
        return "skipped", reason, {}
    failures: list[str] = []
    computed: dict = {}
    x1 = represent(p, 4, X1MOD4).x
    computed["x1"] = x1
    sign4 = 1 if (p - 1) // 4 % 2 == 0 else -1
    det32 = det_exact(build("cd", ctx, c=3, d=2))
    ok, v, why = _square_quotient(sign4 * det32, x1)
    computed.update({"det_32": det32, "v_32": v})
    if not ok:
        failures.append(f"(3,2): {why}")
    if p % 8 == 1:
        x2 = represent(p, 2, X1MOD4).x
        sign8 = 1 if (p - 1) // 8 % 2 == 0 else -1
        det42 = det_exact(build("cd", ctx, c=4, d=2))
        det88 = det_exact(build("cd", ctx, c=8, d=8))
        computed.update({"x2": x2, "det_42": det42, "det_88": det88})
        if det42 != det88:
            failures.append("(4,2) and (8,8) determinants differ")
        ok, w, why = _square_quotient(sign8 * det42, x2)
        computed["w_42"] = w
        if not ok:
            failures.append(f"(4,2): {why}")
    if p % 12 == 1:
        x3 = represent(p, 3, X1MOD3).x
        det33 = det_exact(build("cd", ctx, c=3, d=3))
        ok, v, why = _square_quotient(det33, x3)
        computed.update({"x3": x3, "det_33": det33, "v_33": v})
        if not ok:
            failures.append(f"(3,3): {why}")
    if p % 28 in (1, 9, 25):
        x7 = represent(p, 7).x
        det21 = det_exact(build("cd", ctx, c=21, d=112))
        ok, v, why = _square_quotient(det21, x7)
        computed.update({"x7": x7, "det_21_112": det21, "v_21_112": v})
        if not ok:
            failures.append(f"(21,112): {why}")
    ok_all = not failures
    return ("pass" if ok_all else "fail"), (None if ok_all else "; ".join(failures)), computed


def _check_thm_w(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    if p % 4 != 1:
        return "skipped", "p is not 1 mod 4", {}
    reason = _cap_reason(p, "quartic")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("quartic", ctx))
    x1 = represent(p, 4, X1MOD4).x
    computed: dict = {"det": det, "x1": x1}
    if p % 8 == 5:
        ok, root, why = _square_quotient(-2 * det, 1 + x1)
        computed["root"] = root
        return ("pass" if ok else "fail"), (None if ok else why), computed
    x2 = represent(p, 2, X1MOD4).x
    sign8 = 1 if (p - 1) // 8 % 2 == 0 else -1
    ok, root, why = _square_quotient(sign8 * 2 * det, (1 + x1) * x2)
    computed.update({"x2": x2, "root": root})
    return ("pass" if ok else "fail"), (None if ok else why), computed


def _check_thm_y(ctx: PrimeContext) -> tuple[str, str | None, dict]:
    p = ctx.p
    if p % 6 != 1:
        return "skipped", "p is not 1 mod 6", {}
    reason = _cap_reason(p, "sextic")
    if reason:
        return "skipped", reason, {}
    det = det_exact(build("sextic", ctx))
    x3 = represent(p, 3, X1MOD3).x
    computed: dict = {"det": det, "x3": x3}
    if p % 12 == 7:
        ok, root, why = _square_quotient(-3 * det, 1 + 2 * x3)
        computed["root"] = root
        return ("pass" if ok else "fail"), (None if ok else why), computed
    x4 = represent(p, 4, XEQ2SYMBOL).x
    delta = Fraction(1, 3) if x4 % 3 == 0 else Fraction(-1)
    sign = 1 if (p + 3) // 4 % 2 == 0 else -1
    zz = Fraction(sign * 3 * det) / (Fraction(1 + 2 * x3) * x4 * delta)
    computed.update({"x4": x4, "delta": str(delta)})
    if zz.denominator != 1 or zz < 0:
        return "fail", f"square candidate {zz} is not a nonnegative integer", computed
    ok, root = is_perfect_square(int(zz))
    computed["root"] = root
    return ("pass" if ok else "fail"), (None if ok else f"{int(zz)} is not a perfect square"), computed


def _product_matches(values, det: int) -> tuple[bool, dict]:
    mags = [abs(v) for v in values]
    top = max(mags)
    if det == 0:
        ok = min(mags) <= 1e-6 * (1.0 + top)
        return ok, {"min_eigen_mag": min(mags)}
    if min(mags) == 0.0:
        return False, {"min_eigen_mag": 0.0}
    log2_prod = sum(math.log2(m) for m in mags)
    log2_det = math.log2(abs(det))
    return abs(log2_prod - log2_det) <= _LOG2_REL_TOL, {
        "log2_prod": log2_prod,
        "log2_det": log2_det,
    }


def _check_eigen_product(ctx: PrimeContext, c: int) -> tuple[str, str | None, dict]:
    p = ctx.p
    if p > _SPECTRUM_MAX_P:
        return "skipped", f"p above spectrum cap {_SPECTRUM_MAX_P}", {}
    failures: list[str] = []
    computed: dict = {}
    plans = [("full", "cd", True), ("quartic", "quartic", p % 4 == 1), ("sextic", "sextic", p % 6 == 1)]
    for family, kind, applies in plans:
        if not applies:
            continue
        if family == "full":
            sp = spectrum(family, ctx, c=c)
            det = det_exact(build(kind, ctx, c=c, d=1))
        else:
            sp = spectrum(family, ctx)
            det = det_exact(build(kind, ctx))
        ok, info = _product_matches(sp.values, det)
        computed[f"det_{family}"] = det
        computed.update({f"{k}_{family}": v for k, v in info.items()})
        if not ok:
            failures.append(family)
    ok_all = not failures
    why = None if ok_all else f"eigenvalue product mismatch: {', '.join(failures)}"
    return ("pass" if ok_all else "fail"), why, computed


_CHECKERS = {
    "carlitz": _check_carlitz,
    "chapman-c1c2": _check_chapman_c1c2,
    "chapman-c3": _check_chapman_c3,
    "thm-triangular": _check_triangular,
    "cdfull-degenerate": _check_cdfull_degenerate,
    "cdfull-ss": _check_cdfull_ss,
    "c1p-degenerate": _check_c1p_degenerate,
    "c1p": _check_c1p,
    "scaling": _check_scaling,
    "nonresidue-zero": _check_nonresidue_zero,
    "krachun-zero": _check_krachun_zero,
    "s1p": _check_s1p,
    "cor-squares": _check_cor_squares,
    "thm-w": _check_thm_w,
    "thm-y": _check_thm_y,
    "eigen-product": _check_eigen_product,
}


def normalize_theorem(thm: str) -> str:
    tid = thm.lower().replace("_", "-")
    if tid not in _CHECKERS:
        raise ValueError(f"unknown theorem id {thm!r}; known: {', '.join(THEOREMS)}")
    return tid


def verify(
    thm: str, ctx: PrimeContext, c: int | None = None, d: int | None = None
) -> VerificationReport:
    """Run one check at one prime and report verdict plus witnesses."""
    tid = normalize_theorem(thm)
    arity = PARAM_ARITY.get(tid, "")
    defaults = PARAM_DEFAULTS.get(tid, {})
    params: dict[str, int] = {}
    if "c" in arity:
        params["c"] = c if c is not None else defaults["c"]
    elif c is not None:
        raise ValueError(f"theorem {tid!r} takes no parameter c")
    if "d" in arity:
        params["d"] = d if d is not None else defaults["d"]
    elif d is not None:
        raise ValueError(f"theorem {tid!r} takes no parameter d")
    start = time.perf_counter()
    verdict, reason, computed = _CHECKERS[tid](ctx, **params)
    elapsed = time.perf_counter() - start
    return VerificationReport(
        theorem_id=tid,
        p=ctx.p,
        params=params,
        computed=computed,
        verdict=verdict,
        reason=reason,
        elapsed=elapsed,
    )


def _sweep_task(args) -> VerificationReport:
    thm, p, c, d = args
    return verify(thm, make_context(p), c=c, d=d)


def sweep(
    thm: str,
    pmin: int,
    pmax: int,
    c: int | None = None,
    d: int | None = None,
    workers: int = 1,
) -> list[VerificationReport]:
    """Run one check at every odd prime in [pmin, pmax], in increasing order."""
    tid = normalize_theorem(thm)
    ps = list(primes_in(max(pmin, 3), pmax))
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            return pool.map(_sweep_task, [(tid, p, c, d) for p in ps])
    return [verify(tid, make_context(p), c=c, d=d) for p in ps]

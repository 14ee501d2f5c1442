"""Command-line surface: exact determinants, theorem sweeps, supersingular search."""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time

from .arith import is_prime, make_context, primes_in
from .bigmat import det_exact
from .ecount import CurveParams, char_trace
from .errors import LegdetError
from .legmat import build, normalize_kind, size_cap
from .report import VerificationReport, summarize
from .verify import PARAM_ARITY, THEOREMS, normalize_theorem, sweep

_KIND_CHOICES = (
    "carlitz",
    "c1",
    "c2",
    "c3",
    "squares",
    "s1",
    "tp",
    "cd",
    "cdfull",
    "quartic",
    "w",
    "sextic",
    "y",
)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; keep 2 reserved for falsifications."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _stringify(value):
    """Big integers become decimal strings so downstream tools keep full precision."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return str(value) if not isinstance(value, str) else value


def _report_record(r: VerificationReport) -> dict:
    rec: dict = {"theorem_id": r.theorem_id, "p": r.p}
    rec.update({k: v for k, v in sorted(r.params.items())})
    rec["verdict"] = r.verdict
    if r.reason:
        rec["reason"] = r.reason
    rec.update({k: _stringify(v) for k, v in r.computed.items()})
    return rec


def _emit_reports(reports: list[VerificationReport], fmt: str) -> None:
    if fmt == "json":
        for r in reports:
            print(json.dumps(_report_record(r), sort_keys=True))
        return
    if fmt == "csv":
        print("theorem_id,p,c,d,verdict,reason,witnesses")
        for r in reports:
            wit = ";".join(f"{k}={_stringify(v)}" for k, v in r.computed.items())
            fields = [
                r.theorem_id,
                str(r.p),
                str(r.params.get("c", "")),
                str(r.params.get("d", "")),
                r.verdict,
                (r.reason or "").replace(",", ";"),
                wit,
            ]
            print(",".join(f'"{f}"' if "," in f else f for f in fields))
        return
    for r in reports:
        parts = [r.theorem_id, f"p={r.p}"]
        parts += [f"{k}={v}" for k, v in sorted(r.params.items())]
        parts.append(r.verdict.upper())
        if r.reason:
            parts.append(f"[{r.reason}]")
        parts += [f"{k}={_stringify(v)}" for k, v in r.computed.items()]
        print(" ".join(str(x) for x in parts))


def _cmd_det(args) -> int:
    kind = normalize_kind(args.kind)
    if args.full:
        if kind != "cd":
            raise LegdetError("--full only applies to --kind cd")
        kind = "cdfull"
    p = args.p
    if not is_prime(p) or p < 3:
        raise LegdetError(f"--p must be an odd prime, got {p}")
    ctx = make_context(p)
    needs = kind in ("cd", "cdfull")
    if needs:
        if args.c is None or args.d is None:
            raise LegdetError(f"kind {kind!r} requires --c and --d")
        matrix = build(kind, ctx, c=args.c, d=args.d)
    else:
        if args.c is not None or args.d is not None:
            raise LegdetError(f"kind {kind!r} takes no --c/--d")
        matrix = build(kind, ctx)
    det = det_exact(matrix)
    n = matrix.n
    if args.format == "json":
        rec = {"det": str(det), "kind": kind, "p": p, "dim": n, "entries": n * n}
        if needs:
            rec.update({"c": args.c, "d": args.d})
        print(json.dumps(rec, sort_keys=True))
    elif args.format == "csv":
        print("det,kind,p,c,d,dim,entries")
        c = args.c if needs else ""
        d = args.d if needs else ""
        print(f"{det},{kind},{p},{c},{d},{n},{n * n}")
    else:
        print(det)
        meta = [f"kind={kind}", f"p={p}"]
        if needs:
            meta += [f"c={args.c}", f"d={args.d}"]
        meta += [f"dim={n}", f"entries={n * n}"]
        print(" ".join(meta))
    return 0


def _cmd_verify(args) -> int:
    if args.pmin > args.pmax:
        raise LegdetError(f"--pmin {args.pmin} exceeds --pmax {args.pmax}")
    theorems = list(THEOREMS) if args.thm == "all" else [normalize_theorem(args.thm)]
    t0 = time.perf_counter()
    reports: list[VerificationReport] = []
    for tid in theorems:
        arity = PARAM_ARITY.get(tid, "")
        c = args.c if "c" in arity else None
        d = args.d if "d" in arity else None
        reports.extend(sweep(tid, args.pmin, args.pmax, c=c, d=d, workers=args.workers))
    wall = time.perf_counter() - t0
    _emit_reports(reports, args.format)
    counts = summarize(reports)
    footer = f"pass={counts['pass']} fail={counts['fail']} skipped={counts['skipped']}"
    if args.format == "human":
        print(footer)
    print(f"{footer} wall={wall:.2f}s", file=sys.stderr)
    return 2 if counts["fail"] else 0


def _ss_task(task) -> tuple[int, bool, bool]:
    c, d, p, cap = task
    params = CurveParams(c, d)
    if not params.is_elliptic_mod(p):
        return p, False, False
    ctx = make_context(p)
    if char_trace(params, ctx) != 0:
        return p, False, False
    if p <= cap:
        det = det_exact(build("cdfull", ctx, c=c, d=d))
        if det != 0:
            raise ArithmeticError(
                f"falsified: supersingular p = {p} but the full symbol matrix has det {det}"
            )
        return p, True, True
    return p, True, False


def _cmd_search_ss(args) -> int:
    params = CurveParams(args.c, args.d)
    if params.is_degenerate():
        raise LegdetError(
            f"(c, d) = ({args.c}, {args.d}) is degenerate: need d != 0 and c^2 != 4d"
        )
    if args.pmax is None:
        raise LegdetError("--pmax is required")
    if args.pmin > args.pmax:
        raise LegdetError(f"--pmin {args.pmin} exceeds --pmax {args.pmax}")
    cap = args.det_cap
    t0 = time.perf_counter()
    ps = list(primes_in(max(args.pmin, 5), args.pmax))
    tasks = [(args.c, args.d, p, cap) for p in ps]
    try:
        if args.workers > 1:
            with multiprocessing.Pool(args.workers) as pool:
                results = pool.map(_ss_task, tasks)
        else:
            results = [_ss_task(t) for t in tasks]
    except ArithmeticError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    wall = time.perf_counter() - t0
    hits = [(p, certified) for p, hit, certified in results if hit]
    if args.format == "json":
        for p, certified in hits:
            print(json.dumps({"p": p, "det_certified": certified}, sort_keys=True))
    elif args.format == "csv":
        print("p,det_certified")
        for p, certified in hits:
            print(f"{p},{str(certified).lower()}")
    else:
        print(" ".join(str(p) for p, _ in hits))
        window = len(ps)
        dens = f"{len(hits)}/{window}" if window else "0/0"
        print(f"count={len(hits)} window=[{max(args.pmin, 5)},{args.pmax}] odd_primes={window} density={dens}")
        certified = sum(1 for _, cert in hits if cert)
        print(f"det-certified: {certified} of {len(hits)} (cap {cap})")
    print(f"hits={len(hits)} wall={wall:.2f}s", file=sys.stderr)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="legdet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_det = sub.add_parser("det", help="exact determinant of one family member")
    p_det.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    p_det.add_argument("--p", required=True, type=int, help="odd prime")
    p_det.add_argument("--c", type=int)
    p_det.add_argument("--d", type=int)
    p_det.add_argument("--full", action="store_true", help="use the 0..p-1 variant of kind cd")
    _add_format(p_det, csv=True)
    p_det.set_defaults(func=_cmd_det)

    p_ver = sub.add_parser("verify", help="sweep one or all checks over a prime range")
    p_ver.add_argument("--thm", required=True, choices=list(THEOREMS) + ["all"])
    p_ver.add_argument("--pmin", type=int, default=3)
    p_ver.add_argument("--pmax", type=int, required=True)
    p_ver.add_argument("--c", type=int)
    p_ver.add_argument("--d", type=int)
    p_ver.add_argument("--workers", type=int, default=1)
    _add_format(p_ver, csv=True)
    p_ver.set_defaults(func=_cmd_verify)

    p_ss = sub.add_parser("search-ss", help="supersingular primes of y^2 = x(dx^2+cx+1)")
    p_ss.add_argument("--c", type=int, required=True)
    p_ss.add_argument("--d", type=int, required=True)
    p_ss.add_argument("--pmin", type=int, default=5)
    p_ss.add_argument("--pmax", type=int)
    p_ss.add_argument("--det-cap", type=int, default=size_cap(),
                      help="det-certify hits up to this prime (0 disables)")
    p_ss.add_argument("--workers", type=int, default=1)
    _add_format(p_ss, csv=True)
    p_ss.set_defaults(func=_cmd_search_ss)
    return parser


def _add_format(sub_parser, csv: bool) -> None:
    grp = sub_parser.add_mutually_exclusive_group()
    grp.add_argument("--json", dest="format", action="store_const", const="json",
                     help="line-delimited records, big integers as strings")
    if csv:
        grp.add_argument("--csv", dest="format", action="store_const", const="csv")
    sub_parser.set_defaults(format="human")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except LegdetError as exc:
        print(f"legdet: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"legdet: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

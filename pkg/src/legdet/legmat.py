"""Builders for the Legendre-symbol matrix families under study."""

from __future__ import annotations

import os

from .arith import PrimeContext
from .bigmat import IntMatrix
from .errors import CongruenceMismatch, SizeCapExceeded

KINDS = (
    "carlitz",
    "c1",
    "c2",
    "c3",
    "squares",
    "tp",
    "cd",
    "cdfull",
    "quartic",
    "sextic",
)

_ALIASES = {"s1": "squares", "w": "quartic", "y": "sextic"}

_DEFAULT_CAP = 512


def size_cap() -> int:
    """Maximum matrix dimension; override with LEGDET_MAX_P."""
    return int(os.environ.get("LEGDET_MAX_P", _DEFAULT_CAP))


def normalize_kind(kind: str) -> str:
    k = kind.lower()
    k = _ALIASES.get(k, k)
    if k not in KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; known: {', '.join(KINDS)}")
    return k


def dimension(kind: str, p: int) -> int:
    """Dimension of the requested family at p (congruence conditions not checked here)."""
    k = normalize_kind(kind)
    if k == "carlitz" or k == "cd":
        return p - 1
    if k == "cdfull":
        return p
    if k in ("c1", "squares", "tp"):
        return (p - 1) // 2
    if k in ("c2", "c3"):
        return (p + 1) // 2
    if k == "quartic":
        return (p - 1) // 4
    return (p - 1) // 6


def quartic_residues(ctx: PrimeContext) -> tuple[int, ...]:
    """Sorted fourth-power residues mod p; requires p == 1 mod 4."""
    p = ctx.p
    if p % 4 != 1:
        raise CongruenceMismatch(f"p = {p} is not 1 mod 4")
    xi4 = pow(ctx.xi, 4, p)
    out = []
    v = 1
    for _ in range((p - 1) // 4):
        out.append(v)
        v = v * xi4 % p
    return tuple(sorted(out))


def sextic_residues(ctx: PrimeContext) -> tuple[int, ...]:
    """Sorted sixth-power residues mod p; requires p == 1 mod 6."""
    p = ctx.p
    if p % 6 != 1:
        raise CongruenceMismatch(f"p = {p} is not 1 mod 6")
    xi6 = pow(ctx.xi, 6, p)
    out = []
    v = 1
    for _ in range((p - 1) // 6):
        out.append(v)
        v = v * xi6 % p
    return tuple(sorted(out))


def build(kind: str, ctx: PrimeContext, c: int | None = None, d: int | None = None) -> IntMatrix:
    """Materialize one family member as an exact integer matrix."""
    k = normalize_kind(kind)
    p = ctx.p
    tbl = ctx.legendre_table
    needs_params = k in ("cd", "cdfull")
    if needs_params and (c is None or d is None):
        raise ValueError(f"kind {k!r} requires parameters c and d")
    if not needs_params and (c is not None or d is not None):
        raise ValueError(f"kind {k!r} takes no parameters")
    n = dimension(k, p)
    if n > size_cap():
        raise SizeCapExceeded(f"dimension {n} exceeds cap {size_cap()} (set LEGDET_MAX_P)")
    if k == "carlitz":
        rows = [[tbl[(i - j) % p] for j in range(1, p)] for i in range(1, p)]
    elif k in ("c1", "c2"):
        rows = [[tbl[(i + j - 1) % p] for j in range(1, n + 1)] for i in range(1, n + 1)]
    elif k == "c3":
        rows = [[tbl[(j - i) % p] for j in range(n)] for i in range(n)]
    elif k == "squares":
        sq = [i * i % p for i in range(1, n + 1)]
        rows = [[tbl[(a + b) % p] for b in sq] for a in sq]
    elif k == "tp":
        tri = [i * (i + 1) % p for i in range(1, n + 1)]
        rows = [[tbl[(a + b) % p] for b in tri] for a in tri]
    elif k in ("cd", "cdfull"):
        lo = 0 if k == "cdfull" else 1
        idx = range(lo, p)
        rows = [
            [tbl[(i * i + c * i * j + d * j * j) % p] for j in idx]
            for i in idx
        ]
    elif k == "quartic":
        res = quartic_residues(ctx)
        rows = [[tbl[(a + b) % p] for b in res] for a in res]
    else:
        res = sextic_residues(ctx)
        rows = [[tbl[(a + b) % p] for b in res] for a in res]
    return IntMatrix.from_rows(rows)

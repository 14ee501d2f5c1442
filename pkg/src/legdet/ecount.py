"""Point counts and supersingular search for the curves y^2 = x(dx^2 + cx + 1)."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import PrimeContext, make_context, primes_in
from .bigmat import det_exact
from .errors import DegenerateFamily, SingularCurve
from .legmat import build


@dataclass(frozen=True)
class CurveParams:
    """Coefficients of the cubic x*(d*x^2 + c*x + 1)."""

    c: int
    d: int

    def is_degenerate(self) -> bool:
        """True when no prime gives an elliptic curve (d = 0 or repeated root over Q)."""
        return self.d == 0 or self.c * self.c == 4 * self.d

    def is_elliptic_mod(self, p: int) -> bool:
        return self.d % p != 0 and (self.c * self.c - 4 * self.d) % p != 0


@dataclass(frozen=True)
class CurveCount:
    """Exact point count of one curve over F_p (projective, one point at infinity)."""

    p: int
    c: int
    d: int
    npoints: int
    trace: int

    @property
    def is_supersingular(self) -> bool:
        return self.trace == 0


def char_trace(params: CurveParams, ctx: PrimeContext) -> int:
    """-sum over x of (x*(d*x^2+c*x+1)/p); equals the Frobenius trace when elliptic."""
    p = ctx.p
    tbl = ctx.legendre_table
    c = params.c % p
    d = params.d % p
    return -sum(tbl[x * ((d * x + c) * x + 1) % p] for x in range(1, p))


def count_points(params: CurveParams, ctx: PrimeContext) -> CurveCount:
    """Exact order of the curve mod p; raises SingularCurve when the cubic degenerates."""
    p = ctx.p
    if not params.is_elliptic_mod(p):
        raise SingularCurve(f"x(dx^2+cx+1) has a repeated root mod {p} for (c, d) = ({params.c}, {params.d})")
    t = char_trace(params, ctx)
    if t * t > 4 * p:
        raise ArithmeticError(f"trace {t} violates the Hasse bound at p = {p}")  # unreachable
    return CurveCount(p=p, c=params.c, d=params.d, npoints=p + 1 - t, trace=t)


def search_supersingular(
    params: CurveParams, pmin: int, pmax: int, det_cap: int = 512
) -> list[int]:
    """Primes in [pmin, pmax] where the curve is supersingular; det-certifies p <= det_cap."""
    if params.is_degenerate():
        raise DegenerateFamily(f"(c, d) = ({params.c}, {params.d}) never gives an elliptic curve")
    hits: list[int] = []
    for p in primes_in(max(pmin, 5), pmax):
        if not params.is_elliptic_mod(p):
            continue
        ctx = make_context(p)
        if char_trace(params, ctx) != 0:
            continue
        if p <= det_cap:
            det = det_exact(build("cdfull", ctx, c=params.c, d=params.d))
            if det != 0:
                raise ArithmeticError(
                    f"falsified: supersingular p = {p} but the full symbol matrix has det {det}"
                )
        hits.append(p)
    return hits

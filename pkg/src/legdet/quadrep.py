"""Representations p = x^2 + m*y^2, real quadratic units, and determinant-to-unit recovery."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import is_prime, jacobi, legendre, make_context, sqrt_mod
from .bigmat import det_exact, is_perfect_square
from .errors import (
    CongruenceMismatch,
    NoRepresentation,
    NotAPower,
    NotAUnit,
)
from .legmat import build

# Sign-normalization rules for the x coordinate.
X1MOD4 = "x1mod4"
X1MOD3 = "x1mod3"
XEQ2SYMBOL = "xeq2symbol"
X7SQUARE = "x7square"

_RULES_FOR_M = {4: (X1MOD4, XEQ2SYMBOL), 2: (X1MOD4,), 3: (X1MOD3,), 7: (X7SQUARE,)}
_DEFAULT_RULE = {4: X1MOD4, 2: X1MOD4, 3: X1MOD3, 7: X7SQUARE}

_POWER_SEARCH_BOUND = 10**6


@dataclass(frozen=True)
class QuadraticRep:
    """p = x^2 + m*y^2 with x sign-normalized by the named rule and y >= 0."""

    p: int
    m: int
    x: int
    y: int
    rule: str


@dataclass(frozen=True)
class UnitPower:
    """(two_a + two_b*sqrt(p))/2 = fundamental_unit^h with norm in {1, -1}."""

    p: int
    two_a: int
    two_b: int
    h: int
    norm: int


def _in_class(p: int, m: int) -> bool:
    if m == 4:
        return p % 4 == 1
    if m == 2:
        return p % 8 == 1
    if m == 3:
        return p % 3 == 1
    return p % 28 in (1, 9, 25)


def _normalize(p: int, m: int, x: int, y: int, rule: str) -> QuadraticRep:
    y = abs(y)
    x = abs(x)
    if rule == X1MOD4:
        if x % 4 != 1:
            x = -x
    elif rule == X1MOD3:
        if x % 3 != 1:
            x = -x
    elif rule == XEQ2SYMBOL:
        if x % 4 != legendre(2, p) % 4:
            x = -x
    else:  # X7SQUARE
        if jacobi(x % 7, 7) != 1:
            x = -x
    return QuadraticRep(p=p, m=m, x=x, y=y, rule=rule)


def represent(p: int, m: int, rule: str | None = None) -> QuadraticRep:
    """Essentially unique representation p = x^2 + m*y^2 for m in {2, 3, 4, 7}."""
    if m not in _RULES_FOR_M:
        raise ValueError(f"unsupported form coefficient m = {m}")
    if not is_prime(p) or p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    if rule is None:
        rule = _DEFAULT_RULE[m]
    if rule not in _RULES_FOR_M[m]:
        raise ValueError(f"rule {rule!r} does not apply to m = {m}")
    if not _in_class(p, m):
        raise NoRepresentation(f"p = {p} is outside the congruence class for x^2 + {m}y^2")
    if p < 100:
        for y in range(isqrt(p // m) + 1):
            ok, x = is_perfect_square(p - m * y * y)
            if ok:
                return _normalize(p, m, x, y, rule)
        raise NoRepresentation(f"no representation found for p = {p}, m = {m}")  # unreachable
    r = sqrt_mod(-m, p)
    r = p - r if r <= p // 2 else r  # Cornacchia descent starts from the larger root
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    if rem % m:
        raise NoRepresentation(f"descent failed for p = {p}, m = {m}")  # unreachable in class
    ok, y = is_perfect_square(rem // m)
    if not ok:
        raise NoRepresentation(f"descent failed for p = {p}, m = {m}")  # unreachable in class
    return _normalize(p, m, b, y, rule)


def _icbrt(n: int) -> int:
    """Integer floor cube root by Newton iteration."""
    if n <= 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def _pell_min(p: int) -> tuple[int, int, int]:
    """Smallest (x, y, n) with x^2 - p*y^2 = n = +-1, by the continued fraction of sqrt(p)."""
    a0 = isqrt(p)
    num_prev, num = 1, a0
    den_prev, den = 0, 1
    pp = a0
    qq = p - a0 * a0
    length = 1
    while qq != 1:
        a = (a0 + pp) // qq
        pp = a * qq - pp
        qq = (p - pp * pp) // qq
        num_prev, num = num, a * num + num_prev
        den_prev, den = den, a * den + den_prev
        length += 1
    return num, den, (-1) ** length


def fundamental_unit(p: int) -> tuple[int, int]:
    """Doubled coordinates (u, v) of the fundamental unit (u + v*sqrt(p))/2, p == 1 mod 4."""
    if not is_prime(p) or p % 4 != 1:
        raise CongruenceMismatch(f"p = {p} is not a prime congruent to 1 mod 4")
    x0, y0, n0 = _pell_min(p)
    # A half-integral unit exists iff some integer u solves u^3 - 3*n0*u = 2*x0
    # with (u^2 - 4*n0)/p a perfect square; then (u, v) has both coordinates odd.
    target = 2 * x0
    guess = _icbrt(target)
    for u in range(max(1, guess - 1), guess + 3):
        if u * u * u - 3 * n0 * u == target:
            vv, rem = divmod(u * u - 4 * n0, p)
            if rem == 0:
                ok, v = is_perfect_square(vv)
                if ok and v > 0 and u % 2 == 1 and v % 2 == 1:
                    return u, v
    return 2 * x0, 2 * y0


def unit_norm(p: int, unit: tuple[int, int]) -> int:
    """Norm of (u + v*sqrt(p))/2; must be +-1 for a unit."""
    u, v = unit
    t = u * u - p * v * v
    q, r = divmod(t, 4)
    if r or q not in (1, -1):
        raise NotAUnit(f"({u} + {v}*sqrt({p}))/2 has norm {t}/4")
    return q


def _mul_half(p: int, a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Product in doubled coordinates; exact since coordinates share parity."""
    u1, v1 = a
    u2, v2 = b
    u, ru = divmod(u1 * u2 + v1 * v2 * p, 2)
    v, rv = divmod(u1 * v2 + u2 * v1, 2)
    if ru or rv:
        raise ArithmeticError("parity violation in unit multiplication")  # unreachable
    return u, v


def unit_power_from_dets(p: int, det_half_lo: int, det_half_hi: int) -> UnitPower:
    """Recover the unit power hidden in the two half-size determinants, p == 1 mod 4.

    det_half_lo is the (p-1)/2-dimensional determinant, det_half_hi the
    (p+1)/2-dimensional one; they encode 2b and 2a of a + b*sqrt(p).
    """
    if not is_prime(p) or p % 4 != 1:
        raise CongruenceMismatch(f"p = {p} is not a prime congruent to 1 mod 4")
    scale = 1 << ((p - 1) // 2)
    den_lo = scale if (p - 1) // 4 % 2 == 0 else -scale
    den_hi = scale if (p + 3) // 4 % 2 == 0 else -scale
    two_b, rb = divmod(2 * det_half_lo, den_lo)
    two_a, ra = divmod(2 * det_half_hi, den_hi)
    if ra or rb:
        raise NotAUnit(f"determinants at p = {p} do not split off the 2-power factor")
    norm = unit_norm(p, (two_a, two_b))
    if two_a <= 0 or two_b <= 0:
        raise NotAPower(f"recovered unit at p = {p} is not in the positive power cone")
    base = fundamental_unit(p)
    w = base
    h = 1
    while h <= _POWER_SEARCH_BOUND:
        if w == (two_a, two_b):
            return UnitPower(p=p, two_a=two_a, two_b=two_b, h=h, norm=norm)
        if w[1] > two_b or (w[1] == two_b and w[0] > two_a):
            raise NotAPower(f"unit at p = {p} is not a power of the fundamental unit")
        w = _mul_half(p, w, base)
        h += 1
    raise NotAPower(f"exponent search bound exceeded at p = {p}")


def evil_value(p: int) -> int:
    """Predicted determinant of the shifted-difference half matrix (kind 'c3')."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p % 4 == 3:
        return 1
    ctx = make_context(p)
    lo = det_exact(build("c1", ctx))
    hi = det_exact(build("c2", ctx))
    up = unit_power_from_dets(p, lo, hi)
    w = (up.two_a, up.two_b)
    if legendre(2, p) == -1:
        w = _mul_half(p, _mul_half(p, w, w), w)
    if w[0] % 2:
        raise ArithmeticError(f"unit power at p = {p} has a half-integral coordinate")
    return -(w[0] // 2)

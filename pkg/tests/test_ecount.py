"""Point counting against brute-force enumeration; supersingular search."""

import math

import pytest

from legdet.arith import make_context, primes_in
from legdet.ecount import CurveParams, char_trace, count_points, search_supersingular
from legdet.errors import DegenerateFamily, SingularCurve


def _count_brute(c, d, p):
    # affine solutions of y^2 = x (d x^2 + c x + 1) plus the point at infinity
    total = 1
    squares = {}
    for y in range(p):
        squares[y * y % p] = squares.get(y * y % p, 0) + 1
    for x in range(p):
        rhs = x * (d * x * x + c * x + 1) % p
        total += squares.get(rhs, 0)
    return total


def test_count_points_brute_force():
    """Exact point counts match direct enumeration for small primes."""
    for p in primes_in(5, 60):
        ctx = make_context(p)
        for c, d in ((1, 1), (6, 1), (3, 2), (-1, 3), (0, -1)):
            params = CurveParams(c, d)
            if not params.is_elliptic_mod(p):
                continue
            cc = count_points(params, ctx)
            assert cc.npoints == _count_brute(c, d, p), (c, d, p)
            assert cc.npoints == p + 1 - cc.trace
            assert cc.is_supersingular == (cc.trace == 0)


def test_hasse_bound():
    """Traces stay within 2 sqrt(p)."""
    for p in primes_in(5, 200):
        ctx = make_context(p)
        for c, d in ((1, 1), (5, -3), (-4, 7)):
            params = CurveParams(c, d)
            if not params.is_elliptic_mod(p):
                continue
            t = char_trace(params, ctx)
            assert t * t <= 4 * p, (c, d, p, t)


def test_degenerate_params():
    """d = 0 or c^2 = 4d never defines the cubic family."""
    for c, d in ((2, 1), (-2, 1), (4, 4), (-4, 4), (1, 0), (0, 0)):
        assert CurveParams(c, d).is_degenerate()
        with pytest.raises(DegenerateFamily):
            search_supersingular(CurveParams(c, d), 5, 50)
    assert not CurveParams(6, 1).is_degenerate()


def test_singular_reduction():
    """Primes dividing the discriminant are rejected by count_points."""
    params = CurveParams(1, 2)  # c^2 - 4d = -7
    assert not params.is_elliptic_mod(7)
    with pytest.raises(SingularCurve):
        count_points(params, make_context(7))
    params = CurveParams(1, 7)  # d vanishes mod 7
    assert not params.is_elliptic_mod(7)
    with pytest.raises(SingularCurve):
        count_points(params, make_context(7))


def test_search_supersingular_cm_family():
    """(6, 1) has complex multiplication: hits are exactly p = 3 mod 4."""
    hits = search_supersingular(CurveParams(6, 1), 5, 100)
    assert hits == [p for p in primes_in(5, 100) if p % 4 == 3]
    assert hits == search_supersingular(CurveParams(6, 1), 5, 100, det_cap=0)


def test_search_supersingular_generic_family():
    """A family without CM still returns a nonempty sorted hit list."""
    hits = search_supersingular(CurveParams(1, 1), 5, 200, det_cap=0)
    assert hits == sorted(hits)
    assert hits == [7, 47, 191]
    ctx = make_context(47)
    assert char_trace(CurveParams(1, 1), ctx) == 0


def test_trace_euler_sum():
    """char_trace equals minus the character sum of the cubic values."""
    from legdet.arith import legendre

    for p in primes_in(5, 80):
        ctx = make_context(p)
        for c, d in ((1, 1), (3, 2)):
            params = CurveParams(c, d)
            if not params.is_elliptic_mod(p):
                continue
            s = sum(legendre(x * (d * x * x + c * x + 1), p) for x in range(p))
            assert char_trace(params, ctx) == -s

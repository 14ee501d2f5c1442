"""Exact modular arithmetic: primality, Legendre symbols, roots, and per-prime tables."""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import NonResidue, ZeroInput

# Deterministic Miller-Rabin witness set for all n < 3.3 * 10^24 (covers 64-bit).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@functools.cache
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int):
    """Yield primes p with lo <= p <= hi in increasing order."""
    if lo <= 2 <= hi:
        yield 2
    n = max(3, lo | 1)
    while n <= hi:
        if is_prime(n):
            yield n
        n += 2


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1 via quadratic reciprocity."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    _check_odd_prime(p)
    return jacobi(a, p)


def primitive_root(p: int) -> int:
    """Least primitive root mod p."""
    _check_odd_prime(p)
    n = p - 1
    factors = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            factors.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"no primitive root found for {p}")  # unreachable for prime p


def sqrt_mod(a: int, p: int) -> int:
    """Smaller square root of a mod p via Tonelli-Shanks."""
    _check_odd_prime(p)
    a %= p
    if a == 0:
        raise ZeroInput(f"square root of 0 mod {p} requested")
    if legendre(a, p) != 1:
        raise NonResidue(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)


def zolotarev_sign(a: int, p: int) -> int:
    """Sign of the permutation x -> a*x mod p on {0, ..., p-1} by cycle decomposition."""
    _check_odd_prime(p)
    a %= p
    if a == 0:
        raise ZeroInput(f"multiplication by 0 is not a permutation mod {p}")
    seen = bytearray(p)
    sign = 1
    for start in range(1, p):  # 0 is always fixed
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = x * a % p
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class PrimeContext:
    """Precomputed tables for one odd prime: generator, discrete logs, symbol lookup."""

    p: int
    xi: int
    index_table: tuple[int, ...]
    legendre_table: tuple[int, ...]

    def ind(self, a: int) -> int:
        """Discrete log of a to base xi; raises ZeroInput for a == 0 mod p."""
        a %= self.p
        if a == 0:
            raise ZeroInput(f"discrete log of 0 mod {self.p} requested")
        return self.index_table[a]

    def legendre(self, a: int) -> int:
        """Table-backed Legendre symbol (a/p)."""
        return self.legendre_table[a % self.p]


def make_context(p: int) -> PrimeContext:
    """Build the per-prime lookup tables in O(p)."""
    _check_odd_prime(p)
    xi = primitive_root(p)
    index = [0] * p
    power = 1
    for t in range(p - 1):
        index[power] = t
        power = power * xi % p
    table = [0] * p
    for a in range(1, p):
        table[a] = 1 if index[a] % 2 == 0 else -1
    return PrimeContext(p=p, xi=xi, index_table=tuple(index), legendre_table=tuple(table))

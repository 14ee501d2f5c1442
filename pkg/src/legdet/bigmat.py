"""Exact integer matrix determinants, circulant factorizations, and closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt, prod

import numpy as np

from .arith import is_prime
from .errors import NotASquare, SymmetryViolation

# Below this dimension fraction-free elimination beats the CRT engine.
_BAREISS_CUTOFF = 96
# numpy int64 paths are only safe when entries stay well below 2^63.
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square integer matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square and nonempty")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))


def is_perfect_square(n: int) -> tuple[bool, int]:
    """(True, isqrt(n)) when n is a perfect square, else (False, 0)."""
    if n < 0:
        return False, 0
    r = isqrt(n)
    return (True, r) if r * r == n else (False, 0)


def _det_bareiss(rows) -> int:
    """Fraction-free elimination; exact for arbitrary integer entries."""
    n = len(rows)
    if n == 1:
        return int(rows[0][0])
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][0] == 0:
            for i in range(k + 1, n):
                if a[i][0]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rowk = a[k]
        akk = rowk[0]
        m = n - k
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[0]
            if aik:
                a[i] = [(akk * rowi[j] - aik * rowk[j]) // prev for j in range(1, m)]
            else:
                a[i] = [(akk * rowi[j]) // prev for j in range(1, m)]
        prev = akk
    return sign * a[n - 1][0]


_CRT_PRIMES: list[int] = []


def _crt_primes(count: int) -> list[int]:
    """First `count` primes below 2^30, descending (cached)."""
    candidate = (_CRT_PRIMES[-1] - 2) if _CRT_PRIMES else (1 << 30) - 1
    while len(_CRT_PRIMES) < count:
        if is_prime(candidate):
            _CRT_PRIMES.append(candidate)
        candidate -= 2
    return _CRT_PRIMES[:count]


def _det_mod(a0: np.ndarray, q: int) -> int:
    """Determinant mod q by Gaussian elimination; entries stay below 2^60."""
    a = a0 % q
    n = a.shape[0]
    det = 1
    sign = 1
    for k in range(n):
        col = a[k:, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return 0
        piv = int(nz[0]) + k
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            sign = -sign
        akk = int(a[k, k])
        det = det * akk % q
        if k + 1 < n:
            inv = pow(akk, -1, q)
            factor = a[k + 1 :, k] * inv % q
            a[k + 1 :, k + 1 :] = (a[k + 1 :, k + 1 :] - factor[:, None] * a[k, k + 1 :]) % q
    return det * sign % q


def _kernel_vector_mod(a0: np.ndarray, q: int) -> np.ndarray | None:
    """A nonzero vector v with a0 @ v == 0 mod q, or None when a0 is invertible mod q."""
    a = a0 % q
    n = a.shape[0]
    pivcols: list[int] = []
    r = 0
    for c in range(n):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = int(nz[0]) + r
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, q)
        a[r, c:] = a[r, c:] * inv % q
        if r + 1 < n:
            factor = a[r + 1 :, c]
            a[r + 1 :, c:] = (a[r + 1 :, c:] - factor[:, None] * a[r, c:]) % q
        pivcols.append(c)
        r += 1
        if r == n:
            return None
    free = next(c for c in range(n) if c not in set(pivcols))
    v = np.zeros(n, dtype=np.int64)
    v[free] = 1
    for row in range(len(pivcols) - 1, -1, -1):
        c = pivcols[row]
        # products < 2^60 before the reduction, so the int64 sum is exact
        s = int((a[row, c + 1 :] * v[c + 1 :] % q).sum() % q)
        v[c] = (-s) % q
    return v


def _certify_zero(rows, v: np.ndarray, q: int) -> bool:
    """Exact-integer check that the lifted kernel vector annihilates the matrix."""
    lifted = [int(x) - q if x > q // 2 else int(x) for x in v]
    if all(x == 0 for x in lifted):
        return False
    n = len(rows)
    maxent = max((max(abs(x) for x in row) for row in rows), default=0)
    maxv = max(abs(x) for x in lifted)
    if maxent and maxv and maxent * maxv * n < _INT64_SAFE:
        arr = np.array(rows, dtype=np.int64)
        vec = np.array(lifted, dtype=np.int64)
        return not np.any(arr @ vec)
    return all(sum(r * x for r, x in zip(row, lifted)) == 0 for row in rows)


def _hadamard_bound(rows) -> int:
    """Product of row norms, rounded up; |det| never exceeds it."""
    bound = 1
    for row in rows:
        s = sum(x * x for x in row)
        if s == 0:
            return 0
        bound *= isqrt(s) + 1
    return bound


def _det_crt(rows, a: np.ndarray, bound: int, seed: list[tuple[int, int]]) -> int:
    """Chinese-remainder reconstruction of the determinant from 30-bit residues."""
    residues = dict(seed)
    m = prod(residues.keys(), start=1)
    idx = 0
    while m <= 2 * bound:
        idx += 1
        q = _crt_primes(idx)[-1]
        if q in residues:
            continue
        residues[q] = _det_mod(a, q)
        m *= q
    x = 0
    for q, r in residues.items():
        mq = m // q
        x = (x + r * mq * pow(mq, -1, q)) % m
    return x - m if x > m // 2 else x


def det_exact(matrix: IntMatrix) -> int:
    """Exact determinant; adaptive between fraction-free elimination and a CRT engine."""
    rows = matrix.rows
    n = matrix.n
    maxent = max(max(abs(x) for x in row) for row in rows)
    if n <= _BAREISS_CUTOFF or maxent >= _INT64_SAFE:
        return _det_bareiss(rows)
    bound = _hadamard_bound(rows)
    if bound == 0:
        return 0
    a = np.array(rows, dtype=np.int64)
    q0 = _crt_primes(1)[0]
    r0 = _det_mod(a, q0)
    if r0 == 0:
        v = _kernel_vector_mod(a, q0)
        if v is not None and _certify_zero(rows, v, q0):
            return 0
    return _det_crt(rows, a, bound, [(q0, r0)])


def circulant(coeffs) -> IntMatrix:
    """Circulant matrix whose (i, j) entry is coeffs[(i - j) mod m]."""
    a = [int(x) for x in coeffs]
    m = len(a)
    if m == 0:
        raise ValueError("need at least one coefficient")
    return IntMatrix.from_rows([[a[(i - j) % m] for j in range(m)] for i in range(m)])


@dataclass(frozen=True)
class SymmetricCirculantFactorization:
    """det = row_sum * alt_sum * square_part^2 (even m) or row_sum * square_part^2 (odd m)."""

    m: int
    det: int
    row_sum: int
    alt_sum: int | None
    square_part: int


def factor_symmetric_circulant(coeffs) -> SymmetricCirculantFactorization:
    """Factor det(circulant(a)) for a symmetric tuple (a[i] == a[m-i])."""
    a = [int(x) for x in coeffs]
    m = len(a)
    for i in range(1, m):
        if a[i] != a[m - i]:
            raise SymmetryViolation(f"coefficient {i} breaks a[i] == a[m - i]")
    det = det_exact(circulant(a))
    row_sum = sum(a)
    alt_sum = sum(x if i % 2 == 0 else -x for i, x in enumerate(a)) if m % 2 == 0 else None
    known = row_sum * alt_sum if m % 2 == 0 else row_sum
    if known == 0:
        if det != 0:
            raise NotASquare(f"det {det} nonzero but known factor vanishes")
        square = 0
    else:
        if det % known:
            raise NotASquare(f"det {det} not divisible by known factor {known}")
        quotient = det // known
        ok, root = is_perfect_square(quotient)
        if not ok:
            raise NotASquare(f"quotient {quotient} is not a perfect square")
        square = root
    return SymmetricCirculantFactorization(
        m=m, det=det, row_sum=row_sum, alt_sum=alt_sum, square_part=square
    )


def elementary_symmetric(values) -> list[int]:
    """All elementary symmetric polynomials e_0..e_n of the given integers."""
    e = [1]
    for v in values:
        e.append(0)
        for k in range(len(e) - 1, 0, -1):
            e[k] += e[k - 1] * v
    return e


def det_power_matrix(x, y) -> int:
    """Exact determinant of the m x m matrix [(x_i + y_j)^m] via closed form."""
    xs = [int(v) for v in x]
    ys = [int(v) for v in y]
    if len(xs) != len(ys) or not xs:
        raise ValueError("need two integer tuples of equal positive length")
    m = len(xs)
    ex = elementary_symmetric(xs)
    ey = elementary_symmetric(ys)
    s = sum(Fraction(ex[k] * ey[m - k], comb(m, k)) for k in range(m + 1))
    vand = prod((xs[j] - xs[i]) * (ys[j] - ys[i]) for i in range(m) for j in range(i + 1, m))
    binoms = prod(comb(m, r) for r in range(m + 1))
    total = Fraction((-1) ** (m * (m - 1) // 2) * vand * binoms) * s
    if total.denominator != 1:
        raise ArithmeticError("closed form must be integral")  # unreachable
    return int(total)

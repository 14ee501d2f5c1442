"""Character sums: Jacobsthal sums, multiplicative-character spectra, trinomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .arith import PrimeContext
from .errors import CongruenceMismatch
from .report import VerificationReport

FAMILIES = ("full", "quartic", "sextic")


def jacobsthal_phi(k: int, ctx: PrimeContext) -> int:
    """phi_k = sum over nonzero x of (x/p) * ((x^k + 1)/p)."""
    p = ctx.p
    tbl = ctx.legendre_table
    return sum(tbl[x] * tbl[(pow(x, k, p) + 1) % p] for x in range(1, p))


def jacobsthal_psi(k: int, ctx: PrimeContext) -> int:
    """psi_k = sum over nonzero x of ((x^k + 1)/p)."""
    p = ctx.p
    tbl = ctx.legendre_table
    return sum(tbl[(pow(x, k, p) + 1) % p] for x in range(1, p))


@dataclass(frozen=True)
class EigenSpectrum:
    """Eigenvalues of one symbol-matrix family, indexed 1..N with exact distinguished entries."""

    p: int
    family: str
    c: int | None
    values: tuple[complex, ...]
    exact: dict[int, int]

    @property
    def n(self) -> int:
        return len(self.values)


def _dft_values(coeffs: list[int]) -> list[complex]:
    """values[k-1] = sum_t coeffs[t] * exp(2*pi*i*k*t/N) for k = 1..N."""
    n = len(coeffs)
    vals = np.fft.ifft(np.array(coeffs, dtype=np.float64)) * n
    return [complex(vals[k % n]) for k in range(1, n + 1)]


def spectrum(family: str, ctx: PrimeContext, c: int | None = None) -> EigenSpectrum:
    """Closed-form eigenvalue list for the circulant model of one matrix family."""
    p = ctx.p
    tbl = ctx.legendre_table
    if family == "full":
        if c is None:
            raise ValueError("family 'full' requires parameter c")
        n = p - 1
        step = ctx.xi
        coeffs = []
        w = 1
        for _ in range(n):
            coeffs.append(tbl[(1 + c * w + w * w) % p])
            w = w * step % p
    elif family in ("quartic", "sextic"):
        if c is not None:
            raise ValueError(f"family {family!r} takes no parameter")
        k = 4 if family == "quartic" else 6
        if p % k != 1:
            raise CongruenceMismatch(f"p = {p} is not 1 mod {k}")
        n = (p - 1) // k
        step = pow(ctx.xi, k, p)
        coeffs = []
        w = 1
        for _ in range(n):
            coeffs.append(tbl[(1 + w) % p])
            w = w * step % p
    else:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    values = _dft_values(coeffs)
    exact = {n: sum(coeffs)}
    if n % 2 == 0:
        exact[n // 2] = sum(v if t % 2 == 0 else -v for t, v in enumerate(coeffs))
    for k, v in exact.items():
        values[k - 1] = complex(v)
    return EigenSpectrum(p=p, family=family, c=c, values=tuple(values), exact=dict(exact))


def _convolve_mod(a: list[int], b: list[int], p: int, cap: int) -> list[int]:
    out = [0] * min(len(a) + len(b) - 1, cap)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if i + j >= cap:
                    break
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def trinomial_coeff_mod(c: int, d: int, ctx: PrimeContext) -> int:
    """Coefficient of x^((p-1)/2) in (d*x^2 + c*x + 1)^((p-1)/2) mod p."""
    p = ctx.p
    n = (p - 1) // 2
    cap = n + 1
    if p < (1 << 21):
        # int64 is exact here: convolution sums stay below cap * p^2 < 2^63
        base = np.array([1, c % p, d % p], dtype=np.int64)
        result = np.array([1], dtype=np.int64)
        e = n
        while e:
            if e & 1:
                result = np.convolve(result, base)[:cap] % p
            e >>= 1
            if e:
                base = np.convolve(base, base)[:cap] % p
        return int(result[n]) if len(result) > n else 0
    base_l = [1, c % p, d % p]
    result_l = [1]
    e = n
    while e:
        if e & 1:
            result_l = _convolve_mod(result_l, base_l, p, cap)
        e >>= 1
        if e:
            base_l = _convolve_mod(base_l, base_l, p, cap)
    return result_l[n] if len(result_l) > n else 0


def symfunc_congruence_check(ctx: PrimeContext) -> VerificationReport:
    """Congruences for the elementary symmetric functions of r^2 + r, r = 1..(p-1)/2."""
    p = ctx.p
    n = (p - 1) // 2
    values = [(r * r + r) % p for r in range(1, n + 1)]
    # poly[k] = coefficient of X^k in prod (X - v_r) mod p
    poly = [1]
    for v in values:
        nxt = [0] * (len(poly) + 1)
        for k, coef in enumerate(poly):
            nxt[k + 1] = (nxt[k + 1] + coef) % p
            nxt[k] = (nxt[k] - coef * v) % p
        poly = nxt
    sigma = [(-1) ** k * poly[n - k] % p for k in range(n + 1)]
    top_ok = sigma[n] % p == ((-1) ** n * n) % p
    bad_sigma = [
        k
        for k in range(n)
        if sigma[k] % p != ((-1) ** k * pow(4, n - k, p) * comb(n + 1, k)) % p
    ]
    # identity route: ((4X+1)^n - 1)(4X+1)/(4X) coefficientwise against prod (X - v_r)
    binom = [comb(n, k) * pow(4, k, p) % p for k in range(n + 1)]  # (4X+1)^n
    binom[0] = (binom[0] - 1) % p
    shifted = [0] * (n + 2)
    for k, coef in enumerate(binom):  # multiply by (4X+1)
        shifted[k] = (shifted[k] + coef) % p
        shifted[k + 1] = (shifted[k + 1] + 4 * coef) % p
    inv4 = pow(4, p - 2, p)
    rhs = [shifted[k + 1] * inv4 % p for k in range(n + 1)]  # divide by 4X
    identity_ok = shifted[0] % p == 0 and all(poly[k] % p == rhs[k] for k in range(n + 1))
    ok = top_ok and not bad_sigma and identity_ok
    return VerificationReport(
        theorem_id="symfunc-congruence",
        p=p,
        computed={
            "n": n,
            "top_ok": top_ok,
            "bad_sigma_indices": bad_sigma,
            "identity_ok": identity_ok,
        },
        verdict="pass" if ok else "fail",
        reason=None if ok else "congruence mismatch",
    )

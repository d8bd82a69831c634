"""Partition-sum coefficients of the reduced moment polynomial.

``series_coeff(p, k, n)`` is the coefficient of zeta^p in the reduced
moment polynomial at matrix size n, normalized by the zeroth moment, and
``series_coeff_limit(p, k)`` is its scaled large-n limit.  Both are sums
over partitions of p into at most k parts and are kept exactly rational
so the identities in this module can serve as exact self-checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import hook_product, partitions_of, pochhammer


@lru_cache(maxsize=None)
def series_coeff(p: int, k: int, n: int) -> Fraction:
    """Finite-size series coefficient: (-2)^p sum of [k][-n] / ([2k] h^2).

    The sum runs over partitions of p into at most k parts.  Returns 0 when
    p > k*n: every admissible partition would need a part larger than n,
    which kills the [-n] factor.
    """
    if p < 0 or k < 1 or n < 1:
        raise ValueError(f"need p >= 0, k >= 1, n >= 1, got {(p, k, n)}")
    if p > k * n:
        return Fraction(0)
    total = Fraction(0)
    for lam in partitions_of(p, k):
        numer = pochhammer(k, lam) * pochhammer(-n, lam)
        denom = pochhammer(2 * k, lam) * hook_product(lam) ** 2
        total += Fraction(numer, denom)
    return (-2) ** p * total


@lru_cache(maxsize=None)
def series_coeff_limit(p: int, k: int) -> Fraction:
    """Limiting series coefficient: 2^p sum of [k] / ([2k] h^2) over the same partitions."""
    if p < 0 or k < 1:
        raise ValueError(f"need p >= 0 and k >= 1, got {(p, k)}")
    total = Fraction(0)
    for lam in partitions_of(p, k):
        numer = pochhammer(k, lam)
        denom = pochhammer(2 * k, lam) * hook_product(lam) ** 2
        total += Fraction(numer, denom)
    return 2 ** p * total


def series_coeff_closed(p: int, k: int) -> Fraction:
    """Closed form of the limiting coefficient, available for k in {1, 2} only."""
    if p < 0:
        raise ValueError(f"need p >= 0, got {p}")
    if k == 1:
        return Fraction(2 ** p, factorial(p) * factorial(p + 1))
    if k == 2:
        return Fraction(
            12 * factorial(2 * p + 4) * 2 ** p,
            factorial(p) * factorial(p + 2) * factorial(p + 3) * factorial(p + 4),
        )
    raise ValueError(f"no closed form for k={k}; the factorial pattern holds for k in {{1, 2}} only")


def series_coeff_bound(p: int, k: int, n: int) -> Fraction:
    """Upper bound for |series_coeff(p, k, n)|, valid for p >= 2.

    Equals (n^p / p!) (1 + k/n)^p (2k)^p (2k-1)! / (2k - 1 + floor(p/k))!.
    Callers handle the p in {0, 1} terms exactly instead.
    """
    if p < 2:
        raise ValueError(f"bound is only established for p >= 2, got p={p}")
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got {(k, n)}")
    return (
        Fraction(n ** p, factorial(p))
        * Fraction(n + k, n) ** p
        * (2 * k) ** p
        * Fraction(factorial(2 * k - 1), factorial(2 * k - 1 + p // k))
    )


def binomial_residual(two_h: int, k: int, n: int) -> Fraction:
    """Alternating binomial-weighted sum of finite-size coefficients.

    Identically zero for odd two_h with two_h <= 2k; computing it is an
    exact self-check of the coefficient machinery.
    """
    if two_h < 1 or two_h % 2 == 0:
        raise ValueError(f"two_h must be an odd positive integer, got {two_h}")
    if two_h > 2 * k:
        raise ValueError(f"need two_h <= 2k, got two_h={two_h}, k={k}")
    total = Fraction(0)
    for p in range(two_h + 1):
        total += comb(two_h, p) * series_coeff(p, k, n) * Fraction(factorial(p), (-n) ** p)
    return total


def hook_content_sum(p: int, k: int) -> Fraction:
    """Brute-force sum of [k] / h^2 over all partitions of p; equals k^p / p!."""
    if p < 0 or k < 1:
        raise ValueError(f"need p >= 0 and k >= 1, got {(p, k)}")
    total = Fraction(0)
    for lam in partitions_of(p, max(p, 1)):
        total += Fraction(pochhammer(k, lam), hook_product(lam) ** 2)
    return total


def alternating_binomial_sum(p: int, n: int) -> int:
    """Alternating product-of-binomials sum; equals 1 whenever p >= n + 1."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if p <= n:
        raise ValueError(f"need p >= n + 1, got p={p}, n={n}")
    return sum((-1) ** ell * comb(p, n - ell) * comb(p - n + ell - 1, ell) for ell in range(n + 1))


def two_row_partition_sum(p: int) -> Fraction:
    """Factorial sum over two-row partition shapes underlying the k=2 closed form.

    Equals 2 * binom(2p+4, p) / ((p+2)! (p+3)!).
    """
    if p < 0:
        raise ValueError(f"need p >= 0, got {p}")
    total = Fraction(0)
    for x in range(p + 2):
        total += Fraction(
            (p - 2 * x + 1) ** 2,
            factorial(x) * factorial(x + 2) * factorial(p - x + 3) * factorial(p - x + 1),
        )
    return total

"""Joint moments of the unitary characteristic polynomial and its derivative.

The moment of order (two_h, k) at matrix size n is the CUE average of
|V|^(2k - two_h) |V'|^two_h, where V is the phase-rotated characteristic
polynomial at angle 0.  Even two_h gives an exact rational; odd two_h
gives an exact rational multiple of 1/pi, carried symbolically by
:class:`ExactScalar`.  The large-n limits (after dividing by n^(k^2 + two_h))
are exact rationals for even two_h and controlled truncations for odd two_h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .coefficients import series_coeff, series_coeff_closed, series_coeff_limit


@dataclass(frozen=True)
class MomentOrder:
    """Moment order (two_h, k) with h = two_h / 2.

    Admissibility requires 2k + 1 > two_h; h is always carried doubled so
    that parity, which decides between the even and odd formulas, is never
    subject to floating point.
    """

    two_h: int
    k: int

    def __post_init__(self) -> None:
        if self.two_h < 0:
            raise ValueError(f"two_h must be non-negative, got {self.two_h}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if 2 * self.k + 1 <= self.two_h:
            raise ValueError(
                f"inadmissible order: need 2k + 1 > two_h, got two_h={self.two_h}, k={self.k}"
            )

    @property
    def is_half_integer(self) -> bool:
        return self.two_h % 2 == 1


@dataclass(frozen=True)
class ExactScalar:
    """Exact real value q * pi^pi_exp with rational q and pi_exp in {0, -1}."""

    q: Fraction
    pi_exp: int = 0

    def __post_init__(self) -> None:
        if self.pi_exp not in (0, -1):
            raise ValueError(f"pi_exp must be 0 or -1, got {self.pi_exp}")
        object.__setattr__(self, "q", Fraction(self.q))

    def to_float(self) -> float:
        value = float(self.q)
        return value / math.pi if self.pi_exp == -1 else value

    def __str__(self) -> str:
        if self.pi_exp == 0:
            return str(self.q)
        if self.q.denominator == 1:
            return f"{self.q.numerator}/pi"
        return f"{self.q.numerator}/({self.q.denominator}*pi)"


@dataclass(frozen=True)
class LimitResult:
    """Truncated limit evaluation with a certified truncation bound."""

    value: float
    tail_bound: float
    terms_used: int


def keating_snaith(n: int, k: int) -> Fraction:
    """Zeroth moment at size n: the product of (j-1)! (j+2k-1)! / ((j+k-1)!)^2."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got {(n, k)}")
    numer = 1
    denom = 1
    for j in range(1, n + 1):
        numer *= factorial(j - 1) * factorial(j + 2 * k - 1)
        denom *= factorial(j + k - 1) ** 2
    return Fraction(numer, denom)


def moment_integer_h(n: int, h: int, k: int) -> Fraction:
    """Joint moment for integer h >= 1, exact rational.

    Requires k >= h.  Evaluates the zeroth moment times the degree-2h
    binomial recombination of the finite-size series coefficients.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if h < 1:
        raise ValueError(f"h must be a positive integer, got {h}; use keating_snaith for h = 0")
    if k < h:
        raise ValueError(f"inadmissible order: need k >= h, got h={h}, k={k}")
    two_h = 2 * h
    total = Fraction(0)
    for p in range(two_h + 1):
        total += (
            Fraction(factorial(two_h), factorial(two_h - p))
            * (-n) ** (two_h - p)
            * series_coeff(p, k, n)
        )
    return Fraction((-1) ** h, 2 ** two_h) * keating_snaith(n, k) * total


def moment_half_h(n: int, two_h: int, k: int) -> ExactScalar:
    """Joint moment for half-integer h = two_h / 2 with two_h odd.

    Returns an exact rational multiple of 1/pi.  Requires 2k + 1 > two_h.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if two_h % 2 == 0:
        raise ValueError(f"two_h must be odd, got {two_h}; use moment_integer_h")
    order = MomentOrder(two_h, k)
    first = Fraction(0)
    for p in range(1, two_h + 1):
        coeff = series_coeff(p, k, n)
        for ell in range(1, p + 1):
            first += (
                comb(two_h, p - ell)
                * Fraction((-1) ** ell, ell)
                * (-n) ** (two_h - p)
                * factorial(p)
                * coeff
            )
    second = Fraction(0)
    for p in range(two_h + 1, k * n + 1):
        second += (
            Fraction(factorial(two_h) * factorial(p - two_h - 1), n ** (p - two_h))
            * series_coeff(p, k, n)
        )
    m = (two_h + 1) // 2  # h + 1/2
    prefactor = Fraction(2 * (-1) ** m, 2 ** two_h) * keating_snaith(n, order.k)
    return ExactScalar(prefactor * (first + second), pi_exp=-1)


def half_moment_k1_closed(n: int) -> ExactScalar:
    """Elementary closed form of the (two_h, k) = (1, 1) moment at size n.

    A plain binomial sum, independent of the partition machinery, so it
    doubles as an exact oracle for :func:`moment_half_h`.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = Fraction(0)
    for j in range(n):
        total += comb(n + 2, j + 3) * Fraction(2 ** j, n ** (j + 1))
    return ExactScalar(2 * total, pi_exp=-1)


def limit_moment_zero(k: int) -> Fraction:
    """Scaled limit of the zeroth moment: the product of (j-1)! / (k+j-1)!."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    numer = 1
    denom = 1
    for j in range(1, k + 1):
        numer *= factorial(j - 1)
        denom *= factorial(k + j - 1)
    return Fraction(numer, denom)


def limit_moment_integer_h(h: int, k: int) -> Fraction:
    """Scaled limit of the integer-h moment, exact rational.  Requires k >= h."""
    if h < 1:
        raise ValueError(f"h must be a positive integer, got {h}")
    if k < h:
        raise ValueError(f"inadmissible order: need k >= h, got h={h}, k={k}")
    two_h = 2 * h
    total = Fraction(0)
    for p in range(two_h + 1):
        total += (
            Fraction(factorial(two_h), factorial(two_h - p))
            * (-1) ** (two_h - p)
            * series_coeff_limit(p, k)
        )
    return Fraction((-1) ** h, 2 ** two_h) * limit_moment_zero(k) * total


_LIMIT_MAX_TERMS = 10_000


def limit_moment_half_h(two_h: int, k: int, tol: float) -> LimitResult:
    """Scaled limit of the half-integer moment, truncated to tolerance ``tol``.

    The infinite part has positive terms t_p = two_h! (p - two_h - 1)! c_p
    with limiting coefficients c_p decaying super-exponentially.  Summation
    stops at the first p >= two_h + 2k + 4 where t_p < tol/2 and the terms
    have started at least halving; a geometric majorant then bounds the
    dropped tail by 2 t_p.  All retained terms are summed in exact rational
    arithmetic, so the reported value carries no roundoff beyond the final
    conversion to float.
    """
    if two_h % 2 == 0 or two_h < 1:
        raise ValueError(f"two_h must be an odd positive integer, got {two_h}")
    order = MomentOrder(two_h, k)
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")

    # Closed forms exist for k in {1, 2}; otherwise enumerate partitions.
    coeff = series_coeff_closed if k in (1, 2) else series_coeff_limit

    first = Fraction(0)
    for p in range(1, two_h + 1):
        c = coeff(p, k)
        for ell in range(1, p + 1):
            first += (
                comb(two_h, p - ell)
                * Fraction((-1) ** (ell + two_h - p), ell)
                * factorial(p)
                * c
            )

    total = first
    settle_floor = two_h + 2 * order.k + 4
    half_tol = Fraction(tol) / 2
    previous_term: Fraction | None = None
    terms_used = 0
    p = two_h + 1
    while True:
        term = factorial(two_h) * factorial(p - two_h - 1) * coeff(p, k)
        total += term
        terms_used += 1
        if (
            p >= settle_floor
            and term < half_tol
            and previous_term is not None
            and 2 * term < previous_term
        ):
            break
        if terms_used > _LIMIT_MAX_TERMS:
            raise RuntimeError(f"tolerance {tol} not reached within {_LIMIT_MAX_TERMS} terms")
        previous_term = term
        p += 1

    m = (two_h + 1) // 2
    prefactor = Fraction(2 * (-1) ** m, 2 ** two_h) * limit_moment_zero(k)
    value = float(prefactor * total) / math.pi
    tail_bound = float(abs(prefactor) * 2 * term) / math.pi
    return LimitResult(value=value, tail_bound=tail_bound, terms_used=terms_used)

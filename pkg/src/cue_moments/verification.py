"""Exact identity suites used by the CLI ``verify`` command.

Each suite runs an identity that must hold exactly in rational arithmetic
and reports how many cases were checked and how many failed.  A correct
build fails nowhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from .coefficients import (
    alternating_binomial_sum,
    binomial_residual,
    hook_content_sum,
    series_coeff,
    series_coeff_bound,
    series_coeff_closed,
    series_coeff_limit,
    two_row_partition_sum,
)
from .moments import half_moment_k1_closed, moment_half_h
from .partitions import hook_product, partitions_of, pochhammer, transpose
from .specfun import moment_gen_hankel, moment_gen_series, moment_gen_wronskian


@dataclass(frozen=True)
class CheckResult:
    name: str
    checks: int
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _run(name: str, cases: Iterable[bool]) -> CheckResult:
    checks = 0
    failures = 0
    for ok in cases:
        checks += 1
        if not ok:
            failures += 1
    return CheckResult(name=name, checks=checks, failures=failures)


def check_transpose_identities(max_weight: int = 12) -> CheckResult:
    bases = (-3, -1, Fraction(1, 2), 2)
    def cases():
        for w in range(max_weight + 1):
            for lam in partitions_of(w, max(w, 1)):
                lam_t = transpose(lam)
                yield hook_product(lam_t) == hook_product(lam)
                for b in bases:
                    yield pochhammer(b, lam_t) == (-1) ** w * pochhammer(-b, lam)
    return _run("transpose-identities", cases())


def check_hook_content_sums(max_p: int = 20, max_k: int = 4) -> CheckResult:
    return _run(
        "hook-content-sums",
        (
            hook_content_sum(p, k) == Fraction(k ** p, factorial(p))
            for p in range(max_p + 1)
            for k in range(1, max_k + 1)
        ),
    )


def check_binomial_residuals(max_n: int = 10) -> CheckResult:
    def cases():
        for two_h in (1, 3, 5):
            for k in (1, 2, 3):
                if two_h > 2 * k:
                    continue
                for n in range(1, max_n + 1):
                    yield binomial_residual(two_h, k, n) == 0
    return _run("vanishing-residuals", cases())


def check_alternating_binomial_sums(max_p: int = 25) -> CheckResult:
    return _run(
        "alternating-binomial-sums",
        (
            alternating_binomial_sum(p, n) == 1
            for p in range(1, max_p + 1)
            for n in range(p)
        ),
    )


def check_two_row_sums(max_p: int = 25) -> CheckResult:
    return _run(
        "two-row-partition-sums",
        (
            two_row_partition_sum(p)
            == Fraction(2 * comb(2 * p + 4, p), factorial(p + 2) * factorial(p + 3))
            for p in range(max_p + 1)
        ),
    )


def check_coeff_bounds(max_p: int = 20, max_k: int = 3, sizes: tuple[int, ...] = (1, 5, 25)) -> CheckResult:
    return _run(
        "coefficient-bounds",
        (
            abs(series_coeff(p, k, n)) <= series_coeff_bound(p, k, n)
            for p in range(2, max_p + 1)
            for k in range(1, max_k + 1)
            for n in sizes
        ),
    )


def check_closed_forms(max_p: int = 30) -> CheckResult:
    return _run(
        "closed-form-coefficients",
        (
            series_coeff_limit(p, k) == series_coeff_closed(p, k)
            for p in range(max_p + 1)
            for k in (1, 2)
        ),
    )


def check_three_route_identity(
    max_k: int = 4,
    max_n: int = 8,
    zetas: tuple[Fraction, ...] = (Fraction(0), Fraction(1, 3), Fraction(1), Fraction(7, 2)),
) -> CheckResult:
    def cases():
        for k in range(1, max_k + 1):
            for n in range(1, max_n + 1):
                for z in zetas:
                    w = moment_gen_wronskian(k, n, z)
                    yield w == moment_gen_hankel(k, n, z)
                    yield w == moment_gen_series(k, n, z)
    return _run("three-route-identity", cases())


def check_half_moment_closed_form(max_n: int = 50) -> CheckResult:
    return _run(
        "half-moment-closed-form",
        (moment_half_h(n, 1, 1) == half_moment_k1_closed(n) for n in range(1, max_n + 1)),
    )


ALL_CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_transpose_identities,
    check_hook_content_sums,
    check_binomial_residuals,
    check_alternating_binomial_sums,
    check_two_row_sums,
    check_coeff_bounds,
    check_closed_forms,
    check_three_route_identity,
    check_half_moment_closed_form,
)


def run_all_checks() -> list[CheckResult]:
    """Run every exact identity suite and collect the results."""
    return [check() for check in ALL_CHECKS]

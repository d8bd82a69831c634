"""Numerical ground truth, independent of the exact formulas.

Two oracles live here: a Monte Carlo estimator of the joint moments over
Haar-random unitaries, and a direct adaptive quadrature of the defining
Fourier-weighted moment integral at matrix sizes 1 and 2.  Neither touches
the partition machinery, so agreement with the exact modules is a real
cross-check rather than a tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .moments import MomentOrder
from .specfun import moment_gen_series

_MASK64 = (1 << 64) - 1
_SIN_POLE_THRESHOLD = 1e-300


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to converge within its subdivision budget."""


@dataclass(frozen=True)
class PhaseSample:
    """Sorted eigenphases of one Haar-random unitary, all in [0, 2*pi)."""

    thetas: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.thetas) < 1:
            raise ValueError("need at least one eigenphase")


@dataclass(frozen=True)
class MCEstimate:
    """Monte Carlo sample mean with standard error and reproducibility data."""

    mean: float
    stderr: float
    trials: int
    seed: int
    redraws: int = 0


def sample_cue_phases(n: int, stream: np.random.Generator) -> PhaseSample:
    """Eigenphases of a Haar-distributed n x n unitary matrix.

    Orthonormalizes a complex Ginibre matrix by QR and fixes the phases of
    the R diagonal, which makes the factorization unique and the Q factor
    exactly Haar.  Numerical failures (zero diagonal, eigensolver breakdown)
    are raised, never silently retried with a different distribution.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    z = stream.standard_normal((n, n)) + 1j * stream.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    if np.any(d == 0):
        raise ArithmeticError("orthonormalization breakdown: zero diagonal in QR factor")
    q = q * (d / np.abs(d))
    phases = np.sort(np.angle(np.linalg.eigvals(q)) % (2.0 * math.pi))
    return PhaseSample(tuple(float(t) for t in phases))


def v_values(phases: PhaseSample) -> tuple[float, float]:
    """|V| and |V'| at angle zero for one eigenphase sample.

    |V| is the product of 2|sin(theta/2)| and |V'| equals
    |V| * |sum cot(theta/2)| / 2.  An eigenphase at the cotangent pole
    (sin(theta/2) below 1e-300) raises ValueError so the caller can redraw.
    """
    half = np.asarray(phases.thetas) / 2.0
    s = np.sin(half)
    if np.any(np.abs(s) < _SIN_POLE_THRESHOLD):
        raise ValueError("cotangent pole: eigenphase too close to 0 or 2*pi")
    abs_v = float(np.prod(2.0 * np.abs(s)))
    cot_sum = float(np.sum(np.cos(half) / s))
    return abs_v, abs_v * 0.5 * abs(cot_sum)


def _trial_generator(seed: int, trial: int) -> np.random.Generator:
    # Counter-based substream keyed by (seed, trial index): independent
    # streams per trial, identical across runs and worker layouts.
    return np.random.Generator(np.random.Philox(key=[seed & _MASK64, trial]))


def mc_moment(
    n: int,
    two_h: int,
    k: int,
    trials: int,
    seed: int,
    batch_size: int = 4096,
) -> MCEstimate:
    """Monte Carlo estimate of the joint moment of order (two_h, k) at size n.

    Averages |V|^(2k - two_h) |V'|^two_h over independent Haar samples.
    Trial t draws from its own counter-based substream keyed by
    (seed, t), so the estimate is bit-identical for fixed (seed, trials)
    no matter how trials are batched or scheduled.  Samples hitting the
    cotangent pole are redrawn from the same substream and counted.
    """
    order = MomentOrder(two_h, k)
    if trials < 2:
        raise ValueError(f"need trials >= 2 for a standard error, got {trials}")
    if batch_size < 1:
        raise ValueError(f"batch_size must be positive, got {batch_size}")
    a = 2 * order.k - order.two_h
    values = np.empty(trials)
    redraws = 0
    start = 0
    while start < trials:
        b = min(batch_size, trials - start)
        gens = [_trial_generator(seed, start + i) for i in range(b)]
        z = np.empty((b, n, n), dtype=complex)
        for i, g in enumerate(gens):
            z[i] = g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))
        q, r = np.linalg.qr(z)
        d = np.diagonal(r, axis1=1, axis2=2)
        if np.any(d == 0):
            raise ArithmeticError("orthonormalization breakdown: zero diagonal in QR factor")
        q = q * (d / np.abs(d))[:, None, :]
        half = (np.angle(np.linalg.eigvals(q)) % (2.0 * math.pi)) / 2.0
        s = np.sin(half)
        flagged = np.abs(s).min(axis=1) < _SIN_POLE_THRESHOLD
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            abs_v = np.prod(2.0 * np.abs(s), axis=1)
            abs_vp = abs_v * 0.5 * np.abs(np.sum(np.cos(half) / s, axis=1))
            values[start:start + b] = abs_v ** a * abs_vp ** two_h
        for i in np.nonzero(flagged)[0]:
            while True:
                redraws += 1
                try:
                    av, avp = v_values(sample_cue_phases(n, gens[i]))
                    break
                except ValueError:
                    continue
            values[start + i] = av ** a * avp ** two_h
        start += b
    mean = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(trials))
    return MCEstimate(mean=mean, stderr=stderr, trials=trials, seed=seed, redraws=redraws)


def _adaptive_simpson(f, a: float, b: float, tol: float, budget: list[int]) -> float:
    # Budget is a single-element list so recursion can decrement it in place.
    fa, fb = f(a), f(b)
    mid = 0.5 * (a + b)
    fm = f(mid)
    budget[0] -= 3
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(f, a, b, fa, fm, fb, whole, tol, budget, depth=0)


def _simpson_rec(f, a, b, fa, fm, fb, whole, tol, budget, depth) -> float:
    if budget[0] <= 0:
        raise QuadratureError("subdivision budget exhausted before reaching tolerance")
    mid = 0.5 * (a + b)
    lm = 0.5 * (a + mid)
    rm = 0.5 * (mid + b)
    flm = f(lm)
    frm = f(rm)
    budget[0] -= 2
    left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if depth >= 48 or abs(delta) <= 15.0 * tol:
        # Richardson extrapolation of the two Simpson estimates.
        return left + right + delta / 15.0
    return _simpson_rec(f, a, mid, fa, flm, fm, left, tol / 2.0, budget, depth + 1) + _simpson_rec(
        f, mid, b, fm, frm, fb, right, tol / 2.0, budget, depth + 1
    )


def _weight_integral(k: int, n: int, zeta: float, moment: int, kind: str, tol: float, budget) -> float:
    # 1-d integral of x^moment {cos|sin}(zeta x) / (1 + x^2)^(n + k) after
    # the substitution x = tan(u), which maps the line to (-pi/2, pi/2) and
    # turns the weight into cos(u)^(2n + 2k - 2 - moment) damping.
    exponent = 2 * (n + k) - 2
    osc = math.cos if kind == "cos" else math.sin
    def f(u: float) -> float:
        c = math.cos(u)
        if c == 0.0:
            return 0.0
        x = math.tan(u)
        return x ** moment * osc(zeta * x) * c ** exponent
    return _adaptive_simpson(f, -math.pi / 2.0, math.pi / 2.0, tol, budget)


def quad_moment_integral(k: int, zeta: float, n: int, tol: float, max_evals: int = 20_000_000) -> float:
    """Direct quadrature of the defining moment integral at matrix size 1 or 2.

    Integrates prod_j e^(i zeta x_j) (1 + x_j^2)^(-(n+k)) times the squared
    Vandermonde over the real line per coordinate (the imaginary part
    vanishes by symmetry).  For n = 2 the squared Vandermonde
    (x2 - x1)^2 = x1^2 - 2 x1 x2 + x2^2 splits the double integral into
    products of one-dimensional integrals of x^m cos/sin(zeta x) against the
    weight.  Raises QuadratureError when the subdivision budget runs out.
    """
    if n not in (1, 2):
        raise ValueError(f"direct quadrature supports n in {{1, 2}}, got {n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    budget = [max_evals]
    if n == 1:
        return _weight_integral(k, 1, zeta, 0, "cos", tol, budget)
    # Sub-integral errors enter through two products; tol/32 per piece keeps
    # the combined error comfortably below tol for these bounded factors.
    piece_tol = tol / 32.0
    even = _weight_integral(k, 2, zeta, 0, "cos", piece_tol, budget)
    odd = _weight_integral(k, 2, zeta, 1, "sin", piece_tol, budget)
    square = _weight_integral(k, 2, zeta, 2, "cos", piece_tol, budget)
    return 2.0 * (even * square + odd * odd)


def closed_form_moment_integral(k: int, zeta: float, n: int) -> float:
    """The same integral reconstituted from the exact reduced polynomial.

    Multiplies the reduced moment polynomial by its transcendental
    prefactor pi^n n! 2^(-(n+2k-1)n) e^(-n|zeta|) in floating point.
    """
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got {(k, n)}")
    z = abs(zeta)
    reduced = moment_gen_series(k, n, Fraction(z))
    prefactor = (
        math.pi ** n
        * math.factorial(n)
        * 2.0 ** (-(n + 2 * k - 1) * n)
        * math.exp(-n * z)
    )
    return prefactor * float(reduced)

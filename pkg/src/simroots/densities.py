"""Density constants and main terms.

Sums over primes use ``math.fsum`` (exactly rounded) on float64 terms, or
``Fraction`` arithmetic when ``exact=True``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arith import DomainError, primes_up_to, totient_table
from .counting import count_pi_f, simultaneous_spectrum
from .poly import IntPolynomial
from .roots import PrimeContext

ARTIN_CONSTANT = 0.37395581361920228805
EULER_GAMMA = 0.57721566490153286061


def log_integral(x: float) -> float:
    """li(x) for x >= 2 from gamma + ln ln x + sum (ln x)^n / (n * n!)."""
    if x < 2:
        raise DomainError("log_integral needs x >= 2")
    L = math.log(x)
    terms = [EULER_GAMMA, math.log(L)]
    power = 1.0  # L^n / n!
    running = 0.0
    n = 1
    while True:
        power *= L / n
        t = power / n
        terms.append(t)
        running += t
        if n > L and t < 1e-18 * running:
            break
        n += 1
    return math.fsum(terms)


def artin_product(bound: int) -> tuple[float, float]:
    """Partial Euler product of (1 - 1/(p(p-1))) over p <= bound.

    The second value bounds ``value - true_constant`` from above, using
    sum_{p > bound} 1/(p(p-1)) < 1/bound.
    """
    if bound < 2:
        raise DomainError("bound must be at least 2")
    q = primes_up_to(bound).astype(np.float64)
    value = math.prod((1.0 - 1.0 / (q * (q - 1.0))).tolist())
    return value, value / bound


@dataclass(frozen=True)
class DensityReport:
    x: int
    k: int
    sum_exact: float | Fraction
    li_x: float
    pi_x: int
    ratio_li: float
    ratio_pi: float


def _prime_phi(x: int) -> tuple[np.ndarray, np.ndarray]:
    ps = primes_up_to(x)
    phi = totient_table(max(x - 1, 1))
    return ps, phi[ps - 1]


def _report(x: int, k: int, total) -> DensityReport:
    li = log_integral(x)
    pi = len(primes_up_to(x))
    return DensityReport(x, k, total, li, pi, float(total) / li, float(total) / pi)


def empirical_ak(x: int, k: int, exact: bool = False) -> DensityReport:
    """Sum of (phi(p-1)/(p-1))**k over p <= x with li- and pi-normalized ratios."""
    if x < 2:
        raise DomainError("x must be at least 2")
    if k < 0:
        raise DomainError("k must be nonnegative")
    ps, phis = _prime_phi(x)
    if exact:
        total = sum((Fraction(int(f), int(p) - 1) ** k for p, f in zip(ps, phis)), Fraction(0))
    else:
        total = math.fsum(((phis / (ps - 1.0)) ** k).tolist())
    return _report(x, k, total)


def ak_series(xs: Sequence[int], k: int) -> tuple[list[DensityReport], list[float]]:
    """Reports at each x plus the absolute successive differences of ratio_li."""
    reports = [empirical_ak(x, k) for x in xs]
    diffs = [abs(b.ratio_li - a.ratio_li) for a, b in zip(reports, reports[1:])]
    return reports, diffs


def main_term_Mx(x: int, exact: bool = False) -> float | Fraction:
    """Sum over p <= x of (phi(p-1)/(p-1))^2 (1 - 1/p)^2, i.e. of (phi(p-1)/p)^2."""
    if x < 2:
        raise DomainError("x must be at least 2")
    ps, phis = _prime_phi(x)
    if exact:
        return sum((Fraction(int(f), int(p)) ** 2 for p, f in zip(ps, phis)), Fraction(0))
    return math.fsum(((phis / ps.astype(np.float64)) ** 2).tolist())


def main_term_Mfp(ctx: PrimeContext, mode: str = "asymptotic") -> Fraction:
    ratio = Fraction(ctx.phi_p_minus_1, ctx.p - 1)
    if mode == "asymptotic":
        return ratio**2 * ctx.p
    if mode == "exact":
        return ratio**2 * (1 - Fraction(1, ctx.p)) ** 2 * ctx.p
    raise DomainError(f"unknown mode {mode!r}")


def empirical_delta(x: int, z: int, f: IntPolynomial, workers: int = 1) -> float:
    pi = len(primes_up_to(x))
    return count_pi_f(x, z, f, workers=workers) / pi


def delta_series(xs: Sequence[int], z: int, f: IntPolynomial, workers: int = 1):
    """Empirical densities at each x and the largest successive change."""
    vals = [empirical_delta(x, z, f, workers) for x in xs]
    diag = max((abs(b - a) for a, b in zip(vals, vals[1:])), default=0.0)
    return vals, diag


def empirical_cfp(ctx: PrimeContext, f: IntPolynomial) -> Fraction:
    n = simultaneous_spectrum(ctx.p, [f], ctx).tuple_count
    return Fraction(n) / main_term_Mfp(ctx, "asymptotic")


def fit_error_exponent(xs: Sequence[int], k: int = 1, constant: float = ARTIN_CONSTANT) -> float:
    """Least-squares b in |S_k(x) - constant * li(x)| ~ C x / (log x)^b.

    Only meaningful when ``constant`` is the true a_k (k = 1 by default).
    """
    ys, ts = [], []
    for x in xs:
        r = empirical_ak(x, k)
        err = abs(float(r.sum_exact) - constant * r.li_x)
        ys.append(math.log(err) - math.log(x))
        ts.append(math.log(math.log(x)))
    slope = np.polyfit(ts, ys, 1)[0]
    return float(-slope)

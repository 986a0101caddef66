"""The incomplete exponential sum T(u, p) and the four-term split of the
simultaneous-root count.

Writing e(x) = exp(2 pi i x / p), the indicator of a primitive root is

    Psi(u) = (1/p) sum_{gcd(n, p-1)=1} sum_{0<=a<p} e(a (tau^n - u))
           = (phi(p-1) + T(u, p)) / p,

where the a = 0 slice contributes phi(p-1) and T collects a != 0. Hence
T(u, p) = p Psi(u) - phi(p-1) exactly. Multiplying two indicators and
splitting each by a = 0 / a != 0 gives four pieces M, E0, E1, E2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import DomainError
from .counting import simultaneous_spectrum
from .poly import IntPolynomial, eval_mod
from .roots import PrimeContext, is_primitive_root, psi_exact, unit_roots


@dataclass(frozen=True)
class ExpSumResult:
    u: int
    p: int
    literal_value: complex | None
    exact_value: int

    @property
    def normalized_exponent(self) -> float | None:
        """log_p |T|, undefined when T = 0."""
        if self.exact_value == 0:
            return None
        return math.log(abs(self.exact_value)) / math.log(self.p)


def _phase_sum(u: int, ctx: PrimeContext, a_start: int) -> complex:
    p = ctx.p
    diff = (ctx.generator_powers() - u) % p
    a = np.arange(a_start, p, dtype=np.int64)
    return complex(unit_roots(p)[(diff[:, None] * a[None, :]) % p].sum())


def t_sum_literal(u: int, ctx: PrimeContext) -> complex:
    """Direct double sum over 0 < a < p and n coprime to p-1. O(p * phi(p-1))."""
    return _phase_sum(u, ctx, 1)


def t_sum_exact(u: int, ctx: PrimeContext) -> int:
    return ctx.p * psi_exact(u, ctx) - ctx.phi_p_minus_1


def t_sum(u: int, ctx: PrimeContext, literal: bool = True) -> ExpSumResult:
    lit = t_sum_literal(u, ctx) if literal else None
    return ExpSumResult(u, ctx.p, lit, t_sum_exact(u, ctx))


def vanishing_check_e0(u: int, ctx: PrimeContext) -> complex:
    """Full-period sum over 0 <= a < p; zero whenever ``u`` is not primitive."""
    if is_primitive_root(u, ctx):
        raise DomainError(f"{u} is a primitive root mod {ctx.p}; the sum does not vanish")
    return _phase_sum(u, ctx, 0)


@dataclass(frozen=True)
class TScan:
    max_abs: int
    argmax_u: int
    exponent: float


def max_t_scan(ctx: PrimeContext) -> TScan:
    """Largest |T(u, p)| over u in [1, p-1]; ties go to the smallest u."""
    best_u, best = 1, -1
    for u in range(1, ctx.p):
        v = abs(t_sum_exact(u, ctx))
        if v > best:
            best_u, best = u, v
    exponent = math.log(best) / math.log(ctx.p) if best > 0 else float("-inf")
    return TScan(best, best_u, exponent)


@dataclass(frozen=True)
class Decomposition:
    p: int
    M: float | Fraction
    E0: float | Fraction
    E1: float | Fraction
    E2: float | Fraction
    N: int

    @property
    def total(self) -> float:
        return self.M + self.E0 + self.E1 + self.E2

    @property
    def reconstructs(self) -> bool:
        return abs(self.total - self.N) <= 1e-6 * max(1, abs(self.N))


def decomposition_check(ctx: PrimeContext, f: IntPolynomial, literal: bool = False) -> Decomposition:
    """Split sum_{z in F_p} Psi(z) Psi(f(z)) by trivial/nontrivial characters.

    z runs over all of F_p; z = 0 adds nothing to the count (Psi(0) = 0) and
    makes M equal to phi(p-1)^2 / p. With ``literal=True`` every T(u, p) comes
    from the floating-point double sum; otherwise from the closed form.
    """
    p, phi = ctx.p, ctx.phi_p_minus_1
    if literal:
        T = [t_sum_literal(u, ctx).real for u in range(p)]
    else:
        T = [t_sum_exact(u, ctx) for u in range(p)]
    tz = [T[z] for z in range(p)]
    tf = [T[eval_mod(f, z, p)] for z in range(p)]
    if literal:
        p2 = float(p * p)
        M = p * phi * phi / p2
        E0 = math.fsum(phi * b for b in tf) / p2
        E1 = math.fsum(a * phi for a in tz) / p2
        E2 = math.fsum(a * b for a, b in zip(tz, tf)) / p2
    else:
        p2 = p * p
        M = Fraction(p * phi * phi, p2)
        E0 = Fraction(phi * sum(tf), p2)
        E1 = Fraction(phi * sum(tz), p2)
        E2 = Fraction(sum(a * b for a, b in zip(tz, tf)), p2)
    N = simultaneous_spectrum(p, [f], ctx).tuple_count
    return Decomposition(p, M, E0, E1, E2, N)

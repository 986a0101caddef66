"""Multiplicative orders, primitive roots, discrete logs and the primitive-root
indicator in its exponential-sum and index forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .arith import DomainError, FactoredInteger, euler_phi, factorize, is_prime


@dataclass(frozen=True)
class PrimeContext:
    """A prime together with the data every order test needs.

    ``tau`` is the least primitive root; for ``p = 2`` it is 1.
    """

    p: int
    p_minus_1: FactoredInteger
    phi_p_minus_1: int
    tau: int

    @classmethod
    def build(cls, p: int, p_minus_1: FactoredInteger | None = None) -> "PrimeContext":
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        fac = p_minus_1 if p_minus_1 is not None else factorize(p - 1)
        phi = euler_phi(fac)
        tau = next(z for z in range(1, p) if _full_order(z, p, fac))
        return cls(p, fac, phi, tau)

    def coprime_exponents(self) -> np.ndarray:
        """Exponents n in [1, p-1] with gcd(n, p-1) = 1."""
        m = self.p - 1
        n = np.arange(1, m + 1, dtype=np.int64)
        return n[np.gcd(n, m) == 1]

    @cached_property
    def _all_powers(self) -> np.ndarray:
        out = np.empty(self.p, dtype=np.int64)
        x = 1
        for n in range(self.p):
            out[n] = x
            x = x * self.tau % self.p
        return out

    def generator_powers(self) -> np.ndarray:
        """``tau**n mod p`` for every exponent from :meth:`coprime_exponents`."""
        return self._all_powers[self.coprime_exponents()]

    @cached_property
    def _bsgs(self) -> tuple[int, dict[int, int], int]:
        m = math.isqrt(self.p - 2) + 1 if self.p > 2 else 1
        baby: dict[int, int] = {}
        for j in range(m):
            baby.setdefault(int(self._all_powers[j]), j)
        return m, baby, pow(self.tau, -m, self.p)


def _full_order(z: int, p: int, fac: FactoredInteger) -> bool:
    if z % p == 0:
        return False
    return all(pow(z, (p - 1) // q, p) != 1 for q in fac.primes)


def least_primitive_root(p: int) -> PrimeContext:
    return PrimeContext.build(p)


def multiplicative_order(z: int, ctx: PrimeContext) -> int:
    p = ctx.p
    z %= p
    if z == 0:
        raise DomainError("0 has no multiplicative order")
    k = p - 1
    for q, e in ctx.p_minus_1.factors:
        for _ in range(e):
            if pow(z, k // q, p) != 1:
                break
            k //= q
    return k


def is_primitive_root(z: int, ctx: PrimeContext) -> bool:
    return _full_order(z, ctx.p, ctx.p_minus_1)


def enumerate_primitive_roots(ctx: PrimeContext) -> list[int]:
    return sorted(int(v) for v in ctx.generator_powers())


def discrete_log(u: int, ctx: PrimeContext) -> int:
    """Index of ``u`` to base ``tau`` by baby-step/giant-step."""
    p = ctx.p
    u %= p
    if u == 0:
        raise DomainError("discrete log of 0 is undefined")
    n = p - 1
    m, baby, giant = ctx._bsgs
    y = u
    for i in range(m + 1):
        j = baby.get(y)
        if j is not None:
            return (i * m + j) % n
        y = y * giant % p
    raise AssertionError(f"no discrete log for {u} mod {p}; tau is not a generator")


def psi_exact(u: int, ctx: PrimeContext) -> int:
    """Primitive-root indicator through the index: 1 iff gcd(log u, p-1) = 1."""
    if u % ctx.p == 0:
        return 0
    return int(math.gcd(discrete_log(u, ctx), ctx.p - 1) == 1)


def unit_roots(p: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(p) / p)


def psi_literal(u: int, ctx: PrimeContext) -> float:
    """Evaluate the double exponential sum for the indicator in floating point.

    The phase ``(tau**n - u) * k`` is reduced mod p before the table lookup,
    which is exact and keeps every summand on the unit circle.
    Cost is O(p * phi(p-1)).
    """
    p = ctx.p
    diff = (ctx.generator_powers() - u) % p
    k = np.arange(p, dtype=np.int64)
    terms = unit_roots(p)[(diff[:, None] * k[None, :]) % p]
    total = terms.sum() / p
    if abs(total.imag) >= 1e-6:
        raise ArithmeticError(f"imaginary residue {total.imag:g} in indicator sum")
    return float(total.real)

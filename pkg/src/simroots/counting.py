"""Counting simultaneous primitive roots.

Two directions: fix a prime and scan residues (:func:`simultaneous_spectrum`),
or fix the base ``z`` and scan primes (:func:`count_pi_f`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

from .arith import DomainError, divisor_count, divisor_sum, euler_phi, is_prime, primes_array
from .poly import IntPolynomial, eval_mod
from .roots import PrimeContext, enumerate_primitive_roots, is_primitive_root


class SpectrumRow(NamedTuple):
    z: int
    values: tuple[int, ...]
    is_tuple: bool


@dataclass(frozen=True)
class TupleSpectrum:
    p: int
    polys: tuple[IntPolynomial, ...]
    rows: tuple[SpectrumRow, ...]

    @property
    def tuple_count(self) -> int:
        return sum(r.is_tuple for r in self.rows)

    def tuple_rows(self) -> list[SpectrumRow]:
        return [r for r in self.rows if r.is_tuple]


@dataclass(frozen=True)
class SweepSeries:
    z: int
    poly: IntPolynomial
    x_max: int
    records: tuple[tuple[int, bool], ...]

    @property
    def pi_f(self) -> int:
        return sum(hit for _, hit in self.records)

    @property
    def pi(self) -> int:
        return len(self.records)


def simultaneous_spectrum(p: int, polys: Sequence[IntPolynomial], ctx: PrimeContext | None = None) -> TupleSpectrum:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not polys:
        raise DomainError("need at least one polynomial")
    ctx = ctx or PrimeContext.build(p)
    rows = []
    for z in enumerate_primitive_roots(ctx):
        values = tuple(eval_mod(f, z, p) for f in polys)
        rows.append(SpectrumRow(z, values, all(is_primitive_root(v, ctx) for v in values)))
    return TupleSpectrum(p, tuple(polys), tuple(rows))


def count_pi_f(x: int, z: int, f: IntPolynomial, workers: int = 1) -> int:
    """Number of primes ``p <= x`` with ``z`` and ``f(z)`` both primitive mod p."""
    from .sweep import run_sweep

    return run_sweep(z, f, x, workers=workers).pi_f


def sweep_series(x: int, z: int, f: IntPolynomial, workers: int = 1) -> SweepSeries:
    from .sweep import run_sweep

    records: list[tuple[int, bool]] = []
    run_sweep(z, f, x, workers=workers, sink=records.extend)
    return SweepSeries(z, f, x, tuple(records))


def prime_primitive_root_count(ctx: PrimeContext) -> int:
    return sum(is_primitive_root(q, ctx) for q in primes_array(2, ctx.p - 1).tolist())


ARITHMETIC_FUNCTIONS: dict[str, Callable[[int], int]] = {
    "d": divisor_count,
    "sigma": divisor_sum,
    "phi": euler_phi,
}


def _arith_fn(fn: str | Callable[[int], int]) -> Callable[[int], int]:
    if callable(fn):
        return fn
    try:
        return ARITHMETIC_FUNCTIONS[fn]
    except KeyError:
        raise DomainError(f"unknown arithmetic function {fn!r}; use d, sigma or phi") from None


def restricted_average_order(ctx: PrimeContext, fn, x: int | None = None) -> int:
    """Sum of ``fn(n)`` over primitive roots ``n`` (only ``n <= x`` if given)."""
    if x is not None and x > ctx.p - 1:
        raise DomainError("limit must not exceed p - 1")
    g = _arith_fn(fn)
    return sum(g(n) for n in enumerate_primitive_roots(ctx) if x is None or n <= x)


def value_set_count(ctx: PrimeContext, fn) -> int:
    g = _arith_fn(fn)
    return sum(is_primitive_root(g(n) % ctx.p, ctx) for n in enumerate_primitive_roots(ctx))


class SymmetryStat(NamedTuple):
    value: Fraction
    empty: bool


def symmetry_statistic(spec: TupleSpectrum) -> SymmetryStat:
    """Fraction of tuple rows ``z`` whose mirror ``p - z`` is also a tuple row."""
    zs = {r.z for r in spec.rows if r.is_tuple}
    if not zs:
        return SymmetryStat(Fraction(0), True)
    return SymmetryStat(Fraction(sum((spec.p - z) in zs for z in zs), len(zs)), False)

"""Exact modular and multiplicative arithmetic.

Everything here works on Python integers, so products are exact without any
widening tricks. The 2**62 ceiling is kept as a contract so results match
fixed-width implementations and sieve arrays stay in ``int64``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

MAX_MODULUS = 1 << 62

# Segmented sieving kicks in above this lower bound.
FULL_SIEVE_LIMIT = 1 << 24
SEGMENT_SIZE = 1 << 20

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_TRIAL_LIMIT = 1000


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for q, e in self.factors:
            if q <= last or e < 1:
                raise DomainError(f"malformed factorization {self.factors!r}")
            last = q
            prod *= q**e
        if prod != self.value:
            raise DomainError(f"factors {self.factors!r} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def divisors(self) -> list[int]:
        divs = [1]
        for q, e in self.factors:
            divs = [d * q**i for d in divs for i in range(e + 1)]
        return sorted(divs)


def _check_modulus(m: int) -> None:
    if m == 0:
        raise DomainError("modulus must be nonzero")
    if m < 0 or m > MAX_MODULUS:
        raise DomainError(f"modulus {m} outside [1, 2**62]")


def mul_mod(a: int, b: int, m: int) -> int:
    _check_modulus(m)
    return (a * b) % m


def pow_mod(a: int, e: int, m: int) -> int:
    """``a**e mod m`` by the builtin square-and-multiply ``pow``."""
    _check_modulus(m)
    if e < 0:
        raise DomainError("negative exponent")
    return pow(a, e, m)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _TRIAL_PRIMES:
        if n % q == 0:
            return n == q
    if n < 53 * 53:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, c: int) -> int:
    """One Brent-style rho run with polynomial x^2 + c; returns a divisor or n."""
    y, m, g, r, q = 2, 128, 1, 1, 1
    x = ys = 2
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g


def _split(n: int) -> int:
    # Fixed schedule c = 1, 2, 3, ... keeps factorizations reproducible.
    c = 1
    while True:
        d = _pollard_brent(n, c)
        if 1 < d < n:
            return d
        c += 1


def _factor_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _factor_large(r, out)
        _factor_large(r, out)
        return
    d = _split(n)
    _factor_large(d, out)
    _factor_large(n // d, out)


def factorize(n: int) -> FactoredInteger:
    if n < 1 or n > MAX_MODULUS:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    m = n
    for q in (2, 3):
        while m % q == 0:
            out[q] = out.get(q, 0) + 1
            m //= q
    q = 5
    while q <= _TRIAL_LIMIT and q * q <= m:
        for d in (q, q + 2):
            while m % d == 0:
                out[d] = out.get(d, 0) + 1
                m //= d
        q += 6
    if m > 1:
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT:
            out[m] = out.get(m, 0) + 1
        else:
            _factor_large(m, out)
    return FactoredInteger(n, tuple(sorted(out.items())))


def _as_factored(n: int | FactoredInteger) -> FactoredInteger:
    return n if isinstance(n, FactoredInteger) else factorize(n)


def euler_phi(n: int | FactoredInteger) -> int:
    f = _as_factored(n)
    phi = 1
    for q, e in f.factors:
        phi *= (q - 1) * q ** (e - 1)
    return phi


def divisor_count(n: int | FactoredInteger) -> int:
    return math.prod(e + 1 for _, e in _as_factored(n).factors)


def divisor_sum(n: int | FactoredInteger) -> int:
    return math.prod((q ** (e + 1) - 1) // (q - 1) for q, e in _as_factored(n).factors)


# --- sieves -----------------------------------------------------------------


def sieve_flags(n: int) -> np.ndarray:
    """Boolean primality table for ``0..n``."""
    flags = np.ones(max(n + 1, 2), dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return flags[: n + 1]


def primes_up_to(n: int) -> np.ndarray:
    if n < 2:
        return np.empty(0, dtype=np.int64)
    return np.flatnonzero(sieve_flags(n)).astype(np.int64)


def _segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in ``[lo, hi)`` given all base primes up to ``sqrt(hi)``; lo >= 2."""
    mark = np.ones(hi - lo, dtype=bool)
    for q in base:
        q = int(q)
        if q * q >= hi:
            break
        start = max(q * q, -(-lo // q) * q)
        mark[start - lo :: q] = False
    return np.flatnonzero(mark).astype(np.int64) + lo


def primes_array(lo: int, hi: int) -> np.ndarray:
    """All primes in the closed interval ``[lo, hi]`` as an int64 array."""
    if hi > MAX_MODULUS:
        raise DomainError("upper bound above 2**62")
    lo = max(lo, 2)
    if hi < lo:
        return np.empty(0, dtype=np.int64)
    if lo <= FULL_SIEVE_LIMIT:
        ps = primes_up_to(hi)
        return ps[ps >= lo]
    return np.concatenate(list(_segments(lo, hi)))


def _segments(lo: int, hi: int) -> Iterator[np.ndarray]:
    base = primes_up_to(math.isqrt(hi) + 1)
    start = lo
    while start <= hi:
        stop = min(start + SEGMENT_SIZE, hi + 1)
        yield _segment(start, stop, base)
        start = stop


def primes_in_range(lo: int, hi: int) -> Iterator[int]:
    """Stream the primes in ``[lo, hi]`` in ascending order."""
    if hi > MAX_MODULUS:
        raise DomainError("upper bound above 2**62")
    lo = max(lo, 2)
    if hi < lo:
        return
    if lo <= FULL_SIEVE_LIMIT:
        for p in primes_array(lo, hi).tolist():
            yield p
        return
    for seg in _segments(lo, hi):
        yield from seg.tolist()


def totient_table(n: int) -> np.ndarray:
    """``phi(0..n)`` by an in-place sieve; entry 0 is 0."""
    phi = np.arange(n + 1, dtype=np.int64)
    for q in primes_up_to(n).tolist():
        phi[q::q] -= phi[q::q] // q
    return phi


def smallest_factor_table(n: int) -> np.ndarray:
    spf = np.zeros(n + 1, dtype=np.int64)
    for q in primes_up_to(n).tolist():
        sl = spf[q::q]
        sl[sl == 0] = q
    return spf


def factor_with_table(n: int, spf: np.ndarray) -> FactoredInteger:
    """Factor ``n`` by repeated lookup in a smallest-prime-factor table."""
    out: dict[int, int] = {}
    m = n
    while m > 1:
        q = int(spf[m])
        out[q] = out.get(q, 0) + 1
        m //= q
    return FactoredInteger(n, tuple(sorted(out.items())))

"""Smallest-prime-factor sieve, factorization, and the classical
arithmetical functions built on them.

Everything here is exact integer arithmetic; values never pass through
floats, so results like divisor power sums stay correct at any size.
A :class:`SieveTable` covers a contiguous range ``2..limit`` and makes
bulk factorization of that range cheap; :func:`trial_factorize` handles
one-off values outside any sieve (for instance large prime powers).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = p_1^e_1 * ... * p_l^e_l``.

    ``factors`` holds ``(prime, exponent)`` pairs with primes strictly
    increasing and every exponent >= 1; it is empty exactly when ``n == 1``.
    """

    n: int
    factors: tuple[tuple[int, int], ...]


class SieveTable:
    """Smallest-prime-factor table for ``2..limit``.

    ``spf[k]`` is the least prime dividing ``k``; ``spf[k] == k`` iff ``k``
    is prime. Immutable after construction, safe for concurrent readers.
    """

    __slots__ = ("limit", "spf")

    def __init__(self, limit: int, spf: list[int]):
        self.limit = limit
        self.spf = spf

    def __repr__(self) -> str:
        return f"SieveTable(limit={self.limit})"


def build_sieve(limit: int) -> SieveTable:
    """Build a smallest-prime-factor table covering ``2..limit``."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    spf = list(range(limit + 1))
    for i in range(2, isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return SieveTable(limit, spf)


def primes_upto(limit: int, sieve: SieveTable | None = None) -> list[int]:
    """All primes ``p <= limit``, reusing ``sieve`` when it is large enough."""
    if limit < 2:
        return []
    if sieve is None or sieve.limit < limit:
        sieve = build_sieve(limit)
    spf = sieve.spf
    return [p for p in range(2, limit + 1) if spf[p] == p]


def factorize(n: int, sieve: SieveTable) -> Factorization:
    """Factor ``n`` using the sieve; requires ``1 <= n <= sieve.limit``."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need a positive integer")
    if n > sieve.limit:
        raise ValueError(f"{n} exceeds sieve limit {sieve.limit}")
    spf = sieve.spf
    factors = []
    m = n
    while m > 1:
        p = spf[m]
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return Factorization(n, tuple(factors))


def trial_factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division; no sieve needed, any positive ``n``."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need a positive integer")
    factors = []
    m = n
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    if e:
        factors.append((2, e))
    p = 3
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def divisor_count(f: Factorization) -> int:
    """d(n): number of divisors, the product of (e_i + 1)."""
    out = 1
    for _, e in f.factors:
        out *= e + 1
    return out


def divisor_power_sum(f: Factorization, t: int) -> int:
    """sigma_t(n): sum of t-th powers of all divisors; t = 0 gives d(n)."""
    if t < 0:
        raise ValueError(f"divisor power must be >= 0, got {t}")
    out = 1
    for p, e in f.factors:
        pt = p**t
        term = 1
        acc = 1
        for _ in range(e):
            acc *= pt
            term += acc
        out *= term
    return out


def distinct_prime_count(f: Factorization) -> int:
    """omega(n): number of distinct prime divisors; omega(1) = 0."""
    return len(f.factors)


def exponent_power_sum(f: Factorization, t: int) -> int:
    """L_t(n): sum of t-th powers of the exponents; L_1 is Omega(n)."""
    if t < 1:
        raise ValueError(f"exponent power must be >= 1, got {t}")
    return sum(e**t for _, e in f.factors)


def euler_totient(f: Factorization) -> int:
    """phi(n): count of 1 <= k <= n coprime to n; phi(1) = 1."""
    out = 1
    for p, e in f.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def prime_count_upto(n: int, sieve: SieveTable) -> int:
    """pi(n): number of primes <= n."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    if n > sieve.limit:
        raise ValueError(f"{n} exceeds sieve limit {sieve.limit}")
    spf = sieve.spf
    return sum(1 for k in range(2, n + 1) if spf[k] == k)


# Cache of p(0), p(1), ... computed so far. Grown copy-on-write so that a
# half-built list is never visible to concurrent readers.
_partitions: list[int] = [1]


def partition_count(n: int) -> int:
    """p(n): number of partitions of n, by the pentagonal-number recurrence.

    Exact big integers; p(0) = 1.
    """
    if n < 0:
        raise ValueError(f"partition argument must be >= 0, got {n}")
    global _partitions
    cache = _partitions
    if n < len(cache):
        return cache[n]
    cache = list(cache)
    for m in range(len(cache), n + 1):
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > m:
                break
            term = cache[m - g]
            g2 = g + k
            if g2 <= m:
                term += cache[m - g2]
            total += term if k % 2 else -term
            k += 1
        cache.append(total)
    _partitions = cache
    return cache[n]

"""Theta series, their powers, and representation counts for sums of powers.

The generating series sum over all integers n of x^(n^s) (s even) has
coefficient 2 at every positive s-th power and 1 at zero. Its t-th power
counts ordered, signed integer tuples — zeros allowed — whose s-th powers
sum to each index, which is the convention forced by the series algebra.
The one-manner statements about primes use a different convention
(unordered pairs of nonnegative integers); both are implemented and the
multiplicity bridge between them is exercised in the tests rather than
blurred here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .core import SieveTable
from .powerseries import TruncatedSeries, ps_mul, ps_pow


def integer_root(m: int, s: int) -> int:
    """floor(m ** (1/s)) in pure integer arithmetic.

    Newton iteration with a final correction loop; floats never enter, so
    boundary values like exact s-th powers are never missed.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    if m < 2 or s == 1:
        return m
    x = 1 << ((m.bit_length() + s - 1) // s)
    while True:
        nxt = ((s - 1) * x + m // x ** (s - 1)) // s
        if nxt >= x:
            break
        x = nxt
    while x**s > m:
        x -= 1
    while (x + 1) ** s <= m:
        x += 1
    return x


def _check_even_power(s: int) -> None:
    if s < 2 or s % 2:
        raise ValueError(f"only even powers s >= 2 are supported, got s={s}")


def generalized_theta(s: int, order: int) -> TruncatedSeries:
    """Series with coefficient 1 at 0 and 2 at every n^s <= order (n >= 1)."""
    _check_even_power(s)
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    n = 1
    while n**s <= order:
        coeffs[n**s] = 2
        n += 1
    return TruncatedSeries(order, tuple(coeffs))


def theta_series(order: int) -> TruncatedSeries:
    """The square case: coefficient 2 at each positive square, 1 at zero."""
    return generalized_theta(2, order)


@dataclass(frozen=True)
class RepCountTable:
    """counts[m] = number of ordered signed integer t-tuples with sum of s-th powers m."""

    s: int
    t: int
    order: int
    counts: tuple[int, ...]


def waring_counts(s: int, t: int, order: int) -> RepCountTable:
    """Representation counts as coefficients of the t-th power of the theta series."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    series = ps_pow(generalized_theta(s, order), t)
    return RepCountTable(s, t, order, tuple(series.coeffs))


def four_square_counts(order: int) -> RepCountTable:
    """Counts for sums of four squares (coefficients of the fourth power)."""
    return waring_counts(2, 4, order)


def two_square_counts(order: int) -> RepCountTable:
    """Counts for sums of two squares (coefficients of the square)."""
    return waring_counts(2, 2, order)


def essentially_distinct_two_squares(n: int) -> int:
    """Number of pairs 0 <= a <= b with a^2 + b^2 = n (the one-manner convention)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    count = 0
    for a in range(isqrt(n // 2) + 1):
        rest = n - a * a
        b = isqrt(rest)
        if b * b == rest and b >= a:
            count += 1
    return count


def correlation_counts(order: int) -> tuple[int, ...]:
    """Coefficients of the eighth power of the theta series.

    Equal, by definition of the Cauchy product, to the self-convolution of
    the four-square count sequence including its constant 1.
    """
    return tuple(ps_pow(theta_series(order), 8).coeffs)


def primes_4k1_count(n: int, sieve: SieveTable) -> int:
    """Number of primes p <= n with p = 1 (mod 4)."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    if n > sieve.limit:
        raise ValueError(f"{n} exceeds sieve limit {sieve.limit}")
    spf = sieve.spf
    return sum(1 for p in range(5, n + 1) if spf[p] == p and p % 4 == 1)


@dataclass(frozen=True)
class ConvolutionReport:
    """Coefficientwise comparison of the (t+r)-th power against the product of powers."""

    s: int
    t: int
    r: int
    order: int
    ok: bool
    first_mismatch: int | None

    def to_dict(self) -> dict:
        return {
            "s": self.s, "t": self.t, "r": self.r, "order": self.order,
            "ok": self.ok, "first_mismatch": self.first_mismatch,
        }


def verify_lemma_g(s: int, t: int, r: int, order: int) -> ConvolutionReport:
    """Check that the (t+r)-th theta power equals the product of the t-th and r-th."""
    if t < 1 or r < 1:
        raise ValueError("need t >= 1 and r >= 1")
    base = generalized_theta(s, order)
    lhs = ps_pow(base, t + r)
    rhs = ps_mul(ps_pow(base, t), ps_pow(base, r))
    mismatch = next(
        (i for i in range(order + 1) if lhs.coeffs[i] != rhs.coeffs[i]), None
    )
    return ConvolutionReport(s, t, r, order, mismatch is None, mismatch)


def brute_force_count(m: int, s: int, t: int) -> int:
    """Independent oracle: enumerate ordered signed tuples summing to m.

    Enumerates absolute values with a running budget and doubles for each
    sign choice of a nonzero entry; identical to walking every signed
    tuple with |n_i| <= m^(1/s), just without the mirrored halves.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    _check_even_power(s)

    def rec(remaining: int, parts: int) -> int:
        if parts == 0:
            return 1 if remaining == 0 else 0
        total = 0
        b = 0
        while True:
            bs = b**s
            if bs > remaining:
                break
            sub = rec(remaining - bs, parts - 1)
            total += sub if b == 0 else 2 * sub
            b += 1
        return total

    return rec(m, t)

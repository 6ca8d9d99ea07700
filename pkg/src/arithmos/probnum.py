"""Exponent-histogram polynomials and their exact probability views.

Sweeping an integer-valued function beta over ``1..M`` and counting how
often each value occurs gives the polynomial

    1 + t_1 x^(s_1) + ... + t_L x^(s_L),   sum of t_j = M,

with a standalone leading 1 by convention. Evaluated at x = 1 it equals
M + 1, so dividing every coefficient by M + 1 yields an exact probability
mass function; the polynomial becomes the moment generating polynomial of
the induced discrete random variable.

One bookkeeping subtlety: the polynomial keeps the leading 1 separate
from any genuine t_0 x^0 term (beta hits 0 at n = 1 for most counting
functions), but a PMF needs unique support points, so normalization
merges both masses at value 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .classify import ArithFnHandle, EvaluationError
from .powerseries import Rational, TruncatedSeries, as_rational, format_rational


@dataclass(frozen=True)
class ArithPolynomial:
    """Histogram polynomial over 1..M: (exponent, count) pairs, exponents ascending."""

    M: int
    terms: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Pmf:
    """Exact PMF: (value, probability) pairs with positive masses summing to 1."""

    support: tuple[tuple[int, Fraction], ...]

    def probability(self, value: int) -> Fraction:
        for s, q in self.support:
            if s == value:
                return q
        return Fraction(0)

    def to_dict(self) -> dict:
        return {"support": [[s, format_rational(q)] for s, q in self.support]}


def build_polynomial(beta: ArithFnHandle, M: int) -> ArithPolynomial:
    """Histogram of beta(n) over n = 1..M; beta must be nonnegative-integer valued."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    counts: Counter[int] = Counter()
    for n in range(1, M + 1):
        try:
            val = beta.eval(n)
        except Exception as exc:
            raise EvaluationError(beta.name, n, exc) from exc
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise ValueError(f"{beta.name}({n}) = {val} is not an integer")
            val = val.numerator
        if not isinstance(val, int):
            raise ValueError(f"{beta.name}({n}) = {val!r} is not an integer")
        if val < 0:
            raise ValueError(f"{beta.name}({n}) = {val} is negative")
        counts[val] += 1
    return ArithPolynomial(M, tuple(sorted(counts.items())))


def eval_at_one(p: ArithPolynomial) -> int:
    """1 + sum of counts; always equals M + 1."""
    return 1 + sum(t for _, t in p.terms)


def polynomial_eval(p: ArithPolynomial, x: Rational) -> Rational:
    """Exact value of 1 + sum t_j x^(s_j) at a rational x."""
    xf = Fraction(as_rational(x))
    total = Fraction(1)
    for s, t in p.terms:
        total += t * xf**s
    return total.numerator if total.denominator == 1 else total


def normalize(p: ArithPolynomial) -> Pmf:
    """Divide every coefficient by M + 1; the leading 1 merges into value 0."""
    den = p.M + 1
    masses = dict(p.terms)
    masses[0] = masses.get(0, 0) + 1
    support = tuple((s, Fraction(t, den)) for s, t in sorted(masses.items()))
    return Pmf(support)


def moment(pmf: Pmf, r: int) -> Fraction:
    """r-th raw moment, sum of q_j s_j^r, exact."""
    if r < 1:
        raise ValueError(f"moment order must be >= 1, got {r}")
    return sum((q * s**r for s, q in pmf.support), Fraction(0))


def moment_function_eval(pmf: Pmf, x: Rational) -> Fraction:
    """sum of q_j x^(s_j); equals exactly 1 at x = 1."""
    xf = Fraction(as_rational(x))
    return sum((q * xf**s for s, q in pmf.support), Fraction(0))


def normalize_summable_series(a: TruncatedSeries) -> Pmf:
    """Normalize nonnegative series coefficients by their total mass.

    The finite truncation stands in for a summable coefficient sequence;
    zero coefficients leave the support, and negative ones are rejected.
    """
    if any(c < 0 for c in a.coeffs):
        raise ValueError("series has a negative coefficient; not normalizable")
    total = sum(a.coeffs, Fraction(0))
    if total == 0:
        raise ValueError("series is identically zero; not normalizable")
    support = tuple((i, Fraction(c) / total) for i, c in enumerate(a.coeffs) if c)
    return Pmf(support)


def shifted_sign_scan(
    p: ArithPolynomial,
    lo: Rational = Fraction(-4),
    hi: Rational = Fraction(2),
    steps: int = 240,
) -> dict:
    """Count sign changes of P(x) - (M+1) on a uniform rational grid.

    Exact evaluation at steps+1 points; a sign change between neighbours
    certifies a real root in that subinterval, so the count is a lower
    bound on the number of real roots. Evidence only, nothing asserted.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    lof, hif = Fraction(as_rational(lo)), Fraction(as_rational(hi))
    if hif <= lof:
        raise ValueError("need lo < hi")
    shift = eval_at_one(p)
    step = (hif - lof) / steps
    signs = []
    zeros = 0
    for i in range(steps + 1):
        val = Fraction(polynomial_eval(p, lof + i * step)) - shift
        if val == 0:
            zeros += 1
        signs.append(0 if val == 0 else (1 if val > 0 else -1))
    changes = 0
    prev = None
    for s in signs:
        if s == 0:
            continue
        if prev is not None and s != prev:
            changes += 1
        prev = s
    degree = p.terms[-1][0] if p.terms else 0
    return {
        "lo": format_rational(lof),
        "hi": format_rational(hif),
        "steps": steps,
        "degree": degree,
        "sign_changes": changes,
        "exact_zeros_on_grid": zeros,
    }

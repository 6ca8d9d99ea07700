"""Finite-range classification of arithmetical functions.

Given a function handle, :func:`classify` tests the four classical laws
(multiplicative / completely multiplicative / additive / completely
additive) over every pair with product inside a bound, and returns a
report with one violating witness per failed law. Verdicts are evidence
over ``1..bound``, never a proof for all n.

:func:`verify_decomposable` checks the stronger structural property that
f is recovered from its own prime-power table ``g(p, a) = f(p^a)`` by
multiplying (or adding) over the factorization — the unique candidate
local factor, so no search is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Union

from .core import build_sieve, factorize, primes_upto

Value = Union[int, Fraction, float]

#: Absolute tolerance for handles declared ``value_kind="real"`` (for
#: instance the natural logarithm). Exact kinds compare with == only.
REAL_TOL = 1e-9


class EvaluationError(Exception):
    """A handle failed to evaluate; ``n`` carries the offending argument."""

    def __init__(self, name: str, n: int, cause: Exception):
        super().__init__(f"{name}({n}) failed to evaluate: {cause}")
        self.name = name
        self.n = n


@dataclass(frozen=True)
class ArithFnHandle:
    """A named arithmetical function.

    ``eval`` must be a deterministic, reentrant map from positive integers
    to exact values (or floats when ``value_kind="real"``), total on any
    range under test and not identically zero there.
    """

    name: str
    eval: Callable[[int], Value]
    value_kind: str = "integer"  # "integer" | "rational" | "real"


@dataclass(frozen=True)
class ClassificationReport:
    """Verdicts over ``1..bound`` with one witness pair per failed law."""

    name: str
    bound: int
    multiplicative: bool
    completely_multiplicative: bool
    additive: bool
    completely_additive: bool
    witnesses: dict[str, tuple[int, int]] = field(default_factory=dict)
    approximate: bool = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "bound": self.bound,
            "multiplicative": self.multiplicative,
            "completely_multiplicative": self.completely_multiplicative,
            "additive": self.additive,
            "completely_additive": self.completely_additive,
            "witnesses": {law: list(pair) for law, pair in sorted(self.witnesses.items())},
            "approximate": self.approximate,
            "note": f"verdicts are exact over 1..{self.bound} only",
        }


@dataclass(frozen=True)
class DecomposabilityResult:
    """Outcome of the prime-power reconstruction check on ``1..bound``."""

    name: str
    mode: str
    bound: int
    ok: bool
    witness: int | None
    note: str

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "bound": self.bound,
            "ok": self.ok,
            "witness": self.witness,
            "note": self.note,
        }


def _evaluate_range(f: ArithFnHandle, bound: int) -> list[Value]:
    values: list[Value] = [0] * (bound + 1)
    for n in range(1, bound + 1):
        try:
            values[n] = f.eval(n)
        except Exception as exc:
            raise EvaluationError(f.name, n, exc) from exc
    return values


def _equal(kind: str) -> Callable[[Value, Value], bool]:
    if kind == "real":
        return lambda a, b: abs(a - b) <= REAL_TOL
    return lambda a, b: a == b


def classify(f: ArithFnHandle, bound: int) -> ClassificationReport:
    """Test the four laws on every pair (m, n) with m*n <= bound."""
    if bound < 4:
        raise ValueError(f"bound must be >= 4, got {bound}")
    v = _evaluate_range(f, bound)
    if not any(v[1:]):
        raise ValueError(f"{f.name} is identically zero on 1..{bound}")
    eq = _equal(f.value_kind)

    witnesses: dict[str, tuple[int, int]] = {}
    laws = {
        "multiplicative": lambda m, n: eq(v[m * n], v[m] * v[n]),
        "completely_multiplicative": lambda m, n: eq(v[m * n], v[m] * v[n]),
        "additive": lambda m, n: eq(v[m * n], v[m] + v[n]),
        "completely_additive": lambda m, n: eq(v[m * n], v[m] + v[n]),
    }
    coprime_only = {"multiplicative": True, "completely_multiplicative": False,
                    "additive": True, "completely_additive": False}

    m = 1
    while m * m <= bound and len(witnesses) < 4:
        for n in range(m, bound // m + 1):
            coprime = gcd(m, n) == 1
            for law, check in laws.items():
                if law in witnesses:
                    continue
                if coprime_only[law] and not coprime:
                    continue
                if not check(m, n):
                    witnesses[law] = (m, n)
            if len(witnesses) == 4:
                break
        m += 1

    return ClassificationReport(
        name=f.name,
        bound=bound,
        multiplicative="multiplicative" not in witnesses,
        completely_multiplicative="completely_multiplicative" not in witnesses,
        additive="additive" not in witnesses,
        completely_additive="completely_additive" not in witnesses,
        witnesses=witnesses,
        approximate=f.value_kind == "real",
    )


def extract_local_factor(
    f: ArithFnHandle, prime_bound: int, exp_bound: int
) -> dict[tuple[int, int], Value]:
    """The table g(p, a) = f(p^a) for primes p <= prime_bound, 1 <= a <= exp_bound."""
    if prime_bound < 2 or exp_bound < 1:
        raise ValueError("need prime_bound >= 2 and exp_bound >= 1")
    table: dict[tuple[int, int], Value] = {}
    for p in primes_upto(prime_bound):
        pw = 1
        for a in range(1, exp_bound + 1):
            pw *= p
            try:
                table[(p, a)] = f.eval(pw)
            except Exception as exc:
                raise EvaluationError(f.name, pw, exc) from exc
    return table


_MEMORY_NOTE = (
    "agreement on the tested range shows f is determined there by its values "
    "on prime powers; it does not by itself make f memoryless (the totient "
    "passes this check yet depends on more than the exponent pattern)"
)


def verify_decomposable(f: ArithFnHandle, mode: str, bound: int) -> DecomposabilityResult:
    """Check f(n) against the product/sum of g(p_i, e_i) for every n <= bound."""
    if mode not in ("multiplicative", "additive"):
        raise ValueError(f"mode must be 'multiplicative' or 'additive', got {mode!r}")
    if bound < 4:
        raise ValueError(f"bound must be >= 4, got {bound}")
    v = _evaluate_range(f, bound)
    eq = _equal(f.value_kind)
    sieve = build_sieve(bound)
    local: dict[tuple[int, int], Value] = {}

    def g(p: int, a: int) -> Value:
        key = (p, a)
        if key not in local:
            try:
                local[key] = f.eval(p**a)
            except Exception as exc:
                raise EvaluationError(f.name, p**a, exc) from exc
        return local[key]

    witness = None
    for n in range(2, bound + 1):
        fac = factorize(n, sieve)
        if mode == "multiplicative":
            combined: Value = 1
            for p, a in fac.factors:
                combined = combined * g(p, a)
        else:
            combined = 0
            for p, a in fac.factors:
                combined = combined + g(p, a)
        if not eq(v[n], combined):
            witness = n
            break
    return DecomposabilityResult(
        name=f.name, mode=mode, bound=bound, ok=witness is None,
        witness=witness, note=_MEMORY_NOTE,
    )


def exp_transform(f: ArithFnHandle, base: int) -> ArithFnHandle:
    """The handle n -> base**f(n), computed with exact integer powers.

    Requires f to be integer-valued and nonnegative wherever evaluated;
    a negative value raises at evaluation time since exactness would be
    lost.
    """
    if not isinstance(base, int) or base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base!r}")

    def ev(n: int, _eval=f.eval, _base=base, _name=f.name) -> int:
        val = _eval(n)
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise ValueError(f"{_name}({n}) = {val} is not an integer")
            val = val.numerator
        if not isinstance(val, int):
            raise ValueError(f"{_name}({n}) = {val!r} is not an integer")
        if val < 0:
            raise ValueError(f"{_name}({n}) = {val} is negative; exact transform unsupported")
        return _base**val

    return ArithFnHandle(name=f"{base}^{f.name}", eval=ev, value_kind="integer")

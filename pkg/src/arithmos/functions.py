"""Named function handles shared by the CLI, classification, and tests.

``make_handle`` wires the classical functions from :mod:`arithmos.core`
into :class:`~arithmos.classify.ArithFnHandle` objects. Handles backed by
factorization use the supplied sieve for arguments inside its range and
fall back to trial division beyond it, so prime powers far above the
sieve limit still evaluate exactly.
"""

from __future__ import annotations

import math

from .classify import ArithFnHandle
from .core import (
    SieveTable,
    distinct_prime_count,
    divisor_count,
    divisor_power_sum,
    euler_totient,
    exponent_power_sum,
    factorize,
    partition_count,
    prime_count_upto,
    trial_factorize,
)

#: Every id ``make_handle`` accepts. ``log`` evaluates in floating point
#: and is only meaningful for approximate classification.
FUNCTION_IDS = ("d", "sigma", "omega", "bigomega", "L", "phi", "pi", "partition", "log")

#: The integer-valued ids: what the table surface emits and what can serve
#: as an exponent function for histogram polynomials.
INTEGER_FUNCTION_IDS = ("d", "sigma", "omega", "bigomega", "L", "phi", "pi", "partition")


def _factorizer(sieve: SieveTable | None):
    if sieve is None:
        return trial_factorize

    def fac(n: int, _sieve=sieve):
        if n <= _sieve.limit:
            return factorize(n, _sieve)
        return trial_factorize(n)

    return fac


def make_handle(fn_id: str, t: int | None = None, sieve: SieveTable | None = None) -> ArithFnHandle:
    """Build a named handle; ``t`` parameterizes ``sigma`` and ``L`` only."""
    if fn_id not in FUNCTION_IDS:
        raise ValueError(f"unknown function id {fn_id!r}; expected one of {FUNCTION_IDS}")
    if t is not None and fn_id not in ("sigma", "L"):
        raise ValueError(f"parameter t does not apply to {fn_id!r}")

    fac = _factorizer(sieve)
    if fn_id == "d":
        return ArithFnHandle("d", lambda n: divisor_count(fac(n)))
    if fn_id == "sigma":
        t = 1 if t is None else t
        if t < 0:
            raise ValueError(f"sigma needs t >= 0, got {t}")
        return ArithFnHandle(f"sigma_{t}", lambda n, _t=t: divisor_power_sum(fac(n), _t))
    if fn_id == "omega":
        return ArithFnHandle("omega", lambda n: distinct_prime_count(fac(n)))
    if fn_id == "bigomega":
        return ArithFnHandle("bigomega", lambda n: exponent_power_sum(fac(n), 1))
    if fn_id == "L":
        t = 1 if t is None else t
        if t < 1:
            raise ValueError(f"L needs t >= 1, got {t}")
        return ArithFnHandle(f"L_{t}", lambda n, _t=t: exponent_power_sum(fac(n), _t))
    if fn_id == "phi":
        return ArithFnHandle("phi", lambda n: euler_totient(fac(n)))
    if fn_id == "pi":
        if sieve is None:
            raise ValueError("pi needs an explicit sieve (it is not factorization-local)")
        return ArithFnHandle("pi", lambda n, _s=sieve: prime_count_upto(n, _s))
    if fn_id == "partition":
        return ArithFnHandle("partition", partition_count)
    return ArithFnHandle("log", math.log, value_kind="real")


def constant_one() -> ArithFnHandle:
    """The constant function 1 (the trivial weight in several identities)."""
    return ArithFnHandle("one", lambda n: 1)

"""Exact-arithmetic toolkit for arithmetical functions: factorization,
classification (multiplicative/additive and decomposability testing),
truncated formal power series, product-vs-series identity verification,
exponent-histogram PMFs, and representation counts for sums of powers.
"""

__version__ = "0.1.0"

from .classify import ArithFnHandle, ClassificationReport, classify, exp_transform, verify_decomposable
from .core import (
    Factorization,
    SieveTable,
    build_sieve,
    divisor_count,
    divisor_power_sum,
    distinct_prime_count,
    euler_totient,
    exponent_power_sum,
    factorize,
    partition_count,
    prime_count_upto,
    primes_upto,
    trial_factorize,
)
from .identities import (
    AlphaBeta,
    IdentityCheckReport,
    LocalFactorSpec,
    alpha_beta,
    builtin_spec,
    euler_zeta_check,
    partition_product_check,
    truncated_product_eval,
    truncated_sum_eval,
    verify_per_term,
)
from .powerseries import (
    TruncatedSeries,
    geometric_factor,
    ps_add,
    ps_eval,
    ps_mul,
    ps_pow,
    ps_pow_recurrence,
)
from .probnum import ArithPolynomial, Pmf, build_polynomial, eval_at_one, moment, normalize
from .waring import (
    RepCountTable,
    brute_force_count,
    correlation_counts,
    essentially_distinct_two_squares,
    four_square_counts,
    generalized_theta,
    primes_4k1_count,
    theta_series,
    two_square_counts,
    verify_lemma_g,
    waring_counts,
)

__all__ = [
    "__version__",
    "ArithFnHandle",
    "ArithPolynomial",
    "AlphaBeta",
    "ClassificationReport",
    "Factorization",
    "IdentityCheckReport",
    "LocalFactorSpec",
    "Pmf",
    "RepCountTable",
    "SieveTable",
    "TruncatedSeries",
    "alpha_beta",
    "brute_force_count",
    "build_polynomial",
    "build_sieve",
    "builtin_spec",
    "classify",
    "correlation_counts",
    "distinct_prime_count",
    "divisor_count",
    "divisor_power_sum",
    "essentially_distinct_two_squares",
    "euler_totient",
    "euler_zeta_check",
    "eval_at_one",
    "exp_transform",
    "exponent_power_sum",
    "factorize",
    "four_square_counts",
    "generalized_theta",
    "geometric_factor",
    "moment",
    "normalize",
    "partition_count",
    "partition_product_check",
    "prime_count_upto",
    "primes_4k1_count",
    "primes_upto",
    "ps_add",
    "ps_eval",
    "ps_mul",
    "ps_pow",
    "ps_pow_recurrence",
    "theta_series",
    "trial_factorize",
    "truncated_product_eval",
    "truncated_sum_eval",
    "two_square_counts",
    "verify_decomposable",
    "verify_lemma_g",
    "verify_per_term",
    "waring_counts",
]

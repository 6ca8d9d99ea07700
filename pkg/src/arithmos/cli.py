"""Command-line interface: tables, identity verification, classification,
representation counts, and histogram/PMF summaries.

Reports are deterministic: identical configurations produce byte-identical
output. Structured reports separate a reproducibility header (command,
parameters, version) from the data body; CSV output always carries a
header row. Exact rationals are rendered as ``num/den`` in lowest terms;
very large rationals (truncation gaps) are rendered as fixed-precision
decimals.

Exit codes: 0 success / all checks passed, 1 runtime failure or a failed
check (the report is still written), 2 bad arguments.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import __version__
from .classify import classify as run_classification
from .classify import verify_decomposable
from .core import build_sieve
from .functions import FUNCTION_IDS, INTEGER_FUNCTION_IDS, constant_one, make_handle
from .identities import (
    builtin_spec,
    euler_zeta_check,
    numeric_identity_check,
    partition_product_check,
    verify_per_term,
)
from .powerseries import format_rational, parse_rational
from .probnum import build_polynomial, eval_at_one, moment, normalize, shifted_sign_scan
from .waring import brute_force_count, verify_lemma_g, waring_counts

IDENTITY_IDS = ("lemma-a", "lemma-b", "lemma-c", "lemma-d", "euler-product", "partition-product")

LEMMA_DIRECT = {
    # identity id -> (alpha function id, beta function id); None means the constant 1
    "lemma-a": (None, "omega"),
    "lemma-b": ("sigma", "omega"),
    "lemma-c": ("d", "omega"),
    "lemma-d": (None, "L"),
}


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


def _decimal(value: Fraction) -> str:
    return f"{float(value):.12e}"


def _value_str(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _structured(command: str, params: dict, body: dict) -> str:
    doc = {
        "header": {
            "artifact": "arithmos",
            "version": __version__,
            "command": command,
            "parameters": params,
        },
        "body": body,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _csv(header: tuple[str, ...], rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(str(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out}", err=True)
    else:
        click.echo(text, nl=False)


def _parse_rational_opt(raw: str | None, flag: str) -> Fraction | None:
    if raw is None:
        return None
    try:
        return Fraction(parse_rational(raw))
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"{flag} must be a rational like 1/2: {exc}")


def _normalize_config(raw: dict) -> dict:
    # config keys mirror flags; fold them onto click's derived parameter names
    out = {}
    for command, section in raw.items():
        if isinstance(section, dict):
            out[command] = {key.replace("-", "_").lower(): val for key, val in section.items()}
        else:
            out[command] = section
    return out


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="arithmos")
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON file of per-command parameter defaults (keys mirror flags); explicit flags win.",
)
@click.pass_context
def cli(ctx: click.Context, config: str | None) -> None:
    """Exact-arithmetic number theory toolkit."""
    if config:
        with open(config, encoding="utf-8") as fh:
            try:
                ctx.default_map = _normalize_config(json.load(fh))
            except json.JSONDecodeError as exc:
                raise click.UsageError(f"bad config file {config}: {exc}")


@cli.command()
@click.option("--fn", required=True, type=click.Choice(INTEGER_FUNCTION_IDS), help="Function to tabulate.")
@click.option("--t", type=int, default=None, help="Power parameter (sigma/L only).")
@click.option("--nmax", type=int, required=True, help="Tabulate n = 1..NMAX.")
@click.option("--format", type=click.Choice(["csv", "structured"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file (default: stdout).")
def table(fn: str, t: int | None, nmax: int, format: str, out: str | None) -> None:
    """Write (n, f(n)) rows for n = 1..NMAX."""
    if nmax < 1:
        raise click.UsageError("--nmax must be >= 1")
    try:
        handle = make_handle(fn, t=t, sieve=build_sieve(max(nmax, 2)))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        rows = [(n, _value_str(handle.eval(n))) for n in range(1, nmax + 1)]
    except Exception as exc:  # noqa: BLE001 - report and exit 1
        _fail(exc)
        return
    params = {"fn": fn, "t": t, "nmax": nmax, "format": format}
    if format == "csv":
        _emit(_csv(("n", "value"), rows), out)
    else:
        _emit(_structured("table", params, {"function": handle.name, "rows": [list(r) for r in rows]}), out)


@cli.command()
@click.option("--identity", required=True, type=click.Choice(IDENTITY_IDS))
@click.option("--t", type=int, default=None, help="Power parameter (lemma-b needs t >= 0, lemma-d t >= 1).")
@click.option("--nmax", type=int, default=10000, show_default=True,
              help="Per-term range for lemma identities; sum truncation for euler-product and the numeric check.")
@click.option("--order", type=int, default=1000, show_default=True, help="Series order for partition-product.")
@click.option("--s", type=int, default=2, show_default=True, help="Exponent for euler-product.")
@click.option("--prime-bound", type=int, default=10000, show_default=True)
@click.option("--exp-bound", type=int, default=16, show_default=True)
@click.option("--x", default=None, help='Rational like "1/2"; enables the numeric product-vs-sum check.')
@click.option("--k", type=int, default=None, help="Integer exponent >= 2 for the numeric check (default 2).")
@click.option("--gap-tol", default=None,
              help="Rational tolerance; numeric and euler gaps above it fail the run.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def verify(identity: str, t: int | None, nmax: int, order: int, s: int,
           prime_bound: int, exp_bound: int, x: str | None, k: int | None,
           gap_tol: str | None, out: str | None) -> None:
    """Verify an identity; exit 0 only if every requested check passes."""
    gap_tol_value = _parse_rational_opt(gap_tol, "--gap-tol")
    params = {
        "identity": identity, "t": t, "nmax": nmax, "order": order, "s": s,
        "prime_bound": prime_bound, "exp_bound": exp_bound, "x": x,
        "k": k, "gap_tol": gap_tol,
    }
    body: dict = {}
    all_passed = True

    if identity in LEMMA_DIRECT:
        if nmax < 2:
            raise click.UsageError("--nmax must be >= 2")
        try:
            spec = builtin_spec(identity, t=t)
        except ValueError as exc:
            raise click.UsageError(str(exc))
        sieve = build_sieve(nmax)
        alpha_id, beta_id = LEMMA_DIRECT[identity]
        direct_alpha = constant_one() if alpha_id is None else make_handle(alpha_id, t=t, sieve=sieve)
        direct_beta = make_handle(beta_id, t=t if beta_id == "L" else None, sieve=sieve)
        try:
            report = verify_per_term(spec, direct_alpha, direct_beta, nmax, sieve=sieve)
        except Exception as exc:  # noqa: BLE001
            _fail(exc)
            return
        body["per_term"] = {
            "spec": spec.name,
            "n_max": nmax,
            "failures": list(report.per_term_failures),
            "passed": report.passed,
        }
        all_passed &= report.passed
        if x is not None:
            x_value = _parse_rational_opt(x, "--x")
            k_value = 2 if k is None else k
            if k_value < 2:
                raise click.UsageError("--k must be an integer >= 2")
            try:
                num = numeric_identity_check(spec, x_value, k_value, prime_bound, exp_bound, nmax, sieve=sieve)
            except Exception as exc:  # noqa: BLE001
                _fail(exc)
                return
            numeric_passed = None if gap_tol_value is None else num.gap <= gap_tol_value
            body["numeric"] = {
                "x": format_rational(num.x),
                "k": k_value,
                "prime_bound": num.prime_bound,
                "exp_bound": num.exp_bound,
                "n_max": nmax,
                "product": _decimal(num.lhs),
                "sum": _decimal(num.rhs),
                "gap": _decimal(num.gap),
                "gap_tol": gap_tol,
                "passed": numeric_passed,
            }
            if numeric_passed is False:
                all_passed = False
    elif identity == "euler-product":
        if s < 2:
            raise click.UsageError("--s must be an integer >= 2")
        if nmax < 1:
            raise click.UsageError("--nmax must be >= 1")
        try:
            check = euler_zeta_check(s, nmax, prime_bound)
        except Exception as exc:  # noqa: BLE001
            _fail(exc)
            return
        euler_passed = None if gap_tol_value is None else check.gap <= gap_tol_value
        body["euler"] = {
            "s": s,
            "n_max": nmax,
            "prime_bound": prime_bound,
            "sum": _decimal(check.sum_value),
            "product": _decimal(check.product_value),
            "gap": _decimal(check.gap),
            "gap_tol": gap_tol,
            "passed": euler_passed,
        }
        if euler_passed is False:
            all_passed = False
    else:  # partition-product
        if order < 1:
            raise click.UsageError("--order must be >= 1")
        try:
            report = partition_product_check(order)
        except Exception as exc:  # noqa: BLE001
            _fail(exc)
            return
        body["partition_product"] = {
            "order": order,
            "failures": list(report.per_term_failures),
            "passed": report.passed,
        }
        all_passed &= report.passed

    body["all_passed"] = bool(all_passed)
    _emit(_structured("verify", params, body), out)
    if not all_passed:
        sys.exit(1)


@cli.command("classify")
@click.option("--fn", required=True, type=click.Choice(FUNCTION_IDS))
@click.option("--t", type=int, default=None, help="Power parameter (sigma/L only).")
@click.option("--bound", type=int, required=True, help="Test all pairs with m*n <= BOUND.")
@click.option("--decomposable", type=click.Choice(["multiplicative", "additive"]), default=None,
              help="Also check reconstruction from the prime-power table g(p,a) = f(p^a).")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def classify_cmd(fn: str, t: int | None, bound: int, decomposable: str | None, out: str | None) -> None:
    """Classify a function over 1..BOUND; the verdict lives in the report."""
    if bound < 4:
        raise click.UsageError("--bound must be >= 4")
    try:
        handle = make_handle(fn, t=t, sieve=build_sieve(bound))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        report = run_classification(handle, bound)
        body = report.to_dict()
        if decomposable:
            body["decomposable"] = verify_decomposable(handle, decomposable, bound).to_dict()
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
        return
    params = {"fn": fn, "t": t, "bound": bound, "decomposable": decomposable}
    _emit(_structured("classify", params, body), out)


@cli.command()
@click.option("--s", type=int, required=True, help="Even power >= 2.")
@click.option("--t", type=int, default=None, help="Number of summands for the count table.")
@click.option("--order", type=int, required=True, help="Highest index in the count table.")
@click.option("--check-bruteforce", type=int, default=None,
              help="Cross-check counts against enumeration for m <= LIMIT.")
@click.option("--lemma-g", type=(int, int), default=None,
              help="Check the (T+R)-th power against the product of the T-th and R-th.")
@click.option("--format", type=click.Choice(["csv", "structured"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def waring(s: int, t: int | None, order: int, check_bruteforce: int | None,
           lemma_g: tuple[int, int] | None, format: str, out: str | None) -> None:
    """Representation-count tables for sums of s-th powers, with cross-checks."""
    if s < 2 or s % 2:
        raise click.UsageError(f"odd power s={s} is unsupported; use an even s >= 2")
    if order < 0:
        raise click.UsageError("--order must be >= 0")
    if t is None and lemma_g is None:
        raise click.UsageError("provide --t for a count table and/or --lemma-g T R")
    if t is not None and t < 1:
        raise click.UsageError("--t must be >= 1")

    params = {"s": s, "t": t, "order": order,
              "check_bruteforce": check_bruteforce,
              "lemma_g": list(lemma_g) if lemma_g else None,
              "format": format}
    body: dict = {}
    all_passed = True
    counts = None
    try:
        if t is not None:
            counts = waring_counts(s, t, order)
            body["counts"] = list(counts.counts)
            if check_bruteforce is not None:
                top = min(check_bruteforce, order)
                mismatches = [
                    m for m in range(top + 1)
                    if counts.counts[m] != brute_force_count(m, s, t)
                ]
                body["bruteforce_check"] = {
                    "limit": top, "mismatches": mismatches, "passed": not mismatches,
                }
                all_passed &= not mismatches
        if lemma_g is not None:
            t_part, r_part = lemma_g
            if t_part < 1 or r_part < 1:
                raise click.UsageError("--lemma-g arguments must be >= 1")
            conv = verify_lemma_g(s, t_part, r_part, order)
            body["convolution_check"] = conv.to_dict()
            all_passed &= conv.ok
    except click.UsageError:
        raise
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
        return

    body["all_passed"] = bool(all_passed)
    if format == "csv" and counts is not None:
        _emit(_csv(("m", "count"), enumerate(counts.counts)), out)
    else:
        _emit(_structured("waring", params, body), out)
    if not all_passed:
        sys.exit(1)


@cli.command()
@click.option("--beta", required=True, type=click.Choice(INTEGER_FUNCTION_IDS),
              help="Exponent function for the histogram.")
@click.option("--t", type=int, default=None, help="Power parameter (sigma/L only).")
@click.option("--M", "m", type=int, required=True, help="Histogram over n = 1..M.")
@click.option("--roots/--no-roots", default=False,
              help="Scan the shifted polynomial for real-root evidence (reported, never asserted).")
@click.option("--format", type=click.Choice(["csv", "structured"]), default="structured",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def probnum(beta: str, t: int | None, m: int, roots: bool, format: str, out: str | None) -> None:
    """Exponent histogram over 1..M, its exact PMF, and the first four moments."""
    if m < 1:
        raise click.UsageError("--M must be >= 1")
    try:
        handle = make_handle(beta, t=t, sieve=build_sieve(max(m, 2)))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        poly = build_polynomial(handle, m)
        pmf = normalize(poly)
        at_one = eval_at_one(poly)
        moments = {str(r): format_rational(moment(pmf, r)) for r in (1, 2, 3, 4)}
        total = sum(q for _, q in pmf.support)
        scan = shifted_sign_scan(poly) if roots else None
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
        return
    params = {"beta": beta, "t": t, "M": m, "roots": roots, "format": format}
    if format == "csv":
        rows = [(value, format_rational(q)) for value, q in pmf.support]
        _emit(_csv(("value", "probability"), rows), out)
        return
    body = {
        "beta": handle.name,
        "M": m,
        "polynomial": [[value, count] for value, count in poly.terms],
        "eval_at_one": at_one,
        "expected_at_one": m + 1,
        "pmf": [[value, format_rational(q)] for value, q in pmf.support],
        "total_probability": format_rational(total),
        "moments": moments,
    }
    if scan is not None:
        body["root_scan"] = scan
    _emit(_structured("probnum", params, body), out)


def main() -> None:
    cli(prog_name="arithmos")


if __name__ == "__main__":
    main()

"""Tables, validation suite and complexity benchmark behind the CLI."""

from __future__ import annotations

import csv
import io
import time
from decimal import Decimal

from . import combinatorics
from .approximation import (Verdict, envelope_relative_gap, error_report,
                            h_lim_rps, lemma2_bounds, lemma3_ratio,
                            log2_decimal, rps_envelope_limit, s_lim, stirling)
from .combinatorics import (clear_factorial_cache, count_multiplications,
                            factorial, floor_e_factorial, log2_of, s_envelope)
from .entropies import max_entropy_value
from .oracles import (enumeration_cross_check, perturb_and_compare,
                      simplex_ascent_maxent)

TABLE_COLUMNS = {
    1: ["N", "S(N)", "S_lim(N)", "ΔS_abs", "ΔS_rel",
        "H_max-RPS", "H_lim-RPS", "ΔH_abs", "ΔH_rel"],
    2: ["N", "N!", "S_t(N)", "ΔS_t-abs", "ΔS_t-rel",
        "log(N!)", "log(S_t(N))", "Δlog_t-abs", "Δlog_t-rel"],
    3: ["N", "H_max-SE", "H_max-DE", "H_max-RPS", "H_lim-RPS", "ΔH_RPS"],
}

DEFAULT_RANGES = {1: (10, 100, 10), 2: (10, 100, 10), 3: (1, 10, 1)}


def sci(x) -> str:
    """Three significant digits, uppercase exponent of at least two digits: ``3.96E+13``."""
    text = format(Decimal(x), ".2E") if isinstance(x, (int, Decimal)) else f"{x:.2E}"
    mantissa, exponent = text.split("E")
    return f"{mantissa}E{exponent[0]}{int(exponent[1:]):02d}"


def fixed5(x: float) -> str:
    return f"{x:.5f}"


def table1_row(n: int) -> dict:
    """S(N) against e (N!)^2, raw values and entropies."""
    exact = s_envelope(n)
    approx = s_lim(n)
    s_err = error_report(exact, approx)
    h_max = log2_of(exact)
    h_lim = h_lim_rps(n)
    h_err = error_report(Decimal(repr(h_max)), Decimal(repr(h_lim)))
    return {"N": n, "S(N)": exact, "S_lim(N)": approx,
            "ΔS_abs": s_err.absolute_error, "ΔS_rel": s_err.relative_error,
            "H_max-RPS": h_max, "H_lim-RPS": h_lim,
            "ΔH_abs": h_err.absolute_error, "ΔH_rel": h_err.relative_error}


def table2_row(n: int) -> dict:
    """N! against Stirling's formula."""
    exact = factorial(n)
    approx = stirling(n)
    err = error_report(exact, approx)
    log_exact = log2_of(exact)
    log_approx = log2_decimal(approx)
    log_err = error_report(Decimal(repr(log_exact)), Decimal(repr(log_approx)))
    return {"N": n, "N!": exact, "S_t(N)": approx,
            "ΔS_t-abs": err.absolute_error, "ΔS_t-rel": err.relative_error,
            "log(N!)": log_exact, "log(S_t(N))": log_approx,
            "Δlog_t-abs": log_err.absolute_error, "Δlog_t-rel": log_err.relative_error}


def table3_row(n: int) -> dict:
    """Maximum entropies of the three theories and the limit approximation.

    ``ΔH_RPS`` is a percentage, or None where the maximum is zero (N = 1).
    """
    h_max = max_entropy_value("rps", n)
    h_lim = h_lim_rps(n)
    return {"N": n,
            "H_max-SE": max_entropy_value("shannon", n),
            "H_max-DE": max_entropy_value("deng", n),
            "H_max-RPS": h_max,
            "H_lim-RPS": h_lim,
            "ΔH_RPS": None if h_max == 0 else 100 * (h_lim - h_max) / h_max}


_ROW_BUILDERS = {1: table1_row, 2: table2_row, 3: table3_row}


def table_rows(which: int, ns) -> list[dict]:
    if which not in _ROW_BUILDERS:
        raise ValueError(f"no table {which}; choose 1, 2 or 3")
    return [_ROW_BUILDERS[which](n) for n in ns]


def format_row(which: int, row: dict) -> list[str]:
    if which == 3:
        pct = row["ΔH_RPS"]
        return [str(row["N"])] + [fixed5(row[c]) for c in TABLE_COLUMNS[3][1:5]] + [
            "n/a" if pct is None else f"{pct:.2f}%"]
    return [str(row["N"])] + [sci(row[c]) for c in TABLE_COLUMNS[which][1:]]


def table_csv(which: int, ns) -> str:
    """CSV text of a table; the header matches the table's column names."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS[which])
    for row in table_rows(which, ns):
        writer.writerow(format_row(which, row))
    return out.getvalue()


# -- validation suite --------------------------------------------------------

def _check(name, failures):
    return {"check": name, "passed": not failures, "failures": failures}


def run_validation(n_max: int = 50, oracle_cap: int = 6, trials: int = 1000,
                   seed: int = 42, sa_func=None) -> dict:
    """Run every lemma, limit and oracle check; returns a JSON-ready report.

    ``sa_func`` replaces :func:`~rpsent.combinatorics.sa` when checking the
    floor identity, which lets tests inject a faulty implementation.
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    sa_func = sa_func or combinatorics.sa
    checks = []

    fails = []
    for n in range(1, n_max + 1):
        floor, value = floor_e_factorial(n), sa_func(n)
        if floor != value:
            fails.append({"n": n, "floor_e_factorial": str(floor), "sa": str(value)})
    checks.append(_check("lemma1_floor_identity", fails))

    fails = []
    for n in range(1, n_max + 1):
        res = lemma2_bounds(n)
        if res.verdict is not Verdict.HOLDS:
            fails.append({"n": n, "verdict": res.verdict.value})
    checks.append(_check("lemma2_sandwich", fails))

    fails = []
    previous = None
    for n in range(3, n_max + 1):
        ratio, bound = lemma3_ratio(n)
        if ratio > bound or (n == 3 and ratio != bound):
            fails.append({"n": n, "ratio_minus_one": str(ratio), "bound": str(bound)})
        if previous is not None and not ratio < previous:
            fails.append({"n": n, "not_decreasing": str(ratio)})
        previous = ratio
    checks.append(_check("lemma3_ratio", fails))

    fails = []
    previous = None
    for n in range(10, n_max + 1):
        gap = envelope_relative_gap(n)
        if previous is not None and not gap < previous:
            fails.append({"n": n, "relative_gap": str(gap)})
        previous = gap
    checks.append(_check("theorem4_decreasing_gap", fails))

    fails = [{"n": n} for n in range(1, oracle_cap + 1)
             if not enumeration_cross_check(n, cap=oracle_cap)]
    checks.append(_check("enumeration_cross_check", fails))

    fails = []
    for kind in ("deng", "rps"):
        for n in range(1, oracle_cap + 1):
            rep = perturb_and_compare(kind, n, trials, 0.05, seed + n, cap=oracle_cap)
            if rep.violations:
                fails.append({"kind": kind, "n": n, "violations": rep.violations,
                              "max_observed": rep.max_observed_entropy,
                              "closed_form": rep.closed_form_entropy})
    checks.append(_check("perturbation_maximality", fails))

    fails = []
    for kind in ("deng", "rps"):
        for n in range(1, oracle_cap + 1):
            closed = max_entropy_value(kind, n)
            res = simplex_ascent_maxent(kind, n, cap=oracle_cap)
            if abs(res.entropy - closed) > 1e-6 or res.entropy > closed + 1e-9:
                fails.append({"kind": kind, "n": n, "ascent": res.entropy,
                              "closed_form": closed})
    checks.append(_check("simplex_ascent", fails))

    failing = [c["check"] for c in checks if not c["passed"]]
    return {"n_max": n_max, "oracle_cap": oracle_cap, "seed": seed,
            "rng": "numpy.random.PCG64", "ok": not failing,
            "failing_checks": failing, "checks": checks}


# -- complexity benchmark ----------------------------------------------------

def bench_point(n: int) -> dict:
    """Multiplication counts and wall times for the exact and limit envelopes."""
    clear_factorial_cache()
    t0 = time.perf_counter()
    with count_multiplications() as exact_count:
        s_envelope(n)
    t1 = time.perf_counter()
    clear_factorial_cache()
    t2 = time.perf_counter()
    with count_multiplications() as limit_count:
        rps_envelope_limit(n)
    t3 = time.perf_counter()
    return {"N": n, "envelope_mults": exact_count.count, "limit_mults": limit_count.count,
            "envelope_seconds": t1 - t0, "limit_seconds": t3 - t2}


def scaling_ratios(n: int) -> tuple[float, float]:
    """Growth of each multiplication count when ``n`` doubles."""
    a, b = bench_point(n), bench_point(2 * n)
    return (b["envelope_mults"] / a["envelope_mults"],
            b["limit_mults"] / a["limit_mults"])


def bench_csv(ns, timing: bool = True) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["N", "envelope_mults", "limit_mults"]
    if timing:
        header += ["envelope_seconds", "limit_seconds"]
    writer.writerow(header)
    for n in ns:
        row = bench_point(n)
        values = [row["N"], row["envelope_mults"], row["limit_mults"]]
        if timing:
            values += [f"{row['envelope_seconds']:.6f}", f"{row['limit_seconds']:.6f}"]
        writer.writerow(values)
    return out.getvalue()

"""The e * (N!)^2 approximation of the RPS envelope and its error analysis.

Quantities that can be exact stay exact (integers, fractions, rational
brackets of e).  Quantities that are reported, such as the approximate
envelope or Stirling's formula, are carried as :class:`decimal.Decimal`
with ``PRECISION`` significant digits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .combinatorics import (RationalInterval, _mul, e_interval,
                            e_interval_relative, factorial, log2_of,
                            s_envelope, sum_ratio)
from .errors import DomainError

PRECISION = 50
LIMIT_REL_WIDTH = Fraction(1, 10 ** 30)
LEMMA2_REFINEMENT_CAP = 12

# 50 significant digits; cross-checked against machin_pi() in the tests.
PI = Decimal("3.1415926535897932384626433832795028841971693993751")

LOG2_E = 1 / math.log(2)


def machin_pi(digits: int = PRECISION) -> Decimal:
    """pi from Machin's formula 16 atan(1/5) - 4 atan(1/239)."""

    def arctan_inv(x: int) -> Decimal:
        x2 = x * x
        term = Decimal(1) / x
        total = term
        k = 1
        while True:
            term /= -x2
            delta = term / (2 * k + 1)
            if delta == 0 or abs(delta) < Decimal(10) ** -(digits + 5):
                return total
            total += delta
            k += 1

    with localcontext() as ctx:
        ctx.prec = digits + 10
        pi = 16 * arctan_inv(5) - 4 * arctan_inv(239)
    with localcontext() as ctx:
        ctx.prec = digits
        return +pi


def to_decimal(q: Fraction) -> Decimal:
    """Exact fraction rounded to PRECISION significant digits."""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return Decimal(q.numerator) / Decimal(q.denominator)


def rps_envelope_limit(n: int, rel_width: Fraction = LIMIT_REL_WIDTH) -> RationalInterval:
    """Rational bracket for e * (n!)^2 with relative width at most ``rel_width``."""
    if n < 1:
        raise DomainError("rps_envelope_limit needs n >= 1")
    f = factorial(n)
    return e_interval_relative(rel_width).scale(_mul(f, f))


def s_lim(n: int) -> Decimal:
    """e * (n!)^2 as a decimal, accurate to the reporting precision."""
    return to_decimal(rps_envelope_limit(n, Fraction(1, 10 ** (PRECISION + 2))).midpoint)


def h_lim_rps(n: int) -> float:
    """log2(e * (n!)^2) in bits."""
    if n < 1:
        raise DomainError("h_lim_rps needs n >= 1")
    return LOG2_E + 2 * log2_of(factorial(n))


def stirling(n: int) -> Decimal:
    """Stirling's formula sqrt(2 pi n) (n/e)^n, evaluated in the log domain."""
    if n < 1:
        raise DomainError("stirling needs n >= 1")
    with localcontext() as ctx:
        ctx.prec = PRECISION + 10
        dn = Decimal(n)
        log_value = (2 * PI * dn).ln() / 2 + dn * (dn.ln() - 1)
        value = log_value.exp()
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return +value


def log2_decimal(x: Decimal) -> float:
    """Base-2 logarithm of a positive decimal."""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return float(x.ln() / Decimal(2).ln())


@dataclass(frozen=True)
class ErrorReport:
    """Absolute and relative error of ``approx`` against ``exact``.

    ``relative_error`` is None when ``exact`` is zero.
    """

    exact: Decimal
    approx: Decimal
    absolute_error: Decimal
    relative_error: Decimal | None

    @property
    def relative_defined(self) -> bool:
        return self.relative_error is not None


def error_report(exact, approx) -> ErrorReport:
    """Errors with the sign convention (approx - exact) / exact."""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        exact = Decimal(exact)
        approx = Decimal(approx)
        absolute = approx - exact
        relative = None if exact == 0 else absolute / exact
    return ErrorReport(exact, approx, absolute, relative)


# -- lemma checks ------------------------------------------------------------

class Verdict(str, enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class BoundsCheck:
    """Outcome of checking lower <= value <= upper with e enclosed by intervals."""

    n: int
    lower: RationalInterval
    upper: RationalInterval
    value: int
    verdict: Verdict
    e_terms: int


def _sandwich(n: int, terms: int, value: int, ratio: Fraction, nf: int):
    e = e_interval(terms)
    lower = e.scale(nf * (ratio - 2)).shift(1)
    upper = e.scale(nf * (ratio - 1)).shift(2)
    if lower.hi <= value <= upper.lo:
        verdict = Verdict.HOLDS
    elif lower.lo > value or upper.hi < value:
        verdict = Verdict.VIOLATED
    else:
        verdict = Verdict.INDETERMINATE
    return BoundsCheck(n, lower, upper, value, verdict, terms)


def lemma2_bounds(n: int, value: int | None = None,
                  refinement_cap: int = LEMMA2_REFINEMENT_CAP) -> BoundsCheck:
    """Check e n! (R - 2) + 1 <= S(n) <= e n! (R - 1) + 2, where R = sum_ratio(n).

    The e bracket starts at n + 10 Taylor terms and doubles while the verdict
    is indeterminate; if the cap is reached the indeterminate verdict is
    returned as is.  ``value`` overrides S(n), for fault injection.
    """
    if n < 1:
        raise DomainError("lemma2_bounds needs n >= 1")
    if value is None:
        value = s_envelope(n)
    ratio = sum_ratio(n)
    nf = factorial(n)
    terms = n + 10
    check = _sandwich(n, terms, value, ratio, nf)
    for _ in range(refinement_cap):
        if check.verdict is not Verdict.INDETERMINATE:
            break
        terms *= 2
        check = _sandwich(n, terms, value, ratio, nf)
    return check


def lemma3_ratio(n: int) -> tuple[Fraction, Fraction]:
    """(sum_ratio(n)/n! - 1, (n-2)/(2n(n-1)) + 1/n), both exact."""
    if n < 3:
        raise DomainError("lemma3_ratio needs n >= 3")
    ratio_minus_one = sum_ratio(n) / factorial(n) - 1
    bound = Fraction(n - 2, 2 * n * (n - 1)) + Fraction(1, n)
    return ratio_minus_one, bound


def envelope_relative_gap(n: int) -> Decimal:
    """|S(n) / (e (n!)^2) - 1|."""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return abs(Decimal(s_envelope(n)) / s_lim(n) - 1)

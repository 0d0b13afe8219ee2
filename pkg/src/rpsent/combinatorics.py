"""Exact combinatorial quantities and rational brackets for e.

Everything here works on Python integers and :class:`fractions.Fraction`,
so no quantity overflows at any frame size used by the package.  The
constant e is never approximated by a float; it is enclosed in a
:class:`RationalInterval` built from a truncated Taylor series plus a
rigorous tail bound.

Big-integer multiplications performed by the routines below can be tallied
with :func:`count_multiplications`, which the complexity benchmark uses.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CapExceededError, DomainError, PrecisionExhaustedError

FACTORIAL_CAP = 10_000
FLOOR_REFINEMENT_CAP = 24

_MANTISSA_BITS = 96


# -- multiplication counting -------------------------------------------------

class MultiplicationCounter:
    """Tally of big-integer multiplications made inside a counting block."""

    def __init__(self):
        self.count = 0

    def __repr__(self):
        return f"MultiplicationCounter(count={self.count})"


_active_counter: contextvars.ContextVar[MultiplicationCounter | None] = (
    contextvars.ContextVar("rpsent_mul_counter", default=None))


@contextlib.contextmanager
def count_multiplications():
    """Count multiplications made by this module inside a ``with`` block.

    >>> with count_multiplications() as c:
    ...     _ = permutations(10, 3)
    >>> c.count
    3
    """
    counter = MultiplicationCounter()
    token = _active_counter.set(counter)
    try:
        yield counter
    finally:
        _active_counter.reset(token)


def _mul(a, b):
    counter = _active_counter.get()
    if counter is not None:
        counter.count += 1
    return a * b


# -- factorials --------------------------------------------------------------

# 0! and 1! are base cases; every later entry costs one multiplication
_factorials = [1, 1]
_factorial_lock = threading.Lock()


def factorial(n: int) -> int:
    """Return ``n!`` exactly, memoized in an append-only table."""
    if n < 0:
        raise DomainError(f"factorial of negative number {n}")
    if n > FACTORIAL_CAP:
        raise CapExceededError(
            f"factorial({n}) exceeds the configured cap {FACTORIAL_CAP}")
    table = _factorials
    if n < len(table):
        return table[n]
    with _factorial_lock:
        while len(table) <= n:
            table.append(_mul(table[-1], len(table)))
        return table[n]


def clear_factorial_cache():
    """Drop memoized factorials (used to benchmark from a cold start)."""
    with _factorial_lock:
        del _factorials[2:]


def permutations(n: int, k: int) -> int:
    """Number of ordered selections of ``k`` items out of ``n``: n!/(n-k)!."""
    if n < 0 or k < 0:
        raise DomainError(f"permutations({n}, {k}) needs non-negative arguments")
    if k > n:
        raise DomainError(f"cannot select {k} items out of {n}")
    result = 1
    for factor in range(n - k + 1, n + 1):
        result = _mul(result, factor)
    return result


def sa(n: int) -> int:
    """Total number of ordered arrangements of all subsets of an n-set.

    Computed as the integer sum of ``n!/(n-u)!`` for ``u = 0..n``, growing
    each falling factorial from the previous one.
    """
    if n < 0:
        raise DomainError(f"sa({n}) needs n >= 0")
    total = 1
    term = 1
    for u in range(1, n + 1):
        term = _mul(term, n - u + 1)
        total += term
    return total


def s_envelope(n: int) -> int:
    """Exact envelope of RPS entropy: sum over u of A(n, u) * (sa(u) - 1).

    Each term is evaluated from scratch, so the cost is quadratic in ``n``
    big-integer multiplications.
    """
    if n < 1:
        raise DomainError(f"s_envelope({n}) needs n >= 1")
    total = 0
    for u in range(1, n + 1):
        total += _mul(permutations(n, u), sa(u) - 1)
    return total


def sum_ratio(n: int) -> Fraction:
    """Exact value of the sum over u = 1..n of u!/(n-u)!."""
    if n < 1:
        raise DomainError(f"sum_ratio({n}) needs n >= 1")
    return sum((Fraction(factorial(u), factorial(n - u)) for u in range(1, n + 1)),
               Fraction(0))


# -- rational intervals ------------------------------------------------------

@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def scale(self, factor) -> RationalInterval:
        """Multiply by an exact scalar, flipping the endpoints if it is negative."""
        factor = Fraction(factor)
        a = _mul(self.lo, factor)
        b = _mul(self.hi, factor)
        return RationalInterval(min(a, b), max(a, b))

    def shift(self, offset) -> RationalInterval:
        return RationalInterval(self.lo + offset, self.hi + offset)

    def floor(self) -> int | None:
        """Common floor of both endpoints, or None if the interval straddles an integer."""
        lo, hi = math.floor(self.lo), math.floor(self.hi)
        return lo if lo == hi else None


@lru_cache(maxsize=64)
def e_interval(terms: int) -> RationalInterval:
    """Bracket e between the Taylor partial sum up to ``1/terms!`` and that
    sum plus the tail bound ``1/(terms! * terms)``.
    """
    if terms < 2:
        raise DomainError(f"e_interval needs terms >= 2, got {terms}")
    # sum_{k<=M} 1/k! = (sum_{k<=M} M!/k!) / M!, accumulated from k = M down
    numerator = 0
    falling = 1
    for k in range(terms, -1, -1):
        numerator += falling
        falling *= k
    m_fact = math.factorial(terms)
    lo = Fraction(numerator, m_fact)
    return RationalInterval(lo, lo + Fraction(1, m_fact * terms))


def e_interval_relative(rel_width: Fraction) -> RationalInterval:
    """Smallest doubling-refined e bracket whose width/lo is at most ``rel_width``."""
    terms = 16
    while True:
        interval = e_interval(terms)
        if interval.width <= rel_width * interval.lo:
            return interval
        terms *= 2


def floor_e_times(k: int, start_terms: int, cap: int = FLOOR_REFINEMENT_CAP) -> int:
    """Rigorously decide floor(e * k) for a positive integer ``k``."""
    terms = start_terms
    for _ in range(cap):
        common = e_interval(terms).scale(k).floor()
        if common is not None:
            return common
        terms *= 2
    raise PrecisionExhaustedError(
        f"could not decide floor(e * {k}) after {cap} refinements")


def floor_e_factorial(n: int) -> int:
    """floor(e * n!), decided from e brackets starting at n + 10 terms."""
    return floor_e_times(factorial(n), n + 10)


def verify_floor_identity(n: int) -> bool:
    """Check that sa(n) equals floor(e * n!) for n >= 1."""
    if n < 1:
        raise DomainError("the floor identity only holds for n >= 1")
    return floor_e_factorial(n) == sa(n)


# -- logarithms of big integers ----------------------------------------------

def log2_of(x: int, digits: int = 12) -> float:
    """Base-2 logarithm of a positive integer of any size.

    The top 96 bits give the mantissa; the remaining bit count is added
    back exactly.  Raises ValueError if a float result cannot carry the
    requested ``digits`` decimals at this magnitude.
    """
    if x < 1:
        raise DomainError(f"log2_of needs x >= 1, got {x}")
    shift = max(x.bit_length() - _MANTISSA_BITS, 0)
    result = shift + math.log2(x >> shift)
    if math.ulp(result) > 10.0 ** -digits:
        raise ValueError(
            f"log2 of a {x.bit_length()}-bit integer cannot be held to "
            f"{digits} decimals in double precision")
    return result

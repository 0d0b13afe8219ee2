"""Shannon, Deng and RPS entropy, their maximizers and envelopes.

All entropies are in bits.  The maximizing distributions are returned with
exact rational masses; the envelope of an entropy is the integer inside the
logarithm at its maximum: ``n`` for Shannon, ``3**n - 2**n`` for Deng and
:func:`~rpsent.combinatorics.s_envelope` for RPS.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .belief import (BPA, ENUMERATION_CAP, PMF, Frame, SUM_TOLERANCE,
                     enumerate_pes, enumerate_power_set, validate_bpa,
                     validate_pmf)
from .combinatorics import log2_of, permutations, s_envelope, sa
from .errors import CapExceededError, DomainError

KINDS = ("shannon", "deng", "rps")


def _self_information(m, weight: int) -> float:
    """m * log2(weight / m), exact-input aware; zero mass contributes zero."""
    if m == 0:
        return 0.0
    if isinstance(m, (int, Fraction)):
        m = Fraction(m)
        # log2 of the big-integer numerator and denominator separately
        return float(m) * (math.log2(weight * m.denominator) - math.log2(m.numerator))
    return m * math.log2(weight / m)


def shannon_entropy(dist) -> float:
    """Shannon entropy of a probability list, with 0 log 0 = 0."""
    dist = list(dist)
    if any(p < 0 for p in dist):
        raise DomainError("probabilities must be non-negative")
    exact = all(isinstance(p, (int, Fraction)) for p in dist)
    total = sum(dist)
    if (total != 1) if exact else abs(total - 1) > SUM_TOLERANCE:
        raise DomainError(f"probabilities sum to {float(total)!r}, not 1")
    return sum(_self_information(p, 1) for p in dist)


def deng_entropy(bpa: BPA) -> float:
    """Deng entropy: each subset M is weighted by its 2^|M| - 1 nonempty subsets."""
    report = validate_bpa(bpa)
    if not report.ok:
        raise DomainError(f"invalid BPA: {report}")
    return sum(_self_information(m, 2 ** len(event) - 1)
               for event, m in bpa.masses.items() if len(event) > 0)


def rps_entropy(pmf: PMF) -> float:
    """RPS entropy: a length-i event is weighted by sa(i) - 1."""
    report = validate_pmf(pmf)
    if not report.ok:
        raise DomainError(f"invalid PMF: {report}")
    weights: dict[int, int] = {}
    total = 0.0
    for event, m in pmf.masses.items():
        i = len(event)
        if i == 0:
            continue
        if i not in weights:
            weights[i] = sa(i) - 1
        total += _self_information(m, weights[i])
    return total


def max_deng_bpa(n: int, cap: int = ENUMERATION_CAP) -> BPA:
    """BPA attaining maximum Deng entropy: mass of M proportional to 2^|M| - 1."""
    if n < 1:
        raise DomainError("frame size must be at least 1")
    if n > cap:
        raise CapExceededError(f"frame size {n} exceeds the enumeration cap {cap}")
    frame = Frame.of_size(n)
    denom = 3 ** n - 2 ** n
    return BPA(frame, {e: Fraction(2 ** len(e) - 1, denom)
                       for e in enumerate_power_set(frame, cap) if e})


def max_rps_pmf(n: int, cap: int = ENUMERATION_CAP) -> PMF:
    """PMF attaining maximum RPS entropy: mass of a length-i event is
    (sa(i) - 1) / s_envelope(n)."""
    if n < 1:
        raise DomainError("frame size must be at least 1")
    if n > cap:
        raise CapExceededError(f"frame size {n} exceeds the enumeration cap {cap}")
    frame = Frame.of_size(n)
    denom = s_envelope(n)
    per_length = {i: Fraction(sa(i) - 1, denom) for i in range(1, n + 1)}
    return PMF(frame, {e: per_length[len(e)]
                       for e in enumerate_pes(frame, cap) if e})


def max_rps_per_length(n: int) -> list[tuple[int, int, Fraction]]:
    """(length, number of events, mass per event) for the RPS maximizer,
    without enumerating the event space."""
    denom = s_envelope(n)
    return [(i, permutations(n, i), Fraction(sa(i) - 1, denom))
            for i in range(1, n + 1)]


def envelope(kind: str, n: int) -> int:
    """Integer whose base-2 logarithm is the maximum entropy of ``kind``."""
    if n < 1:
        raise DomainError("frame size must be at least 1")
    if kind == "shannon":
        return n
    if kind == "deng":
        return 3 ** n - 2 ** n
    if kind == "rps":
        return s_envelope(n)
    raise ValueError(f"unknown entropy kind {kind!r}; expected one of {KINDS}")


def max_entropy_value(kind: str, n: int) -> float:
    """Maximum entropy in bits over a frame of size ``n``."""
    return log2_of(envelope(kind, n), digits=12)

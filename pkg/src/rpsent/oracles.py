"""Independent checks of the closed-form maximizers.

These routines never consult the closed-form envelopes to build their
candidate distributions.  They enumerate events directly, then either
perturb the claimed maximizer at random or climb the entropy surface from
the uniform distribution, and compare what they find against the claim.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .belief import (ENUMERATION_CAP, Frame, enumerate_pes,
                     enumerate_power_set)
from .combinatorics import s_envelope, sa
from .entropies import max_deng_bpa, max_entropy_value, max_rps_pmf
from .errors import CapExceededError, ConvergenceError

RNG_ALGORITHM = "numpy.random.PCG64"
VIOLATION_TOLERANCE = 1e-9


def _events_and_weights(kind: str, n: int, cap: int):
    """Nonempty events of the frame with their alternative counts."""
    if n > cap:
        raise CapExceededError(f"frame size {n} exceeds the enumeration cap {cap}")
    frame = Frame.of_size(n)
    if kind == "deng":
        events = [e for e in enumerate_power_set(frame, cap) if e]
        weights = np.array([2.0 ** len(e) - 1 for e in events])
    elif kind == "rps":
        events = [e for e in enumerate_pes(frame, cap) if e]
        per_len = {i: float(sa(i) - 1) for i in range(1, n + 1)}
        weights = np.array([per_len[len(e)] for e in events])
    else:
        raise ValueError(f"oracles cover 'deng' and 'rps', not {kind!r}")
    return events, weights


def weighted_entropy(p: np.ndarray, weights: np.ndarray) -> float:
    """-sum p log2(p / w) over the support of ``p``."""
    mask = p > 0
    q = p[mask]
    return float(-np.sum(q * np.log2(q / weights[mask])))


@dataclass(frozen=True)
class PerturbationTrialReport:
    kind: str
    n: int
    trials: int
    step: float
    seed: int
    max_observed_entropy: float
    closed_form_entropy: float
    violations: int
    rng: str = RNG_ALGORITHM

    @property
    def passed(self) -> bool:
        return self.violations == 0


def perturb_and_compare(kind: str, n: int, trials: int = 1000, step: float = 0.05,
                        seed: int = 0, cap: int = ENUMERATION_CAP) -> PerturbationTrialReport:
    """Random walk away from the closed-form maximizer, counting entropy gains.

    Each trial moves a random amount of mass, at most ``step``, from one
    event to another and renormalizes onto the simplex.  A violation is a
    walk position whose entropy exceeds the closed form by more than 1e-9 bits.
    """
    if not 0 < step < 0.5:
        raise ValueError("step must lie in (0, 0.5)")
    events, weights = _events_and_weights(kind, n, cap)
    claimed = max_deng_bpa(n, cap) if kind == "deng" else max_rps_pmf(n, cap)
    p = np.array([float(claimed.masses[e]) for e in events])
    closed = max_entropy_value(kind, n)

    rng = np.random.Generator(np.random.PCG64(seed))
    best = weighted_entropy(p, weights)
    violations = 0
    size = len(p)
    for _ in range(trials):
        if size > 1:
            i, j = rng.choice(size, size=2, replace=False)
            amount = min(rng.uniform(0.0, step), p[i])
            p[i] -= amount
            p[j] += amount
            np.clip(p, 0.0, None, out=p)
            p /= p.sum()
        h = weighted_entropy(p, weights)
        best = max(best, h)
        if h > closed + VIOLATION_TOLERANCE:
            violations += 1
    return PerturbationTrialReport(kind, n, trials, step, seed, best, closed, violations)


@dataclass(frozen=True)
class AscentResult:
    entropy: float
    distribution: np.ndarray
    iterations: int
    events: list


def simplex_ascent_maxent(kind: str, n: int, tolerance: float = 1e-10,
                          max_iters: int = 100_000, rate: float = 0.5,
                          cap: int = ENUMERATION_CAP) -> AscentResult:
    """Maximize the weighted entropy over the simplex by exponentiated gradient.

    Starts from the uniform distribution on nonempty events.  With the
    natural-log gradient scaled by ``rate`` the update is
    ``p <- p**(1-rate) * w**rate`` (renormalized), which increases the
    entropy at every step; a decrease beyond rounding noise is raised as an
    error.  Stops once the per-iteration gain drops below ``tolerance``.
    """
    if not 0 < rate <= 1:
        raise ValueError("rate must lie in (0, 1]")
    events, weights = _events_and_weights(kind, n, cap)
    log_w = np.log(weights)
    log_p = np.full(len(weights), -np.log(len(weights)))
    h = weighted_entropy(np.exp(log_p), weights)
    for it in range(1, max_iters + 1):
        # grad of -sum p ln(p/w) is -ln(p/w) - 1; the constant drops out on renormalizing
        log_p = log_p + rate * (log_w - log_p)
        log_p -= np.logaddexp.reduce(log_p)
        p = np.exp(log_p)
        h_new = weighted_entropy(p, weights)
        if h_new < h - 1e-12:
            raise ConvergenceError(f"entropy decreased at iteration {it}: {h} -> {h_new}")
        gain = h_new - h
        h = h_new
        if gain < tolerance:
            return AscentResult(h, p, it, events)
    raise ConvergenceError(f"no convergence within {max_iters} iterations")


def enumeration_cross_check(n: int, cap: int = ENUMERATION_CAP) -> bool:
    """Enumerated event spaces agree with every closed-form count."""
    frame = Frame.of_size(n)
    pes = enumerate_pes(frame, cap)
    power = enumerate_power_set(frame, cap)
    if len(pes) != sa(n) or len(set(pes)) != len(pes):
        return False
    if len(power) != 2 ** n or len(set(power)) != len(power):
        return False
    rps_sum = sum(sa(len(e)) - 1 for e in pes if e)
    deng_sum = sum(2 ** len(e) - 1 for e in power if e)
    return rps_sum == s_envelope(n) and deng_sum == 3 ** n - 2 ** n

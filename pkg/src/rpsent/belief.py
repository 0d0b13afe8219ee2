"""Frames of discernment, events and mass assignments.

A :class:`BPA` assigns mass to subsets of a frame (Dempster-Shafer); a
:class:`PMF` assigns mass to permutation events, i.e. ordered arrangements
of subsets.  Events absent from a mass map carry mass zero.

Masses are either exact :class:`~fractions.Fraction` values or floats.  A
mass map made only of fractions must sum to exactly one; as soon as a
float is involved the unit sum is checked to within ``SUM_TOLERANCE``.

Documents on disk use this JSON layout::

    {"frame": ["a", "b"], "kind": "pmf",
     "masses": [{"event": ["b", "a"], "mass": "2/5"}, ...]}
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .combinatorics import sa
from .errors import CapExceededError, DocumentError

ENUMERATION_CAP = 8
SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Frame:
    """A finite universe of distinct, ordered element labels."""

    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        if not elements:
            raise ValueError("a frame needs at least one element")
        if len(set(elements)) != len(elements):
            raise ValueError(f"frame labels are not distinct: {elements}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of_size(cls, n: int) -> Frame:
        """Frame with labels ``x1 .. xn``."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an element of the frame") from None

    def labels(self, event) -> list[str]:
        return [self.elements[i] for i in event]


class SubsetEvent(tuple):
    """Unordered event: element indices kept sorted and unique."""

    def __new__(cls, members=()):
        return super().__new__(cls, sorted(set(members)))

    def __repr__(self):
        return f"SubsetEvent({tuple(self)!r})"


class PermutationEvent(tuple):
    """Ordered event: element indices in the order given.

    Repeated indices are representable so that validation can report
    them; they never appear in an enumerated permutation event space.
    """

    def __new__(cls, sequence=()):
        return super().__new__(cls, sequence)

    def __repr__(self):
        return f"PermutationEvent({tuple(self)!r})"

    def as_subset(self) -> SubsetEvent:
        return SubsetEvent(self)


def _check_cap(frame: Frame, cap: int):
    if frame.n > cap:
        raise CapExceededError(
            f"frame of size {frame.n} exceeds the enumeration cap {cap}")


def enumerate_power_set(frame: Frame, cap: int = ENUMERATION_CAP) -> list[SubsetEvent]:
    """All 2^N subsets ordered by size, then lexicographically."""
    _check_cap(frame, cap)
    indices = range(frame.n)
    return [SubsetEvent(c) for size in range(frame.n + 1)
            for c in itertools.combinations(indices, size)]


def enumerate_pes(frame: Frame, cap: int = ENUMERATION_CAP) -> list[PermutationEvent]:
    """Permutation event space: every ordering of every subset, empty event
    first, ordered by length then lexicographically on index sequences.
    """
    _check_cap(frame, cap)
    indices = range(frame.n)
    return [PermutationEvent(p) for size in range(frame.n + 1)
            for p in itertools.permutations(indices, size)]


# -- mass assignments --------------------------------------------------------

@dataclass(frozen=True)
class BPA:
    """Basic probability assignment over subsets of ``frame``."""

    frame: Frame
    masses: dict = field(default_factory=dict)

    kind = "bpa"

    def mass(self, event) -> Fraction | float:
        return self.masses.get(SubsetEvent(event), 0)

    def is_singleton_only(self) -> bool:
        return all(len(e) == 1 for e, m in self.masses.items() if m != 0)


@dataclass(frozen=True)
class PMF:
    """Permutation mass function over ordered events of ``frame``."""

    frame: Frame
    masses: dict = field(default_factory=dict)

    kind = "pmf"

    def mass(self, event) -> Fraction | float:
        return self.masses.get(PermutationEvent(event), 0)

    def is_singleton_only(self) -> bool:
        return all(len(e) == 1 for e, m in self.masses.items() if m != 0)


@dataclass
class ValidationReport:
    """Outcome of validating a mass assignment; empty ``problems`` means valid."""

    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(self.problems)


def _fmt_mass(m) -> str:
    return str(m) if isinstance(m, Fraction) else f"{m:.9g}"


def _validate_masses(frame: Frame, masses: dict, ordered: bool) -> ValidationReport:
    report = ValidationReport()
    total = 0
    exact = True
    for event, m in masses.items():
        names = [frame.elements[i] if 0 <= i < frame.n else f"#{i}" for i in event]
        if any(not 0 <= i < frame.n for i in event):
            report.problems.append(f"event {names} refers to elements outside the frame")
        if ordered and len(set(event)) != len(event):
            report.problems.append(f"event {names} repeats an element")
        if len(event) == 0 and m != 0:
            report.problems.append(f"empty event carries mass {_fmt_mass(m)}")
        if m < 0:
            report.problems.append(f"event {names} has negative mass {_fmt_mass(m)}")
        exact = exact and isinstance(m, (int, Fraction))
        total += m
    if exact:
        if total != 1:
            report.problems.append(f"mass sum {_fmt_mass(Fraction(total))} is not 1")
    elif abs(total - 1) > SUM_TOLERANCE:
        report.problems.append(
            f"mass sum {_fmt_mass(float(total))} differs from 1 by more than {SUM_TOLERANCE:g}")
    return report


def validate_bpa(bpa: BPA) -> ValidationReport:
    return _validate_masses(bpa.frame, bpa.masses, ordered=False)


def validate_pmf(pmf: PMF) -> ValidationReport:
    return _validate_masses(pmf.frame, pmf.masses, ordered=True)


def project_pmf_to_bpa(pmf: PMF) -> BPA:
    """Forget event order: masses of all orderings of a set are added together."""
    masses: dict = {}
    for event, m in pmf.masses.items():
        key = SubsetEvent(event)
        masses[key] = masses.get(key, 0) + m
    return BPA(pmf.frame, masses)


def pes_size(frame: Frame) -> int:
    """Size of the permutation event space without enumerating it."""
    return sa(frame.n)


# -- JSON documents ----------------------------------------------------------

def parse_mass(text) -> Fraction | float:
    """Parse ``"p/q"`` as an exact fraction and anything else as a decimal."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        return float(text)
    if not isinstance(text, str):
        raise DocumentError(f"mass must be a string or number, got {text!r}")
    text = text.strip()
    try:
        if "/" in text:
            return Fraction(text)
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"cannot parse mass {text!r}") from None


def format_mass(m) -> str:
    if isinstance(m, (int, Fraction)):
        m = Fraction(m)
        return f"{m.numerator}/{m.denominator}"
    return repr(float(m))


def from_dict(doc: dict) -> BPA | PMF:
    """Build a BPA or PMF from a decoded JSON document."""
    try:
        frame = Frame(tuple(doc["frame"]))
        kind = doc["kind"]
        entries = doc["masses"]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed document: missing {exc}") from None
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    if kind not in ("bpa", "pmf"):
        raise DocumentError(f"unknown kind {kind!r}; expected 'bpa' or 'pmf'")
    event_type = SubsetEvent if kind == "bpa" else PermutationEvent
    masses: dict = {}
    for entry in entries:
        try:
            labels = entry["event"]
            raw = entry["mass"]
        except (KeyError, TypeError):
            raise DocumentError(f"mass entry needs 'event' and 'mass': {entry!r}") from None
        try:
            event = event_type(frame.index(label) for label in labels)
        except KeyError as exc:
            raise DocumentError(exc.args[0]) from None
        if event in masses:
            raise DocumentError(f"duplicate event {frame.labels(event)}")
        masses[event] = parse_mass(raw)
    cls = BPA if kind == "bpa" else PMF
    return cls(frame, masses)


def to_dict(dist: BPA | PMF) -> dict:
    """Canonical JSON-ready form; events follow enumeration order."""
    items = sorted(dist.masses.items(), key=lambda kv: (len(kv[0]), tuple(kv[0])))
    return {
        "frame": list(dist.frame.elements),
        "kind": dist.kind,
        "masses": [{"event": dist.frame.labels(e), "mass": format_mass(m)}
                   for e, m in items],
    }


def loads(text: str) -> BPA | PMF:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_dict(doc)


def dumps(dist: BPA | PMF) -> str:
    return json.dumps(to_dict(dist), indent=2, ensure_ascii=False)


def load(path) -> BPA | PMF:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(dist: BPA | PMF, path):
    Path(path).write_text(dumps(dist) + "\n", encoding="utf-8")

"""Decide whether an integer array is the minimal cover array of some string.

The round trip through :func:`coverinfer.sima.infer` is the decision
procedure. The quadratic pair checks in front of it only reject early and
never accept on their own.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import IntArray, values_of
from .covers import minimal_cover_values
from .sima import infer


@dataclass(frozen=True)
class Violation:
    predicate: str
    positions: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.predicate} {' '.join(map(str, self.positions))}"


@dataclass(frozen=True)
class ValidationReport:
    verdict: str  # "valid" or "invalid"
    violated: Optional[Violation] = None
    witness: Optional[str] = None

    @property
    def valid(self) -> bool:
        return self.verdict == "valid"

    def line(self) -> str:
        if self.valid:
            return f"VALID {self.witness}"
        return f"INVALID {self.violated}"


def _fail(name: str, *positions: int) -> ValidationReport:
    return ValidationReport("invalid", Violation(name, positions))


def structural_check(c: Sequence[int] | IntArray) -> Optional[ValidationReport]:
    """Range sanity; returns a failing report or ``None``."""
    c = values_of(c)
    if not c:
        return _fail("structural_check", 0)
    for i, v in enumerate(c, 1):
        if v < 0 or v >= i:
            return _fail("structural_check", i)
    return None


def check_minimality(c: Sequence[int] | IntArray) -> Optional[ValidationReport]:
    """A shortest cover is itself superprimitive, so C[C[i]] = 0."""
    c = values_of(c)
    for i, v in enumerate(c, 1):
        if v and c[v - 1]:
            return _fail("check_minimality", i)
    return None


def check_offset_gap(c: Sequence[int] | IntArray) -> Optional[ValidationReport]:
    """Occurrence starts of two covers cannot sit closer than half a cover."""
    c = values_of(c)
    nonzero = [(i, v, i - v) for i, v in enumerate(c, 1) if v]
    for a, (j, cj, oj) in enumerate(nonzero):
        for i, ci, oi in nonzero[a + 1:]:
            if oj < oi and 2 * (oi - oj) <= cj:
                return _fail("check_offset_gap", i, j)
    return None


def check_induced_values(c: Sequence[int] | IntArray) -> Optional[ValidationReport]:
    """A cover occurrence nested inside a later one reappears near the start.

    The occurrence ending at ``j`` sits inside the copy of ``x[1..C[i]]``
    ending at ``i``, so it reappears ending at ``r = j - (i - C[i])``.
    """
    c = values_of(c)
    nonzero = [(i, v, i - v) for i, v in enumerate(c, 1) if v]
    for a, (j, cj, oj) in enumerate(nonzero):
        for i, ci, oi in nonzero[a + 1:]:
            if oj < oi:
                continue
            r = j - oi
            if r < 1:
                continue
            expected = 0 if oi == oj else cj
            if c[r - 1] != expected:
                return _fail("check_induced_values", i, j)
    return None


FAST_REJECTORS = (check_minimality, check_offset_gap, check_induced_values)


def round_trip(c: Sequence[int] | IntArray) -> ValidationReport:
    c = values_of(c)
    witness = infer(c).text
    got = minimal_cover_values(witness)
    for i, (want, have) in enumerate(zip(c, got), 1):
        if want != have:
            return _fail("round_trip", i)
    return ValidationReport("valid", witness=witness)


def validate(c: Sequence[int] | IntArray) -> ValidationReport:
    c = values_of(c)
    report = structural_check(c)
    if report:
        return report
    for check in FAST_REJECTORS:
        report = check(c)
        if report:
            return report
    return round_trip(c)

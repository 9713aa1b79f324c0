"""Text and integer-array types plus the border array (failure function).

Arrays are stored 0-based (``values[i - 1]`` holds entry ``i``) while every
documented position is 1-based, as in ``x[1..n]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

KINDS = ("minimal", "maximal", "pruned", "unknown")


@dataclass(frozen=True)
class IntArray:
    values: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def at(self, i: int) -> int:
        """Entry at 1-based position ``i``."""
        if not 1 <= i <= len(self.values):
            raise IndexError(f"position {i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


@dataclass(frozen=True)
class BorderArray(IntArray):
    pass


@dataclass(frozen=True)
class CoverArray(IntArray):
    kind: str = field(default="unknown")

    def __post_init__(self):
        super().__post_init__()
        if self.kind not in KINDS:
            raise ValueError(f"unknown cover array kind {self.kind!r}")


def values_of(c: Sequence[int] | IntArray) -> list[int]:
    if isinstance(c, IntArray):
        return list(c.values)
    return list(c)


def check_text(x: str) -> str:
    """Reject anything but lowercase ASCII letters."""
    for pos, ch in enumerate(x, 1):
        if ch not in ALPHABET:
            raise ValueError(f"symbol {ch!r} at position {pos} is not in a-z")
    return x


def extend_border(x: Sequence, border: Sequence[int], i: int) -> tuple[int, int]:
    """One failure-function step at 0-based index ``i`` (``i >= 1``).

    ``border[0..i-1]`` must already hold the borders of the shorter
    prefixes and ``x[0..i]`` must be assigned. Returns the border length of
    ``x[0..i]`` and the number of fallbacks taken through the border chain.
    """
    ch = x[i]
    k = border[i - 1]
    fallbacks = 0
    while True:
        # k + 1 is the 1-based candidate length, so compare against x[k]
        if x[k] == ch:
            return k + 1, fallbacks
        if k == 0:
            return 0, fallbacks
        k = border[k - 1]
        fallbacks += 1


def border_values(x: Sequence) -> tuple[list[int], int]:
    """Border lengths as a plain list, plus the total fallback count."""
    n = len(x)
    border = [0] * n
    total = 0
    for i in range(1, n):
        border[i], steps = extend_border(x, border, i)
        total += steps
    return border, total


def border_array(x: Sequence) -> BorderArray:
    return BorderArray(tuple(border_values(x)[0]))


def alphabet_size(x: Sequence) -> int:
    return len(set(x))

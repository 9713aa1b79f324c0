"""Exhaustive string sweeps and Fibonacci words."""

from __future__ import annotations

from typing import Iterator

from .core import ALPHABET, CoverArray
from .covers import minimal_cover_values


def canonical_strings(n: int, k: int) -> Iterator[str]:
    """Strings of length ``n`` over at most ``k`` letters, one per relabeling.

    A string is canonical when its letters first appear in alphabetical
    order ("abba" is, "baab" is not). Output is in lexicographic order.
    """
    if not 1 <= n <= 20:
        raise ValueError(f"length {n} outside 1..20")
    if not 1 <= k <= 26:
        raise ValueError(f"alphabet size {k} outside 1..26")

    buf = [""] * n

    def extend(pos: int, used: int) -> Iterator[str]:
        if pos == n:
            yield "".join(buf)
            return
        for s in range(min(k, used + 1)):
            buf[pos] = ALPHABET[s]
            yield from extend(pos + 1, max(used, s + 1))

    buf[0] = "a"
    yield from extend(1, 1)


def distinct_cover_arrays(n: int, k: int) -> list[CoverArray]:
    seen = {tuple(minimal_cover_values(x)) for x in canonical_strings(n, k)}
    return [CoverArray(v, "minimal") for v in sorted(seen)]


def all_valid_cover_arrays(n: int) -> list[CoverArray]:
    if not 1 <= n <= 14:
        raise ValueError(f"length {n} outside 1..14")
    return distinct_cover_arrays(n, 2)


def fibonacci_word(i: int) -> str:
    if not 1 <= i <= 34:
        raise ValueError(f"Fibonacci index {i} outside 1..34")
    prev, cur = "a", "ab"
    if i == 1:
        return prev
    for _ in range(i - 2):
        prev, cur = cur, cur + prev
    return cur

"""Cover arrays of strings.

The brute-force functions here are the ground truth: every faster routine
in the package is tested against them.
"""

from __future__ import annotations

from typing import Sequence

from .core import CoverArray, border_values


def is_cover(l: int, x: Sequence) -> bool:
    n = len(x)
    if not 1 <= l <= n:
        raise ValueError(f"cover length {l} outside 1..{n}")
    if l == n:
        return False
    w = x[:l]
    if x[n - l:] != w:
        return False
    reach = 0  # rightmost position covered so far
    for p in range(n - l + 1):
        if p > reach:
            return False
        if x[p:p + l] == w:
            reach = p + l
    return reach == n


def list_all_covers(x: Sequence) -> list[int]:
    return [l for l in range(1, len(x)) if is_cover(l, x)]


def minimal_cover_array_oracle(x: Sequence) -> CoverArray:
    values = []
    for i in range(1, len(x) + 1):
        covers = list_all_covers(x[:i])
        values.append(covers[0] if covers else 0)
    return CoverArray(tuple(values), "minimal")


def maximal_cover_array_oracle(x: Sequence) -> CoverArray:
    values = []
    for i in range(1, len(x) + 1):
        covers = list_all_covers(x[:i])
        values.append(covers[-1] if covers else 0)
    return CoverArray(tuple(values), "maximal")


def minimal_cover_values(x: Sequence) -> list[int]:
    """Shortest-cover lengths in one left-to-right pass over the borders.

    A coverable prefix is covered by the shortest cover of its longest
    border, so each prefix either inherits that cover or is superprimitive.
    ``reach[c]`` remembers the longest prefix covered so far by the
    superprimitive prefix of length ``c``.
    """
    n = len(x)
    border = border_values(x)[0]
    shortest = list(range(1, n + 1))  # shortest cover, itself when superprimitive
    reach = list(range(1, n + 1))
    out = [0] * n
    for i in range(1, n):
        b = border[i]
        if b:
            c = shortest[b - 1]
            if reach[c - 1] >= i + 1 - c:
                shortest[i] = c
                reach[c - 1] = i + 1
                out[i] = c
    return out


def minimal_cover_array(x: Sequence) -> CoverArray:
    return CoverArray(tuple(minimal_cover_values(x)), "minimal")

"""MaxToMin and Prune: the two array rewrites that precede inference."""

from __future__ import annotations

from typing import Sequence

from .core import CoverArray, IntArray, values_of


def max_to_min_values(c: list[int]) -> list[int]:
    """In-place pass; ``c[c[i]]`` is read after its own update since c[i] < i."""
    for i, v in enumerate(c):
        if v:
            w = c[v - 1]
            if w:
                c[i] = w
    return c


def prune_values(c: list[int]) -> list[int]:
    """In-place right-to-left pass zeroing totally covered positions."""
    l = 0
    for i in range(len(c) - 1, -1, -1):
        v = c[i]
        if l >= v:
            c[i] = 0
        if v > l:
            l = v
        l = l - 1 if l > 0 else 0
    return c


def max_to_min(c: Sequence[int] | IntArray) -> CoverArray:
    return CoverArray(tuple(max_to_min_values(values_of(c))), "minimal")


def prune(c: Sequence[int] | IntArray) -> CoverArray:
    return CoverArray(tuple(prune_values(values_of(c))), "pruned")

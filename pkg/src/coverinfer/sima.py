"""String inference over a two-letter alphabet from a cover array.

The pipeline rewrites the input with MaxToMin and Prune, links positions
that a nonzero pruned entry forces to be equal, and walks the resulting
components left to right. A component whose first position is ``i > 1``
gets the letter that differs from ``x[B[i-1] + 1]``, which keeps the
border from growing and so keeps ``i`` uncovered.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from operator import lt
from typing import Sequence

from .core import BorderArray, CoverArray, IntArray, extend_border, values_of
from .transform import max_to_min_values, prune_values


class InvalidCoverArray(ValueError):
    """Raised when an array fails the range checks; ``position`` is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class CoverGraph:
    n: int
    adj: tuple[tuple[int, ...], ...]  # adj[v - 1] lists the neighbours of vertex v

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v - 1]

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.adj)) // 2

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(u, v), max(u, v))
                       for u in range(1, self.n + 1) for v in self.adj[u - 1]})


@dataclass(frozen=True)
class ComponentLabeling:
    label: tuple[int, ...]  # label[v - 1] is the component id of vertex v
    count: int

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Ascending vertex lists, ordered by smallest member."""
        groups: list[list[int]] = [[] for _ in range(self.count)]
        for v, comp in enumerate(self.label, 1):
            groups[comp].append(v)
        return tuple(map(tuple, groups))


@dataclass(frozen=True)
class InferenceResult:
    text: str
    borders: BorderArray
    components: ComponentLabeling
    pushes: int = 0
    fallbacks: int = 0

    @property
    def ops(self) -> int:
        return self.pushes + self.fallbacks


def check_range(c: Sequence[int]) -> None:
    if not c or (min(c) >= 0 and all(map(lt, c, range(1, len(c) + 1)))):
        return
    for i, v in enumerate(c, 1):
        if v < 0 or v >= i:
            raise InvalidCoverArray(f"entry {v} at position {i} outside 0..{i - 1}", i)


def _adjacency(cp: list[int]) -> dict[int, list[int]]:
    # 0-based vertices; isolated vertices have no entry
    adj: dict[int, list[int]] = {}
    for i, c in enumerate(cp):
        if c:
            offset = i + 1 - c
            for j in range(c):
                k = offset + j
                if k != j:
                    adj.setdefault(j, []).append(k)
                    adj.setdefault(k, []).append(j)
    return adj


def build_cover_graph(cp: Sequence[int] | IntArray) -> CoverGraph:
    values = values_of(cp)
    check_range(values)
    adj = _adjacency(values)
    return CoverGraph(
        len(values),
        tuple(tuple(v + 1 for v in adj.get(u, ())) for u in range(len(values))),
    )


def connected_components(g: CoverGraph) -> ComponentLabeling:
    label = [-1] * g.n
    count = 0
    for start in range(g.n):
        if label[start] >= 0:
            continue
        stack = [start]
        while stack:
            p = stack.pop()
            label[p] = count
            for q in g.adj[p]:
                if label[q - 1] < 0:
                    stack.append(q - 1)
        count += 1
    return ComponentLabeling(tuple(label), count)


def infer(c: Sequence[int] | IntArray) -> InferenceResult:
    """Reconstruct a string over {a, b} whose minimal cover array is ``c``.

    ``c`` may be a minimal or a maximal cover array. Only the range checks
    are applied here; use :func:`coverinfer.validate.validate` to decide
    whether ``c`` is a cover array at all.
    """
    values = values_of(c)
    check_range(values)
    cp = prune_values(max_to_min_values(values))
    adj = _adjacency(cp)
    n = len(cp)

    x: list = [None] * n
    border = [0] * n
    label = [-1] * n
    count = 0
    pushes = 0
    fallbacks = 0
    no_edges = ()
    step = extend_border
    for i in range(n):
        if x[i] is None:
            if i == 0:
                ch = "a"
            else:
                # cp[i] is 0 here: a nonzero entry links i to an earlier vertex
                ch = "b" if x[border[i - 1]] == "a" else "a"
            # the start vertex is pushed and popped first; isolated ones stop here
            x[i] = ch
            label[i] = count
            pushes += 1
            first = adj.get(i)
            if first:
                stack = [q for q in first if x[q] is None]
                pushes += len(stack)
                while stack:
                    p = stack.pop()
                    x[p] = ch
                    label[p] = count
                    for q in adj.get(p, no_edges):
                        if x[q] is None:
                            stack.append(q)
                            pushes += 1
            count += 1
        if i:
            border[i], steps = step(x, border, i)
            fallbacks += steps

    return InferenceResult(
        text="".join(x),
        borders=BorderArray(tuple(border)),
        components=ComponentLabeling(tuple(label), count),
        pushes=pushes,
        fallbacks=fallbacks,
    )

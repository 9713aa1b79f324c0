"""Timing and operation counts for inference on Fibonacci and random words."""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from typing import Iterable, TextIO

from .core import alphabet_size
from .covers import minimal_cover_array
from .enumeration import fibonacci_word
from .sima import infer

CSV_HEADER = ("label", "n", "wall_time_s", "ops")


@dataclass(frozen=True)
class BenchRecord:
    label: str
    n: int
    wall_time: float  # seconds spent in infer
    ops: int  # stack pushes + border fallbacks
    alphabet: int = 0


def _measure(label: str, x: str) -> BenchRecord:
    c = minimal_cover_array(x)
    start = time.perf_counter()
    result = infer(c)
    elapsed = time.perf_counter() - start
    return BenchRecord(label, len(x), elapsed, result.ops, alphabet_size(result.text))


def bench_run(fib_min: int = 4, fib_max: int = 25) -> list[BenchRecord]:
    if not 4 <= fib_min <= fib_max <= 34:
        raise ValueError(f"need 4 <= fib_min <= fib_max <= 34, got {fib_min}..{fib_max}")
    return [_measure(f"fib-{i}", fibonacci_word(i)) for i in range(fib_min, fib_max + 1)]


def bench_random(n: int, seed: int = 0) -> BenchRecord:
    """Inference on a uniform random binary string of length ``n``."""
    if n < 1:
        raise ValueError(f"random length must be positive, got {n}")
    rng = random.Random(seed)
    x = "".join(rng.choices("ab", k=n))
    return _measure(f"random-{n}", x)


def write_csv(records: Iterable[BenchRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow((r.label, r.n, f"{r.wall_time:.6f}", r.ops))

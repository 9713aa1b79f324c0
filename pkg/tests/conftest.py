import itertools
from functools import lru_cache

import pytest

from coverinfer import all_valid_cover_arrays


@lru_cache(maxsize=None)
def valid_arrays(n):
    return tuple(tuple(c) for c in all_valid_cover_arrays(n))


def binary_strings(n):
    return ("".join(t) for t in itertools.product("ab", repeat=n))


def in_range_arrays(n):
    """Every array with C[i] in 0..i-1."""
    return itertools.product(*(range(i) for i in range(1, n + 1)))


def brute_border(x):
    n = len(x)
    return max(l for l in range(n) if x[:l] == x[n - l:])


@pytest.fixture(scope="session")
def valid_up_to_12():
    return [c for n in range(1, 13) for c in valid_arrays(n)]

"""Shared helpers for the test suite."""

import random

from gridmul.core import parse_decimal


def as_int(v) -> int:
    """Digit vector to host integer (test-side convenience)."""
    return int("".join(map(str, v)))


def from_int(n: int) -> list[int]:
    return parse_decimal(str(n))


def random_vector(rng: random.Random, max_digits: int = 64, zero_weight: float = 0.02) -> list[int]:
    """A canonical vector with uniformly chosen length; occasionally [0]."""
    if rng.random() < zero_weight:
        return [0]
    ndigits = rng.randint(1, max_digits)
    return [rng.randint(1, 9)] + [rng.randint(0, 9) for _ in range(ndigits - 1)]

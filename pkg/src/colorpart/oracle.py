"""Brute-force partition counts, kept free of any power-series code.

These are the ground truth the generating-function pipeline is checked
against, so nothing here may import from :mod:`colorpart.series`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class ColorProfile:
    """Even parts come in ``even_colors`` colors, odd parts in ``odd_colors``."""

    even_colors: int
    odd_colors: int

    def __post_init__(self):
        if self.even_colors < 1 or self.odd_colors < 1:
            raise ValueError(f"color counts must be >= 1, got {self.even_colors}, {self.odd_colors}")

    def colors_for(self, part: int) -> int:
        return self.even_colors if part % 2 == 0 else self.odd_colors


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Pascal's rule, memoized."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return binomial(n - 1, k - 1) + binomial(n - 1, k)


def _multisets(c: int, k: int) -> int:
    # ways to pick k copies of one part size from c colors, repetition allowed
    return binomial(k + c - 1, c - 1)


def _count_table(limit: int, weight) -> list[int]:
    """Counts for 0..limit where k copies of part t contribute weight(t, k) ways.

    Runs the table A(n, t) over part sizes t = 1..limit, keeping only the
    current column.
    """
    counts = [1] + [0] * limit
    for t in range(1, limit + 1):
        new = counts[:]
        for n in range(t, limit + 1):
            total = 0
            for k in range(1, n // t + 1):
                total += weight(t, k) * counts[n - k * t]
            new[n] += total
        counts = new
    return counts


@lru_cache(maxsize=256)
def colored_counts(limit: int, even_colors: int, odd_colors: int) -> tuple[int, ...]:
    profile = ColorProfile(even_colors, odd_colors)
    return tuple(_count_table(limit, lambda t, k: _multisets(profile.colors_for(t), k)))


def count_colored(n: int, profile: ColorProfile) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return colored_counts(n, profile.even_colors, profile.odd_colors)[n]


def count_unrestricted(n: int) -> int:
    return count_colored(n, ColorProfile(1, 1))


@lru_cache(maxsize=64)
def overpartition_counts(limit: int) -> tuple[int, ...]:
    # a part size used k >= 1 times: its first copy is overlined or not
    return tuple(_count_table(limit, lambda t, k: 2))


def count_overpartitions(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return overpartition_counts(n)[n]

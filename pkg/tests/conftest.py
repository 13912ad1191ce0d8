"""Brute-force enumerators used to derive expected values.

Nothing here touches colorpart: these generate partitions explicitly.
"""

import itertools

import pytest


def partitions(n, largest=None):
    """Yield partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def colored_partitions(n, even_colors, odd_colors):
    """Yield colored partitions as sorted tuples of (part, color) pairs."""
    pairs = [
        (t, c)
        for t in range(1, n + 1)
        for c in range(even_colors if t % 2 == 0 else odd_colors)
    ]

    def rec(remaining, start):
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(pairs)):
            t, c = pairs[i]
            if t > remaining:
                continue
            for rest in rec(remaining - t, i):
                yield ((t, c),) + rest

    yield from rec(n, 0)


def overpartitions(n):
    """Yield overpartitions as tuples of (part, overlined) pairs."""
    for lam in partitions(n):
        sizes = sorted(set(lam))
        for marks in itertools.product((False, True), repeat=len(sizes)):
            yield tuple(zip(sizes, marks)) + tuple((t, False) for t in lam)


def naive_product(trunc, m=1):
    """Coefficients of prod_{n>=1} (1 - q^{mn}) by repeated polynomial multiply."""
    poly = [1] + [0] * trunc
    k = m
    while k <= trunc:
        new = poly[:]
        for i in range(k, trunc + 1):
            new[i] -= poly[i - k]
        poly = new
        k += m
    return poly


def naive_mul(a, b, trunc):
    out = [0] * (trunc + 1)
    for i, x in enumerate(a[: trunc + 1]):
        for j, y in enumerate(b[: trunc + 1 - i]):
            out[i + j] += x * y
    return out


@pytest.fixture(scope="session")
def partition_numbers():
    return [sum(1 for _ in partitions(n)) for n in range(16)]


# acceptance criteria report one line each; collected here and printed at the end
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

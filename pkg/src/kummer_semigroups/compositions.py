"""Weak integer compositions."""

from __future__ import annotations

from typing import Iterator


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield all ``(k_1, ..., k_parts)`` with ``k_i >= 0`` summing to ``n``.

    Order is colexicographic (the last part varies slowest).  Nothing is
    yielded for ``n < 0``; ``parts == 0`` yields ``()`` only when ``n == 0``.

    >>> list(weak_compositions(2, 2))
    [(2, 0), (1, 1), (0, 2)]
    """
    if n < 0 or parts < 0:
        return
    if parts == 0:
        if n == 0:
            yield ()
        return
    for last in range(n + 1):
        for head in weak_compositions(n - last, parts - 1):
            yield head + (last,)


def count_weak_compositions(n: int, parts: int) -> int:
    from math import comb

    if n < 0 or parts < 0:
        return 0
    if parts == 0:
        return int(n == 0)
    return comb(n + parts - 1, parts - 1)

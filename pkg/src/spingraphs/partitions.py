"""Restricted integer partitions.

``count_partitions(m, k, l)`` is the number of ways to write ``m`` as a sum of
exactly ``k`` non-decreasing parts, each at least ``l``. Partitions are
ascending tuples, listed in lexicographic order.
"""

from __future__ import annotations

from functools import lru_cache

Partition = tuple[int, ...]


def _check(m: int, k: int, min_part: int) -> None:
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if k <= 0:
        raise ValueError(f"number of parts must be >= 1, got {k}")
    if min_part <= 0:
        raise ValueError(f"minimal part must be >= 1, got {min_part}")


def _gen(m: int, k: int, lo: int):
    if k == 1:
        if m >= lo:
            yield (m,)
        return
    # the smallest part is at most m // k
    for first in range(lo, m // k + 1):
        for rest in _gen(m - first, k - 1, first):
            yield (first,) + rest


def iter_partitions(m: int, k: int, min_part: int = 1):
    _check(m, k, min_part)
    return _gen(m, k, min_part)


def enumerate_partitions(m: int, k: int, min_part: int = 1) -> list[Partition]:
    """All ascending ``k``-tuples of parts ``>= min_part`` summing to ``m``.

    >>> enumerate_partitions(6, 2)
    [(1, 5), (2, 4), (3, 3)]
    """
    return list(iter_partitions(m, k, min_part))


@lru_cache(maxsize=None)
def _count(m: int, k: int, lo: int) -> int:
    if k == 0:
        return 1 if m == 0 else 0
    if m < k * lo:
        return 0
    # smallest part equal to lo, or all parts > lo
    return _count(m - lo, k - 1, lo) + _count(m, k, lo + 1)


def count_partitions(m: int, k: int, min_part: int = 1) -> int:
    _check(m, k, min_part)
    return _count(m, k, min_part)


def total_partitions(m: int) -> int:
    """Unrestricted partition number p(m) by Euler's pentagonal recurrence."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    p = [1] + [0] * m
    for n in range(1, m + 1):
        j, acc = 1, 0
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            acc += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                acc += sign * p[n - g2]
            j += 1
        p[n] = acc
    return p[m]

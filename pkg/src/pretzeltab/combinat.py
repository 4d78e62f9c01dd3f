"""Exact integer combinatorics shared by all counters.

Everything here is pure, exact (Python big integers throughout) and safe to
call concurrently.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, Sequence


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    """Euler's totient: how many of 1..d are coprime to d.

    Computed from the prime factorization by trial division; d >= 1.
    """
    if d < 1:
        raise ValueError(f"totient is defined for positive integers, got {d}")
    result = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    if m < 1:
        raise ValueError(f"divisors is defined for positive integers, got {m}")
    small = []
    large = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def binom(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), total over all integer arguments.

    Returns 0 whenever a < 0, b < 0 or b > a, so callers can sum binomials
    without guarding index ranges; C(0, 0) = 1.
    """
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def gcd_many(values: Sequence[int]) -> int:
    """gcd of a non-empty sequence of non-negative integers.

    gcd(0, x) = x; the gcd of an all-zero sequence is 0.
    """
    if not values:
        raise ValueError("gcd_many requires at least one value")
    return math.gcd(*values)


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every k-tuple of positive integers summing to n, each once.

    Tuples come out in lexicographic order.  The stream is empty when n < k;
    compositions(0, 0) yields exactly one empty tuple.  Stream length is
    binom(n - 1, k - 1).
    """
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        if n > 0:
            yield (n,)
        return
    for head in range(1, n - k + 2):
        for tail in compositions(n - head, k - 1):
            yield (head,) + tail

"""Integer partitions as canonical weakly-decreasing tuples."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def partition(parts):
    """Canonicalize to a weakly decreasing tuple of positive parts.

    Trailing zeros are stripped; an increasing pair is an error.
    """
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return parts


def size(lam):
    return sum(lam)


def length(lam):
    return len(lam)


def conjugate(lam):
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for i in range(p):
            out[i] += 1
    return tuple(out)


def staircase(r):
    """(r-1, r-2, ..., 1); the empty partition for r <= 1."""
    return tuple(range(r - 1, 0, -1))


def descending_staircase(r):
    """(r, r-1, ..., 1)."""
    return tuple(range(r, 0, -1))


def partitions_of(d, max_len=None, max_part=None):
    """All partitions of d, largest part first, optionally bounded."""
    if max_part is None:
        max_part = d
    if max_len is None:
        max_len = d

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(d, max_part, max_len)


def partitions_upto(max_size, max_len=None, max_part=None):
    for d in range(max_size + 1):
        yield from partitions_of(d, max_len=max_len, max_part=max_part)


@lru_cache(maxsize=None)
def count_ssyt(lam, n):
    """Number of semistandard Young tableaux of shape lam with entries <= n,
    i.e. the Schur polynomial evaluated at n ones (hook content formula)."""
    if len(lam) > n:
        return 0
    if not lam:
        return 1
    conj = conjugate(lam)
    val = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            content = j - i
            hook = (row - j) + (conj[j] - i) - 1
            val *= Fraction(n + content, hook)
    assert val.denominator == 1
    return val.numerator

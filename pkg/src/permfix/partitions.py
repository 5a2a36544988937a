"""Integer partitions, hook lengths, and dimensions of S_n irreducibles.

Partitions are immutable tuples, so they hash cheaply and key the memo
tables used by the tableau and character modules. All counts are exact
Python integers.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or p <= 0:
                raise ValueError(f"parts must be positive integers: {parts!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be weakly decreasing: {parts!r}")
            prev = p
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition{tuple.__repr__(self)}"

    @property
    def n(self) -> int:
        """Total number of cells."""
        return sum(self)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return Partition()
        cols = [0] * self[0]
        for p in self:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def diagonal_size(self) -> int:
        """Largest k with the kth part >= k."""
        m = 0
        for idx, p in enumerate(self):
            if p >= idx + 1:
                m = idx + 1
        return m

    def frobenius(self) -> tuple[list[int], list[int]]:
        """Arm and leg coordinates (a_1..a_m | b_1..b_m) along the diagonal.

        a_j is the jth part minus j and b_j the jth conjugate part minus j;
        both lists are strictly decreasing and the total (a_j + b_j + 1)
        recovers the size.
        """
        conj = self.conjugate()
        m = self.diagonal_size()
        arms = [self[j] - (j + 1) for j in range(m)]
        legs = [conj[j] - (j + 1) for j in range(m)]
        return arms, legs

    def first_row_removed(self) -> "Partition":
        """The partition left after deleting the largest part."""
        return Partition(self[1:])

    def contains(self, inner) -> bool:
        """Cellwise containment, padding the inner shape with zeros."""
        inner = tuple(inner)
        if len(inner) > len(self):
            return all(p == 0 for p in inner[len(self):]) and self.contains(
                inner[: len(self)]
            )
        return all(inner[i] <= self[i] for i in range(len(inner)))


def conjugate(lam) -> Partition:
    return Partition(lam).conjugate()


def frobenius(lam) -> tuple[list[int], list[int]]:
    return Partition(lam).frobenius()


def hook_lengths(lam) -> list[int]:
    """Hook lengths of every cell, row-major order."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = []
    for i, p in enumerate(lam):
        for j in range(p):
            hooks.append(p + conj[j] - i - j - 1)
    return hooks


@lru_cache(maxsize=None)
def dim(lam) -> int:
    """Number of standard Young tableaux of the given shape.

    Computed by the hook length formula; the division is exact and
    verified, so the result is never silently truncated.
    """
    lam = Partition(lam)
    product = 1
    for h in hook_lengths(lam):
        product *= h
    q, rem = divmod(factorial(lam.n), product)
    if rem:
        raise ArithmeticError(f"hook product does not divide {lam.n}! for {lam!r}")
    return q


def _bounded(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n with parts <= cap, largest-first (reverse lexicographic)."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _bounded(n - first, first):
            yield (first, *rest)


def all_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _bounded(n, n):
        yield Partition(parts)


def partitions_with_large_first_row(n: int, t_max: int) -> Iterator[Partition]:
    """Partitions of n whose first part is at least n - t_max.

    Yields stratum by stratum: first all shapes with first part n, then
    n - 1, and so on. t_max larger than n is clamped, which yields every
    partition of n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        if t_max >= 0:
            yield Partition()
        return
    for t in range(0, min(t_max, n - 1) + 1):
        first = n - t
        for rest in _bounded(t, first):
            yield Partition((first, *rest))


def bounded_partitions(n: int, cap: int) -> Iterator[Partition]:
    """Partitions of n with every part at most cap, largest-first."""
    for parts in _bounded(n, cap):
        yield Partition(parts)

"""Exact counts of standard Young tableaux of skew shape.

Two independent algorithms are provided: a memoized corner-peeling
recursion (the production path) and a determinant evaluation used as an
internal oracle. A closed form covers shapes whose inner part is a long
single row.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import FirstRowGuardError
from .partitions import Partition, dim


@dataclass(frozen=True)
class SkewShape:
    """Pair of nested partitions outer/inner."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner!r} is not contained in {self.outer!r}")

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def count(self) -> int:
        return skew_syt_count(self.outer, self.inner)


def _contains(outer: tuple, inner: tuple) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def _corner_removals(parts: tuple):
    """Partitions obtained by deleting one removable corner cell."""
    out = []
    for i in range(len(parts)):
        if i + 1 == len(parts) or parts[i] > parts[i + 1]:
            if parts[i] == 1:
                out.append(parts[:i] + parts[i + 1:])
            else:
                out.append(parts[:i] + (parts[i] - 1,) + parts[i + 1:])
    return out


@lru_cache(maxsize=None)
def _skew_count(outer: tuple, inner: tuple) -> int:
    if not _contains(outer, inner):
        return 0
    if sum(outer) == sum(inner):
        return 1
    total = 0
    for smaller in _corner_removals(outer):
        if _contains(smaller, inner):
            total += _skew_count(smaller, inner)
    return total


def skew_syt_count(outer, inner=()) -> int:
    """Number of standard fillings of the cells of outer not in inner.

    Containment failure contributes nothing to the sums this feeds, so it
    returns 0 rather than raising. An inner shape equal to outer counts 1
    (the empty filling).
    """
    outer = Partition(outer)
    inner = Partition(inner)
    return _skew_count(tuple(outer), tuple(inner))


def _det_fraction(matrix: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def skew_syt_count_determinant(outer, inner=()) -> int:
    """Independent determinant evaluation of the same skew count.

    The entry at (i, j) is 1/((outer_i - i) - (inner_j - j))!, with
    reciprocal factorials of negative integers read as zero.
    """
    outer = Partition(outer)
    inner = tuple(Partition(inner))
    size = outer.n - sum(inner)
    ell = len(outer)
    if ell == 0:
        return 1
    padded = inner + (0,) * (ell - len(inner))
    matrix = []
    for i in range(ell):
        row = []
        for j in range(ell):
            e = (outer[i] - (i + 1)) - (padded[j] - (j + 1))
            row.append(Fraction(1, factorial(e)) if e >= 0 else Fraction(0))
        matrix.append(row)
    value = factorial(size) * _det_fraction(matrix)
    if value.denominator != 1:
        raise ArithmeticError(f"determinant count is not integral for {outer}/{inner}")
    return int(value)


def skew_syt_large_first_row(lam, a: int) -> int:
    """Skew count for inner shape a single row of n - a cells, in closed form.

    Valid when the second part of lam fits under that row; the count is
    then dim of lam with its first row dropped, times a binomial choosing
    which of the a added cells extend the first row.
    """
    lam = Partition(lam)
    n = lam.n
    second = lam[1] if len(lam) > 1 else 0
    if not 0 <= a <= n or second > n - a:
        raise FirstRowGuardError(
            f"closed form needs second part {second} <= {n - a} and 0 <= a <= {n}"
        )
    bar = lam.first_row_removed()
    return dim(bar) * comb(a, bar.n)

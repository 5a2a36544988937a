"""Brute-force oracles used only by the test suite.

Everything here is deliberately independent of the package's production
algorithms: tableaux are enumerated cell by cell, characters come from
permutation-module fixed-point counts plus exact Gram-Schmidt, and the
longest increasing subsequence uses dynamic programming.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from permfix.characters import CycleType, perm_cycle_type
from permfix.partitions import all_partitions


def syt_fillings(outer, inner=()) -> list[tuple[tuple[int, ...], ...]]:
    """All standard fillings of the skew cells, enumerated cell by cell."""
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [
        (i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])
    ]
    size = len(cells)
    fillings = []
    grid: dict[tuple[int, int], int] = {}

    def ready(cell) -> bool:
        i, j = cell
        left_ok = j == inner[i] or (i, j - 1) in grid
        up_ok = i == 0 or j < inner[i - 1] or (i - 1, j) in grid
        return left_ok and up_ok

    def place(value: int) -> None:
        if value > size:
            rows = []
            for i in range(len(outer)):
                rows.append(
                    tuple(grid[(i, j)] for j in range(inner[i], outer[i]))
                )
            fillings.append(tuple(rows))
            return
        for cell in cells:
            if cell not in grid and ready(cell):
                grid[cell] = value
                place(value + 1)
                del grid[cell]

    place(1)
    return fillings


def count_syt(outer, inner=()) -> int:
    return len(syt_fillings(outer, inner))


@lru_cache(maxsize=None)
def dim_branching(parts: tuple) -> int:
    """Dimension by corner-peeling recursion, no hook formula."""
    if sum(parts) == 0:
        return 1
    total = 0
    for i in range(len(parts)):
        if i + 1 == len(parts) or parts[i] > parts[i + 1]:
            if parts[i] == 1:
                smaller = parts[:i] + parts[i + 1:]
            else:
                smaller = parts[:i] + (parts[i] - 1,) + parts[i + 1:]
            total += dim_branching(smaller)
    return total


def set_partitions(items: tuple):
    """All set partitions of the items, as tuples of frozensets."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            block = frozenset((first, *extra))
            remaining = tuple(x for x in rest if x not in extra)
            for tail in set_partitions(remaining):
                yield (block, *tail)


def lis_length(word) -> int:
    best = []
    lengths = [1] * len(word)
    for idx in range(len(word)):
        for prev in range(idx):
            if word[prev] < word[idx]:
                lengths[idx] = max(lengths[idx], lengths[prev] + 1)
    return max(lengths, default=0)


def _tabloids(n: int, shape: tuple[int, ...]):
    """Ordered block decompositions of 0..n-1 with the given block sizes."""
    def rec(available: tuple[int, ...], sizes: tuple[int, ...]):
        if not sizes:
            yield ()
            return
        head, *tail = sizes
        for block in combinations(available, head):
            remaining = tuple(v for v in available if v not in block)
            for rest in rec(remaining, tuple(tail)):
                yield (frozenset(block), *rest)

    yield from rec(tuple(range(n)), shape)


def brute_character_table(n: int) -> dict[tuple, dict[CycleType, int]]:
    """Exact character table from permutation-module fixed points.

    Row fixed-point counts of the block-permutation action give the
    permutation characters; peeling previously extracted irreducibles by
    exact inner products leaves the irreducible rows. Shapes are
    processed largest-first, which is compatible with the unitriangular
    transition between the two bases.
    """
    if n > 6:
        raise ValueError("brute table limited to n <= 6")
    reps: dict[CycleType, tuple[int, ...]] = {}
    for g in permutations(range(n)):
        reps.setdefault(perm_cycle_type(g), g)
    classes = sorted(reps, reverse=True)
    class_sizes = {ct: ct.class_size() for ct in classes}

    def inner(u: dict, v: dict) -> Fraction:
        total = sum(class_sizes[ct] * u[ct] * v[ct] for ct in classes)
        return Fraction(total, factorial(n))

    table: dict[tuple, dict[CycleType, int]] = {}
    for lam in all_partitions(n):
        shape = tuple(lam)
        eta = {}
        for ct in classes:
            g = reps[ct]
            eta[ct] = sum(
                1
                for tabloid in _tabloids(n, shape)
                if all({g[v] for v in block} == set(block) for block in tabloid)
            )
        row = {ct: Fraction(eta[ct]) for ct in classes}
        for done in table.values():
            coeff = inner(row, done)
            if coeff:
                for ct in classes:
                    row[ct] -= coeff * done[ct]
        assert inner(row, row) == 1, f"row for {shape} is not irreducible"
        table[shape] = {ct: int(row[ct]) for ct in classes}
    return table


def enumerate_perms(n: int):
    return permutations(range(n))


def uniform_fixed_histogram_by_enumeration(n: int) -> dict[int, Fraction]:
    counts: dict[int, int] = {}
    for g in permutations(range(n)):
        fix = sum(1 for j, v in enumerate(g) if j == v)
        counts[fix] = counts.get(fix, 0) + 1
    return {j: Fraction(c, factorial(n)) for j, c in sorted(counts.items())}

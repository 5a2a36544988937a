"""Multiplicities of irreducibles in tensor powers of the defining representation.

Four routes to the same number m(lam, r):

* mult_skew: Stirling-weighted sum of skew tableau counts with single-row
  inner shapes (the production algorithm, valid for every lam and r).
* mult_updown: expansion in box-removal/box-addition operators applied to
  the one-row shape, with path counts accumulated on weighted states.
* mult_large_first_row: closed form through the shape below the first
  row, valid only while r is at most n minus the second part.
* mult_oracle: the definitional character inner product of the rth power
  of the fixed-point count, by full group enumeration at small n.

m(lam, 0) is 1 for the one-row shape and 0 otherwise, which keeps the
moment engines total.
"""
from __future__ import annotations

from itertools import permutations
from math import comb, factorial

from .characters import character, perm_cycle_type
from .errors import EnumerationLimitError, FirstRowGuardError
from .partitions import Partition, dim
from .setpartitions import stirling_row
from .tableaux import skew_syt_count


def _single_row(m: int) -> Partition:
    return Partition((m,)) if m > 0 else Partition()


def mult_skew(lam, r: int) -> int:
    """Stirling-weighted skew-count formula; total in lam and r."""
    lam = Partition(lam)
    if r < 0:
        raise ValueError("r must be nonnegative")
    n = lam.n
    row = stirling_row(r)
    total = 0
    for a in range(min(r, n) + 1):
        if row[a]:
            total += row[a] * skew_syt_count(lam, _single_row(n - a))
    return total


def _box_additions(parts: tuple) -> list[tuple]:
    out = []
    for i in range(len(parts)):
        if i == 0 or parts[i - 1] > parts[i]:
            out.append(parts[:i] + (parts[i] + 1,) + parts[i + 1:])
    out.append(parts + (1,))
    return out


def mult_updown(lam, r: int) -> int:
    """Operator-expansion evaluation, independent of the skew-count path.

    For each block count a, the one-row shape loses a boxes (one way) and
    regains a boxes one at a time in all ways; the weight accumulated on
    lam, Stirling-summed over a, is the multiplicity.
    """
    lam = Partition(lam)
    if r < 0:
        raise ValueError("r must be nonnegative")
    n = lam.n
    row = stirling_row(r)
    key = tuple(lam)
    total = 0
    for a in range(min(r, n) + 1):
        if not row[a]:
            continue
        state: dict[tuple, int] = {tuple(_single_row(n - a)): 1}
        for _ in range(a):
            grown: dict[tuple, int] = {}
            for parts, weight in state.items():
                for bigger in _box_additions(parts):
                    grown[bigger] = grown.get(bigger, 0) + weight
            state = grown
        total += row[a] * state.get(key, 0)
    return total


def mult_large_first_row(lam, r: int) -> int:
    """Closed form via the shape below the first row.

    Requires 1 <= r <= n - second part; outside that range the formula is
    invalid and the caller must fall back to mult_skew.
    """
    lam = Partition(lam)
    n = lam.n
    second = lam[1] if len(lam) > 1 else 0
    if not 1 <= r <= n - second:
        raise FirstRowGuardError(f"closed form needs 1 <= r <= {n - second}, got {r}")
    bar = lam.first_row_removed()
    d_bar = dim(bar)
    size_bar = bar.n
    row = stirling_row(r)
    return d_bar * sum(row[a] * comb(a, size_bar) for a in range(r + 1))


def mult_oracle(lam, r: int) -> int:
    """Definitional multiplicity by summing over every group element."""
    lam = Partition(lam)
    n = lam.n
    if n > 7:
        raise EnumerationLimitError(f"full enumeration limited to n <= 7, got {n}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    char_cache: dict[tuple, int] = {}
    total = 0
    for g in permutations(range(n)):
        ct = perm_cycle_type(g)
        chi = char_cache.get(ct)
        if chi is None:
            chi = character(lam, ct)
            char_cache[ct] = chi
        total += ct.n_1 ** r * chi
    q, rem = divmod(total, factorial(n))
    if rem:
        raise ArithmeticError("inner product is not an integer")
    return q

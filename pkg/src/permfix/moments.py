"""Exact moment engines for three non-uniform permutation models.

Models:

* commutator with both factors uniform: rth moment is the sum over
  shapes of multiplicity over dimension;
* commutator with one factor fixed in a class x: rth moment weights each
  shape by the squared character at x over the dimension;
* the i-cycle walk after k steps: each shape contributes dimension times
  the kth power of its i-cycle character ratio times the multiplicity.

Every sum runs only over shapes whose first part is at least n - r; the
multiplicity vanishes elsewhere. Commutator moments are exact rationals.
The walk offers an exact rational path (small k) and a high-precision
float path that powers ratios in log space, since |ratio| <= 1 and k can
reach n log n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import log

import mpmath
from mpmath import mp

from .characters import CycleType, char_ratio_icycle, character
from .errors import EnumerationLimitError, SizeMismatchError, ValidationError
from .multiplicity import mult_skew
from .partitions import Partition, all_partitions, dim, partitions_with_large_first_row
from .setpartitions import poisson_moment

DEFAULT_PRECISION_BITS = 128


def _choose2(m: int) -> int:
    return m * (m - 1) // 2


def moment_commutator_random(n: int, r: int) -> Fraction:
    """rth moment of the fixed points of a commutator of two uniform factors."""
    if n < 1 or r < 0:
        raise ValidationError("need n >= 1 and r >= 0")
    total = Fraction(0)
    for lam in partitions_with_large_first_row(n, min(r, n)):
        m = mult_skew(lam, r)
        if m:
            total += Fraction(m, dim(lam))
    return total


def moment_commutator_fixed(n: int, x, r: int) -> Fraction:
    """rth moment of the fixed points of a commutator with one factor in class x."""
    x = CycleType(x)
    if x.n != n:
        raise SizeMismatchError(f"cycle type {x!r} has size {x.n}, expected {n}")
    if r < 0:
        raise ValidationError("r must be nonnegative")
    total = Fraction(0)
    for lam in partitions_with_large_first_row(n, min(r, n)):
        m = mult_skew(lam, r)
        if m:
            chi = character(lam, x)
            if chi:
                total += Fraction(m * chi * chi, dim(lam))
    return total


def moment_commutator_fixed_closed(n: int, x, r: int) -> Fraction:
    """Closed forms for the mean and second moment of the fixed-x model."""
    x = CycleType(x)
    if x.n != n:
        raise SizeMismatchError(f"cycle type {x!r} has size {x.n}, expected {n}")
    n1, n2 = x.n_1, x.n_2
    if r == 1:
        if n < 2:
            raise ValidationError("mean closed form needs n >= 2")
        return 1 + Fraction((n1 - 1) ** 2, n - 1)
    if r == 2:
        if n < 4:
            raise ValidationError("second-moment closed form needs n >= 4")
        return (
            2
            + Fraction(3 * (n1 - 1) ** 2, n - 1)
            + Fraction((_choose2(n1 - 1) + n2 - 1) ** 2, n * (n - 3) // 2)
            + Fraction((_choose2(n1 - 1) - n2) ** 2, (n - 1) * (n - 2) // 2)
        )
    raise ValidationError(f"closed forms cover r in {{1, 2}}, got {r}")


def _validate_walk(n: int, i: int, k: int, r: int) -> None:
    if not 2 <= i <= n:
        raise ValidationError(f"need 2 <= i <= {n}, got i = {i}")
    if k < 0 or r < 0:
        raise ValidationError("k and r must be nonnegative")


def moment_icycle_walk_exact(n: int, i: int, k: int, r: int) -> Fraction:
    """Exact rational rth moment after k steps of the i-cycle walk.

    Ratio powers are taken literally, so this path is meant for modest k;
    the float path below handles cutoff-scale step counts.
    """
    _validate_walk(n, i, k, r)
    total = Fraction(0)
    for lam in partitions_with_large_first_row(n, min(r, n)):
        m = mult_skew(lam, r)
        if not m:
            continue
        ratio = char_ratio_icycle(lam, i)
        total += dim(lam) * ratio ** k * m
    return total


def moment_icycle_walk(
    n: int, i: int, k: int, r: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> mpmath.mpf:
    """rth moment after k steps, as a high-precision real.

    Each term is dim * sign^k * exp(k * log|ratio|) * multiplicity,
    accumulated in a fixed shape order with guard precision and rounded
    to the requested precision at the end.
    """
    _validate_walk(n, i, k, r)
    with mp.workprec(precision_bits + 40):
        terms = []
        for lam in partitions_with_large_first_row(n, min(r, n)):
            m = mult_skew(lam, r)
            if not m:
                continue
            ratio = char_ratio_icycle(lam, i)
            if ratio == 0:
                power = mpmath.mpf(1) if k == 0 else mpmath.mpf(0)
            else:
                magnitude = mpmath.exp(
                    k * mpmath.log(mpmath.mpf(abs(ratio.numerator)) / ratio.denominator)
                )
                power = -magnitude if (ratio < 0 and k % 2) else magnitude
            terms.append(mpmath.mpf(dim(lam)) * power * m)
        total = mpmath.fsum(terms)
    with mp.workprec(precision_bits):
        return +total


def cutoff_steps(n: int, i: int, c: float) -> int:
    """Step count n*log(n)/i + c*n rounded to the nearest integer, ties to even."""
    if n < 1 or i < 1:
        raise ValidationError("need n >= 1 and i >= 1")
    return round(n * log(n) / i + c * n)


@dataclass(frozen=True)
class WalkCutoffRow:
    r: int
    moment: mpmath.mpf
    reference: mpmath.mpf
    difference: mpmath.mpf


@dataclass(frozen=True)
class WalkCutoffReport:
    n: int
    i: int
    c: float
    steps: int
    poisson_mean: mpmath.mpf
    rows: tuple[WalkCutoffRow, ...]


def walk_cutoff_comparison(
    n: int,
    i: int,
    c: float,
    r_max: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> WalkCutoffReport:
    """Walk moments at the cutoff step count against their Poisson targets."""
    k = cutoff_steps(n, i, c)
    with mp.workprec(precision_bits):
        mean = 1 + mpmath.exp(-i * mpmath.mpf(c))
    rows = []
    for r in range(1, r_max + 1):
        moment = moment_icycle_walk(n, i, k, r, precision_bits)
        with mp.workprec(precision_bits):
            reference = +poisson_moment(r, mean)
            rows.append(
                WalkCutoffRow(
                    r=r, moment=moment, reference=reference,
                    difference=moment - reference,
                )
            )
    return WalkCutoffReport(
        n=n, i=i, c=c, steps=k, poisson_mean=mean, rows=tuple(rows)
    )


def walk_exact_distribution(n: int, i: int, k: int) -> dict[int, Fraction]:
    """Exact law of the fixed-point count after k steps of the i-cycle walk.

    Inverts the class-function expansion of the walk over all conjugacy
    classes, so it is feasible only at small n. Probabilities are exact
    rationals, nonnegative, and sum to one.
    """
    if n > 8:
        raise EnumerationLimitError(f"class-sum inversion limited to n <= 8, got {n}")
    _validate_walk(n, i, k, 0)
    shapes = list(all_partitions(n))
    weights = [dim(tau) * char_ratio_icycle(tau, i) ** k for tau in shapes]
    histogram: dict[int, Fraction] = {}
    total = Fraction(0)
    for mu_parts in all_partitions(n):
        mu = CycleType(mu_parts)
        acc = Fraction(0)
        for tau, w in zip(shapes, weights):
            if w:
                acc += w * character(tau, mu)
        prob = acc / mu.centralizer_order()
        if prob < 0:
            raise ArithmeticError(f"negative class probability at {mu!r}")
        if prob:
            histogram[mu.n_1] = histogram.get(mu.n_1, Fraction(0)) + prob
            total += prob
    if total != 1:
        raise ArithmeticError("walk distribution does not sum to 1")
    return dict(sorted(histogram.items()))


@dataclass(frozen=True)
class WalkTermAtCutoff:
    shape: Partition
    t: int
    steps: int
    term: mpmath.mpf
    limit: mpmath.mpf


def walk_term_at_cutoff(
    lam, i: int, c: float, n: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> WalkTermAtCutoff:
    """Single-shape walk term dim * ratio^steps at the cutoff, with its limit.

    For a shape whose first part is n - t, the term approaches
    exp(-i*t*c) times the dimension of the shape below the first row,
    divided by t factorial.
    """
    lam = Partition(lam)
    if lam.n != n:
        raise SizeMismatchError(f"|{lam!r}| = {lam.n}, expected {n}")
    t = n - lam[0] if lam else 0
    k = cutoff_steps(n, i, c)
    ratio = char_ratio_icycle(lam, i)
    with mp.workprec(precision_bits + 40):
        if ratio == 0:
            power = mpmath.mpf(1) if k == 0 else mpmath.mpf(0)
        else:
            magnitude = mpmath.exp(
                k * mpmath.log(mpmath.mpf(abs(ratio.numerator)) / ratio.denominator)
            )
            power = -magnitude if (ratio < 0 and k % 2) else magnitude
        term = mpmath.mpf(dim(lam)) * power
        bar = lam.first_row_removed()
        limit = (
            mpmath.exp(-i * t * mpmath.mpf(c))
            * dim(bar)
            / mpmath.factorial(t)
        )
    with mp.workprec(precision_bits):
        return WalkTermAtCutoff(shape=lam, t=t, steps=k, term=+term, limit=+limit)


@dataclass(frozen=True)
class MomentReport:
    """Moments r = 1..R of one model with Poisson reference values."""

    model: str
    params: dict
    moments: tuple
    reference: tuple
    formula_used: tuple = field(default=())


def commutator_random_report(n: int, r_max: int) -> MomentReport:
    moments = tuple(moment_commutator_random(n, r) for r in range(1, r_max + 1))
    reference = tuple(poisson_moment(r, 1) for r in range(1, r_max + 1))
    return MomentReport(
        model="commutator_both_random",
        params={"n": n},
        moments=moments,
        reference=reference,
        formula_used=("multiplicity-over-dimension",) * r_max,
    )


def commutator_fixed_report(n: int, x, r_max: int) -> MomentReport:
    x = CycleType(x)
    moments = []
    formulas = []
    for r in range(1, r_max + 1):
        moments.append(moment_commutator_fixed(n, x, r))
        formulas.append("squared-character-sum")
    reference = tuple(poisson_moment(r, 1) for r in range(1, r_max + 1))
    return MomentReport(
        model="commutator_fixed_x",
        params={"n": n, "x": tuple(x)},
        moments=tuple(moments),
        reference=reference,
        formula_used=tuple(formulas),
    )


def icycle_walk_report(
    n: int,
    i: int,
    k: int,
    r_max: int,
    c: float | None = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> MomentReport:
    """Walk moments with the Poisson reference implied by the step count.

    If c is not supplied it is recovered from k by inverting the cutoff
    relation, so a reference mean is always available.
    """
    if c is None:
        c = (k - n * log(n) / i) / n
    with mp.workprec(precision_bits):
        mean = 1 + mpmath.exp(-i * mpmath.mpf(c))
        reference = tuple(+poisson_moment(r, mean) for r in range(1, r_max + 1))
    moments = tuple(
        moment_icycle_walk(n, i, k, r, precision_bits) for r in range(1, r_max + 1)
    )
    return MomentReport(
        model="icycle_walk",
        params={"n": n, "i": i, "k": k, "c": c},
        moments=moments,
        reference=reference,
        formula_used=("dimension-ratio-power-sum",) * r_max,
    )

"""Equivariant localisation sums over pairs of partitions.

The surfaces in play are total spaces of a negative line bundle over
the projective line, carrying a circle action with two isolated fixed
points.  The induced action on the n-th Hilbert scheme of points has
isolated fixed points indexed by pairs of partitions whose sizes add up
to n.  Summing a multiplicative class over those fixed points, weighted
by the tangent weights, expresses the class in the fixed-point basis;
for the self-dual twist (gamma = 2) everything collapses to hook
lengths and can be pushed down to a two-variable generating series
Z(x, y).

Two independent constructions of Z are provided: the direct fixed-point
sum (``z_series_hookform``) and a coefficient-extraction route through
a bivariate auxiliary series (``z_series_residue``).  They must agree,
and the closed form in ``closedform`` must agree with both; that triple
agreement is the package's central correctness check.

Set the environment variable HILBFOCK_THREADS to parallelise the sums
over partition pairs.  Results are reduced in enumeration order, so the
output is identical no matter the thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .partitions import (
    Partition,
    c_prime_product,
    enumerate_partitions,
    hook,
    hook_product,
    weight_multiset,
)
from .series import (
    InsufficientOrderError,
    Series1,
    Series2,
    compose,
    divide_by_x_minus_y,
    negate_argument,
    reciprocal,
    scale_argument,
    shift_up,
)
from .symfun import schur_two_vars


@dataclass(frozen=True)
class FixedPointBasisVector:
    """A fixed point of the circle action, indexed by two partitions."""

    lambda0: Partition
    lambda1: Partition

    @property
    def level(self) -> int:
        return self.lambda0.size + self.lambda1.size

    def __str__(self) -> str:
        return f"[{self.lambda0}, {self.lambda1}]"


@dataclass(frozen=True)
class EquivariantClassVector:
    """A class at level n expanded over the fixed-point basis.

    ``entries`` keeps the deterministic enumeration order of
    ``level_pairs``; use ``as_dict`` for order-independent lookups.
    """

    n: int
    entries: tuple[tuple[FixedPointBasisVector, Fraction], ...]

    def as_dict(self) -> dict[FixedPointBasisVector, Fraction]:
        return dict(self.entries)

    def coefficient(self, pair: FixedPointBasisVector) -> Fraction:
        for key, value in self.entries:
            if key == pair:
                return value
        raise KeyError(f"{pair} is not a level-{self.n} basis vector")


def level_pairs(n: int) -> tuple[FixedPointBasisVector, ...]:
    """All partition pairs with sizes summing to n, in a fixed order.

    The first partition's size descends from n to 0; within a size,
    partitions come in reverse lexicographic order.
    """
    pairs = []
    for size0 in range(n, -1, -1):
        for lambda0 in enumerate_partitions(size0):
            for lambda1 in enumerate_partitions(n - size0):
                pairs.append(FixedPointBasisVector(lambda0, lambda1))
    return tuple(pairs)


def tangent_weights(pair: FixedPointBasisVector, gamma: int) -> tuple[int, ...]:
    """Tangent weights of the Hilbert scheme at the fixed point.

    The component supported at the zero section's negative fixed point
    contributes the weight multiset of lambda0 at (-1, -1); the other
    fixed point contributes that of lambda1 at (gamma - 1, 1).
    """
    combined = weight_multiset(pair.lambda0, -1, -1) + weight_multiset(pair.lambda1, gamma - 1, 1)
    return tuple(sorted(combined))


def _thread_count() -> int:
    raw = os.environ.get("HILBFOCK_THREADS", "")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn: Callable, items: Sequence) -> list:
    """Map preserving input order, threaded when HILBFOCK_THREADS asks for it."""
    workers = _thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def pair_coefficient(f: Series1, pair: FixedPointBasisVector, gamma: int) -> Fraction:
    """Coefficient of one fixed-point basis vector at any twist.

    This is the degree-n coefficient in u of the product of f(w u) over
    all tangent weights w, divided by the product of the primed cell
    polynomials of the two partitions, evaluated at (-1, -1) and
    (gamma - 1, 1) respectively.
    """
    n = pair.level
    if f.order < n:
        raise InsufficientOrderError(
            f"insufficient precision: level {n} needs the class series to degree {n}, "
            f"got order {f.order}"
        )
    denominator = c_prime_product(pair.lambda0, -1, -1) * c_prime_product(
        pair.lambda1, gamma - 1, 1
    )
    if denominator == 0:
        raise ValueError(
            f"degenerate fixed-point denominator for {pair} at gamma={gamma}"
        )
    truncated = f.truncate(n)
    numerator = Series1.one(n)
    for w in tangent_weights(pair, gamma):
        numerator = numerator * scale_argument(truncated, w)
    return numerator.coefficient(n) / denominator


def equivariant_class_coeffs(f: Series1, gamma: int, n: int) -> EquivariantClassVector:
    """Expand the level-n equivariant class over the fixed-point basis."""
    if f.constant_term != f.ring.one:
        raise ValueError("a multiplicative class series must have constant term 1")
    if f.order < n:
        raise InsufficientOrderError(
            f"insufficient precision: level {n} needs the class series to degree {n}, "
            f"got order {f.order}"
        )
    pairs = level_pairs(n)
    values = _map_ordered(lambda pair: pair_coefficient(f, pair, gamma), pairs)
    return EquivariantClassVector(n, tuple(zip(pairs, values)))


def _hook_coefficient_from_even_part(F: Series1, pair: FixedPointBasisVector) -> Fraction:
    n = pair.level
    truncated = F.truncate(n)
    numerator = Series1.one(n)
    for partition in (pair.lambda0, pair.lambda1):
        for cell in partition.cells():
            numerator = numerator * scale_argument(truncated, hook(partition, cell))
    sign = -1 if pair.lambda0.size % 2 else 1
    denominator = hook_product(pair.lambda0) * hook_product(pair.lambda1)
    return Fraction(sign) * numerator.coefficient(n) / denominator


def hook_coefficient(f: Series1, pair: FixedPointBasisVector) -> Fraction:
    """The gamma = 2 fixed-point coefficient in pure hook-length form.

    Equals (-1)^(size of lambda0) times the degree-n u-coefficient of
    the product of F(h(w) u) over all cells of both diagrams, divided by
    the two hook products, where F(u) = f(u) f(-u).  Cross-checked in
    the verification suite against ``pair_coefficient`` at gamma = 2.
    """
    n = pair.level
    if f.order < n:
        raise InsufficientOrderError(
            f"insufficient precision: level {n} needs the class series to degree {n}, "
            f"got order {f.order}"
        )
    F = f.truncate(n) * negate_argument(f.truncate(n))
    return _hook_coefficient_from_even_part(F, pair)


def z_series_hookform(f: Series1, N: int) -> Series2:
    """The generating series Z(x, y) by direct fixed-point summation.

    Z collects, level by level, the middle-degree part of the
    multiplicative class with series f, recorded as a two-variable
    polynomial.  Each pair of partitions contributes its hook-length
    coefficient times the product of the two-variable Schur
    specialisations; pairs where either partition has three or more
    rows are pruned because their Schur factor vanishes identically.
    """
    if f.order < N:
        raise InsufficientOrderError(
            f"insufficient precision: requested total degree {N}, class series has order {f.order}"
        )
    fN = f.truncate(N)
    F = fN * negate_argument(fN)
    pairs = [
        pair
        for n in range(N + 1)
        for pair in level_pairs(n)
        if pair.lambda0.length <= 2 and pair.lambda1.length <= 2
    ]

    def contribution(pair: FixedPointBasisVector) -> Series2:
        coefficient = _hook_coefficient_from_even_part(F, pair)
        if coefficient == 0:
            return Series2.zero(N)
        schur_product = schur_two_vars(pair.lambda0, N) * schur_two_vars(pair.lambda1, N)
        return schur_product * coefficient

    total = Series2.zero(N)
    for piece in _map_ordered(contribution, pairs):
        total = total + piece
    return total


def z_series_residue(f: Series1, N: int) -> Series2:
    """The generating series Z(x, y) by bivariate coefficient extraction.

    Independent of the fixed-point sum: with F(u) = f(u) f(-u) and
    G = u / F(u), the coefficient

        c(r, s) = [a^r b^s] G(a - b) G(b - a) F(a)^(r+1) F(b)^(s+1)

    assembles Z as -1/(x - y)^2 times the sum of (-x)^r (-y)^s c(r, s).
    The division by (x - y)^2 is performed twice by exact synthetic
    division, which is why the class series must be known two degrees
    beyond the requested truncation.
    """
    M = N + 2
    if f.order < M:
        raise InsufficientOrderError(
            f"insufficient precision: requested total degree {N} needs the class "
            f"series to degree {M}, got order {f.order}"
        )
    fM = f.truncate(M)
    F = fM * negate_argument(fM)
    G = shift_up(reciprocal(F).truncate(M - 1), 1)

    a_minus_b = Series2.from_dict({(1, 0): Fraction(1), (0, 1): Fraction(-1)}, M)
    P = compose(G, a_minus_b) * compose(G, -a_minus_b)
    F_in_a = Series2.from_series1_in_x(F)
    F_in_b = Series2.from_series1_in_y(F)

    signed = {}
    row_product = P
    for r in range(M + 1):
        row_product = row_product * F_in_a
        cell_product = row_product
        for s in range(M + 1 - r):
            cell_product = cell_product * F_in_b
            value = cell_product.coefficient(r, s)
            if value:
                signed[(r, s)] = -value if (r + s) % 2 else value
    summed = Series2.from_dict(signed, M)
    return -divide_by_x_minus_y(divide_by_x_minus_y(summed))

"""Closed-form coefficient tables for Hilbert schemes of points.

For a multiplicative characteristic class with defining series f, the
integrals of the class over Hilbert schemes of points on the relevant
surfaces are governed by a single change of variables: the
compositional inverse g of G(z) = z / (f(z) f(-z)).  Everything in this
module is a corollary of that fact.

Three families of coefficients are produced.

* ``a_k_table`` and ``a_kl_table``: the raw one- and two-index
  coefficients read off from g and from a bivariate logarithm built out
  of g.  These feed the generating series ``z_closed`` and must match
  the localisation sums exactly.
* ``chern_character_tables`` and ``corollary_via_dual``: the Chern
  character specialisation, once through explicit factorial formulas
  and once through dual-number (square-zero) coefficients, which acts
  as an independent derivation of the same numbers.
* ``to_universal`` and ``taut_tables``: the conversion to the
  coefficients that multiply creation-operator monomials in the Fock
  space picture, and the variant tables for the rank-one tautological
  bundle.

All arithmetic is exact.  Functions accept series over the rational
field or over the dual numbers; preconditions on the truncation order
are documented per function and violations raise
InsufficientOrderError rather than returning silently wrong tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .rings import DUALS, DualNumber
from .series import (
    InsufficientOrderError,
    Series1,
    Series2,
    compose,
    compositional_inverse,
    differentiate,
    divide_by_x_minus_y,
    negate_argument,
    reciprocal,
    series_log,
    shift_down,
    shift_up,
)

KIND_THEOREM = "theorem_a_kl"
KIND_UNIVERSAL = "universal_a_kl"
KIND_CHERN_CHARACTER = "chern_character"
KIND_TAUTOLOGICAL = "tautological"

ALL_KINDS = (KIND_THEOREM, KIND_UNIVERSAL, KIND_CHERN_CHARACTER, KIND_TAUTOLOGICAL)

# Tables of these kinds vanish in odd total degree; the tautological
# tables do not (their g is not an odd series).
_EVEN_KINDS = frozenset({KIND_THEOREM, KIND_UNIVERSAL, KIND_CHERN_CHARACTER})


@dataclass(frozen=True)
class MultiplicativeClass:
    """A multiplicative characteristic class, determined by one series.

    The class of a bundle is the product of f evaluated at the Chern
    roots, so f must start with constant term 1.
    """

    name: str
    f: Series1

    def __post_init__(self) -> None:
        if self.f.constant_term != self.f.ring.one:
            raise ValueError("a multiplicative class series must have constant term 1")


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients indexed by pairs (k, l) with k >= l >= 1.

    Only the k >= l half is stored; the full table is the symmetric
    extension.  ``kind`` records which construction produced the table,
    and for every kind except the tautological one the entries of odd
    total degree must vanish, which is checked on construction.
    """

    kind: str
    max_degree: int
    entries: Mapping[tuple[int, int], Fraction | DualNumber]

    def __post_init__(self) -> None:
        if self.kind not in ALL_KINDS:
            raise ValueError(f"unknown coefficient table kind: {self.kind!r}")
        for (k, l), value in self.entries.items():
            if not (isinstance(k, int) and isinstance(l, int) and k >= l >= 1):
                raise ValueError(f"bad table index {(k, l)}: need integers k >= l >= 1")
            if k + l > self.max_degree:
                raise ValueError(f"table index {(k, l)} exceeds max degree {self.max_degree}")
            if self.kind in _EVEN_KINDS and (k + l) % 2 and value != 0:
                raise ValueError(
                    f"entry {(k, l)} of odd total degree must vanish in a {self.kind} table"
                )

    def value(self, k: int, l: int) -> Fraction | DualNumber:
        """Symmetric lookup: value(k, l) == value(l, k)."""
        if k < l:
            k, l = l, k
        return self.entries[(k, l)]


def _dense(entries: dict, kind: str, max_degree: int) -> CoeffTable:
    """Fill in explicit zeros for every admissible index up to max_degree."""
    full = {}
    for total in range(2, max_degree + 1):
        for k in range((total + 1) // 2, total):
            full[(k, total - k)] = Fraction(0)
    full.update(entries)
    return CoeffTable(kind, max_degree, full)


def _exponential(rate: Fraction, order: int) -> Series1:
    """The series of exp(rate * x), built termwise to avoid a log/exp round trip."""
    coefficients = [Fraction(1)]
    for k in range(1, order + 1):
        coefficients.append(coefficients[-1] * rate / k)
    return Series1.from_coefficients(tuple(coefficients), order)


def _todd_series(order: int) -> Series1:
    # x / (1 - exp(-x)); the denominator is divisible by x exactly once.
    denominator = Series1.one(order + 1) - _exponential(Fraction(-1), order + 1)
    return reciprocal(shift_down(denominator, 1))


def _l_genus_series(order: int) -> Series1:
    # x / tanh(x) = cosh(x) / (sinh(x)/x).
    plus = _exponential(Fraction(1), order + 1)
    minus = _exponential(Fraction(-1), order + 1)
    sinh_over_x = shift_down((plus - minus) * Fraction(1, 2), 1)
    cosh = ((plus + minus) * Fraction(1, 2)).truncate(order)
    return cosh * reciprocal(sinh_over_x)


def _a_hat_series(order: int) -> Series1:
    # (x/2) / sinh(x/2) = (1/2) / (sinh(x/2)/x).
    half = Fraction(1, 2)
    sinh_half = (_exponential(half, order + 1) - _exponential(-half, order + 1)) * half
    return reciprocal(shift_down(sinh_half, 1)) * half


_PRESET_BUILDERS = {
    "trivial": lambda order: Series1.one(order),
    "chern-total": lambda order: Series1.one(order) + Series1.monomial(Fraction(1), 1, order),
    "todd": _todd_series,
    "l-genus": _l_genus_series,
    "a-hat": _a_hat_series,
}

PRESET_NAMES = tuple(_PRESET_BUILDERS)


def preset_class(name: str, order: int) -> MultiplicativeClass:
    """One of the built-in classes, with its series truncated at ``order``."""
    try:
        builder = _PRESET_BUILDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown class preset {name!r}; choose from {', '.join(PRESET_NAMES)}"
        ) from None
    return MultiplicativeClass(name, builder(order))


def big_g(f: Series1) -> Series1:
    """G(z) = z / (f(z) f(-z)), an odd series with linear coefficient 1."""
    ring = f.ring
    if f.constant_term != ring.one:
        raise ValueError("a multiplicative class series must have constant term 1")
    if f.order < 1:
        raise InsufficientOrderError(
            "insufficient precision: at least the linear coefficient of f is needed"
        )
    F = f * negate_argument(f)
    return shift_up(reciprocal(F).truncate(f.order - 1), 1)


def small_g(f: Series1, N: int) -> Series1:
    """The compositional inverse of big_g(f), truncated at order N."""
    if f.order < N:
        raise InsufficientOrderError(
            f"insufficient precision: order {N} requested, class series has order {f.order}"
        )
    return compositional_inverse(big_g(f.truncate(N)))


def a_k_table(f: Series1, N: int) -> dict[int, Fraction]:
    """The single-index coefficients a_k = [x^k] g / k for 1 <= k <= N."""
    g = small_g(f, N)
    return {k: g.coefficient(k) / k for k in range(1, N + 1)}


def a_kl_table(f: Series1, N: int) -> CoeffTable:
    """The double-index coefficients, as the mixed coefficients of a log.

    With g = small_g(f) and the difference d = g(x) - g(y), the table
    collects [x^k y^l] log( d / ((x - y) f(d) f(-d)) ) over k >= l >= 1
    and k + l <= N.  The division by (x - y) costs one degree, so the
    class series must be supplied one order beyond N.
    """
    if f.order < N + 1:
        raise InsufficientOrderError(
            f"insufficient precision: the pair table to total degree {N} needs the "
            f"class series to degree {N + 1}, got order {f.order}"
        )
    fine = f.truncate(N + 1)
    g = small_g(fine, N + 1)
    delta = Series2.from_series1_in_x(g) - Series2.from_series1_in_y(g)
    ratio = divide_by_x_minus_y(delta)
    F = fine * negate_argument(fine)
    F_of_delta = compose(F, delta.truncate(N))
    logarithm = series_log(ratio * reciprocal(F_of_delta))
    entries = {}
    for total in range(2, N + 1):
        for k in range((total + 1) // 2, total):
            entries[(k, total - k)] = logarithm.coefficient(k, total - k)
    return CoeffTable(KIND_THEOREM, N, entries)


def z_closed(f: Series1, N: int) -> Series2:
    """The closed form of the generating series Z(x, y).

    Z = g'(x) g'(y) (G(g(x) - g(y)) / (x - y))^2, which the localisation
    module must reproduce by independent means.  Needs f one degree
    beyond N for the same reason as ``a_kl_table``.
    """
    if f.order < N + 1:
        raise InsufficientOrderError(
            f"insufficient precision: Z to total degree {N} needs the class series "
            f"to degree {N + 1}, got order {f.order}"
        )
    fine = f.truncate(N + 1)
    G = big_g(fine)
    g = compositional_inverse(G)
    delta = Series2.from_series1_in_x(g) - Series2.from_series1_in_y(g)
    ratio = divide_by_x_minus_y(compose(G, delta))
    derivative = differentiate(g)
    return (
        Series2.from_series1_in_x(derivative)
        * Series2.from_series1_in_y(derivative)
        * ratio
        * ratio
    )


def chern_character_tables(N: int) -> tuple[dict[int, Fraction], CoeffTable]:
    """Both Chern-character tables from their explicit factorial formulas.

    a_k = 2/k! for odd k and 0 otherwise; in even total degree 2m >= 2,

        a_{k,l} = (2 / (2m)!) * (1 - (-1)^k * binom(2m, k)).
    """
    a_k = {k: Fraction(2, math.factorial(k)) if k % 2 else Fraction(0) for k in range(1, N + 1)}
    entries = {}
    for m in range(1, N // 2 + 1):
        total = 2 * m
        base = Fraction(2, math.factorial(total))
        for k in range(m, total):
            sign = -1 if k % 2 else 1
            entries[(k, total - k)] = base * (1 - sign * math.comb(total, k))
    return a_k, _dense(entries, KIND_CHERN_CHARACTER, N)


def corollary_via_dual(n: int) -> CoeffTable:
    """The degree-n slice of the Chern-character table, by dual numbers.

    Runs the generic ``a_kl_table`` machinery over the square-zero
    extension of the rationals with f = 1 + eps*x^n, then reads off the
    eps-part and divides by n!.  The factorial is forced by the fact
    that the class of a bundle built from f = 1 + eps*x^n equals
    1 + eps * n! * (degree-n Chern character): expanding the product
    over Chern roots, eps^2 = 0 kills everything except the power sum.
    Must agree with ``chern_character_tables``; the acceptance suite
    checks every even n up to 12.
    """
    if n < 2 or n % 2:
        raise ValueError("the dual-number route needs an even total degree n >= 2")
    eps = DualNumber(Fraction(0), Fraction(1))
    f = Series1.one(n + 1, DUALS) + Series1.monomial(eps, n, n + 1, DUALS)
    table = a_kl_table(f, n)
    scale = Fraction(1, math.factorial(n))
    entries = {
        pair: value.infinitesimal * scale
        for pair, value in table.entries.items()
        if pair[0] + pair[1] == n
    }
    return CoeffTable(KIND_CHERN_CHARACTER, n, entries)


def to_universal(table: CoeffTable) -> CoeffTable:
    """Convert raw pair coefficients to universal (operator-basis) ones.

    The raw table multiplies the unrestricted symmetric double sum; the
    universal table multiplies the k >= l sum carrying an overall
    factor of -2.  Matching the two gives a^{(k,l)} = -a_{k,l} for
    k > l and a^{(k,k)} = -a_{k,k}/2 on the diagonal.
    """
    if table.kind not in (KIND_THEOREM, KIND_CHERN_CHARACTER):
        raise ValueError(f"cannot convert a table of kind {table.kind!r} to universal form")
    entries = {
        (k, l): -value / 2 if k == l else -value
        for (k, l), value in table.entries.items()
    }
    return CoeffTable(KIND_UNIVERSAL, table.max_degree, entries)


def taut_tables(f: Series1, N: int) -> tuple[dict[int, Fraction], CoeffTable]:
    """Coefficient tables for the rank-one tautological bundle.

    Here the change of variables uses the compositional inverse g of
    x / f(-x), and the pair table is the mixed log

        [x^k y^l] log( x y (g(x) - g(y)) / ((x - y) g(x) g(y)) ).

    The quotient x/g(x) is a unit power series, so the whole argument
    is assembled from ordinary truncated series; nothing Laurent-like
    is needed.  No parity or positivity is imposed: this g is not odd.
    """
    if f.order < N + 1:
        raise InsufficientOrderError(
            f"insufficient precision: the pair table to total degree {N} needs the "
            f"class series to degree {N + 1}, got order {f.order}"
        )
    fine = f.truncate(N + 1)
    if fine.constant_term != fine.ring.one:
        raise ValueError("a multiplicative class series must have constant term 1")
    base = shift_up(reciprocal(negate_argument(fine)).truncate(N), 1)
    g = compositional_inverse(base)
    a_k = {k: g.coefficient(k) / k for k in range(1, N + 1)}
    delta = Series2.from_series1_in_x(g) - Series2.from_series1_in_y(g)
    ratio = divide_by_x_minus_y(delta)
    unit = reciprocal(shift_down(g, 1))
    argument = ratio * Series2.from_series1_in_x(unit) * Series2.from_series1_in_y(unit)
    logarithm = series_log(argument)
    entries = {}
    for total in range(2, N + 1):
        for k in range((total + 1) // 2, total):
            entries[(k, total - k)] = logarithm.coefficient(k, total - k)
    return a_k, CoeffTable(KIND_TAUTOLOGICAL, N, entries)

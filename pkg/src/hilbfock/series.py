"""Truncated formal power series with exact coefficients.

Every series carries an explicit truncation order.  A ``Series1`` of
order N stores the coefficients of degrees 0 through N and knows
nothing beyond degree N; asking for a higher coefficient raises
``InsufficientOrderError`` instead of returning a silent zero.  Binary
operations truncate to the smaller operand order.  The same contract
holds for ``Series2`` with total degree playing the role of degree.

The analytic operations (exp, log, reciprocal, composition,
compositional inversion, the two-variable division by x - y, and
Lagrange-Good coefficient extraction) all live here as module-level
functions.  Coefficients come from one of the rings in ``rings``:
plain rationals or dual numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .rings import QQ, Ring


class SeriesError(ValueError):
    """An ill-posed series operation."""


class InsufficientOrderError(SeriesError):
    """A coefficient beyond the truncation order was requested."""


class NotInvertibleError(SeriesError):
    """The series has no inverse of the requested kind."""


# ---------------------------------------------------------------------------
# one variable


@dataclass(frozen=True)
class Series1:
    """A power series in one variable, truncated after degree ``order``.

    ``coefficients[k]`` is the coefficient of x^k for 0 <= k <= order.
    The tuple always has length order + 1.
    """

    coefficients: tuple
    order: int
    ring: Ring = QQ

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError("truncation order must be non-negative")
        coerce = self.ring.coerce
        padded = list(self.coefficients[: self.order + 1])
        padded.extend(self.ring.zero for _ in range(self.order + 1 - len(padded)))
        object.__setattr__(self, "coefficients", tuple(coerce(c) for c in padded))

    @classmethod
    def from_coefficients(cls, values: Iterable, order: int | None = None, ring: Ring = QQ) -> "Series1":
        """Series with the given coefficients from degree 0 upwards.

        When ``order`` is omitted the series is marked as known exactly
        up to the last listed degree.
        """
        values = tuple(values)
        if order is None:
            order = len(values) - 1
        return cls(values, order, ring)

    @classmethod
    def zero(cls, order: int, ring: Ring = QQ) -> "Series1":
        return cls((), order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = QQ) -> "Series1":
        return cls((ring.one,), order, ring)

    @classmethod
    def identity(cls, order: int, ring: Ring = QQ) -> "Series1":
        """The series x."""
        return cls((ring.zero, ring.one), order, ring)

    @classmethod
    def monomial(cls, coefficient: Any, exponent: int, order: int, ring: Ring = QQ) -> "Series1":
        if exponent < 0:
            raise SeriesError("exponents must be non-negative")
        values = [ring.zero] * (exponent + 1)
        if exponent <= order:
            values[exponent] = coefficient
        return cls(tuple(values), order, ring)

    # -- access ------------------------------------------------------------

    def coefficient(self, exponent: int):
        if exponent < 0:
            raise SeriesError("exponents must be non-negative")
        if exponent > self.order:
            raise InsufficientOrderError(
                f"insufficient precision: degree {exponent} requested from a "
                f"series truncated after degree {self.order}"
            )
        return self.coefficients[exponent]

    @property
    def constant_term(self):
        return self.coefficients[0]

    def is_zero(self) -> bool:
        return all(c == self.ring.zero for c in self.coefficients)

    def truncate(self, order: int) -> "Series1":
        """Forget coefficients above ``order``.  Never extends."""
        if order > self.order:
            raise SeriesError("cannot extend a truncated series; rebuild it at higher order")
        return Series1(self.coefficients[: order + 1], order, self.ring)

    # -- arithmetic ----------------------------------------------------------

    def _coerce_scalar(self, other: Any):
        try:
            return self.ring.coerce(other)
        except TypeError:
            return None

    def _require_same_ring(self, other: "Series1") -> None:
        if self.ring is not other.ring:
            raise SeriesError("operands live over different coefficient rings")

    def __add__(self, other: Any) -> "Series1":
        if isinstance(other, Series1):
            self._require_same_ring(other)
            n = min(self.order, other.order)
            return Series1(
                tuple(self.coefficients[k] + other.coefficients[k] for k in range(n + 1)),
                n,
                self.ring,
            )
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        values = (self.coefficients[0] + scalar,) + self.coefficients[1:]
        return Series1(values, self.order, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "Series1":
        return Series1(tuple(-c for c in self.coefficients), self.order, self.ring)

    def __sub__(self, other: Any) -> "Series1":
        if isinstance(other, Series1):
            return self + (-other)
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        values = (self.coefficients[0] - scalar,) + self.coefficients[1:]
        return Series1(values, self.order, self.ring)

    def __rsub__(self, other: Any) -> "Series1":
        return (-self) + other

    def __mul__(self, other: Any) -> "Series1":
        if isinstance(other, Series1):
            self._require_same_ring(other)
            n = min(self.order, other.order)
            zero = self.ring.zero
            out = [zero] * (n + 1)
            for i, a in enumerate(self.coefficients[: n + 1]):
                if a == zero:
                    continue
                for j in range(n + 1 - i):
                    b = other.coefficients[j]
                    if b == zero:
                        continue
                    out[i + j] = out[i + j] + a * b
            return Series1(tuple(out), n, self.ring)
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        return Series1(tuple(c * scalar for c in self.coefficients), self.order, self.ring)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Series1":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return reciprocal(self) ** (-exponent)
        result = Series1.one(self.order, self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == self.ring.zero:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


# ---------------------------------------------------------------------------
# two variables


@dataclass(frozen=True)
class Series2:
    """A power series in two variables, truncated by total degree.

    Storage is a dense triangle: ``rows[d][i]`` is the coefficient of
    x^i y^(d-i), for 0 <= d <= order and 0 <= i <= d.
    """

    rows: tuple
    order: int
    ring: Ring = QQ

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError("truncation order must be non-negative")
        coerce = self.ring.coerce
        zero = self.ring.zero
        fixed = []
        given = self.rows[: self.order + 1]
        for d in range(self.order + 1):
            row = list(given[d]) if d < len(given) else []
            row = row[: d + 1]
            row.extend(zero for _ in range(d + 1 - len(row)))
            fixed.append(tuple(coerce(c) for c in row))
        object.__setattr__(self, "rows", tuple(fixed))

    @classmethod
    def zero(cls, order: int, ring: Ring = QQ) -> "Series2":
        return cls((), order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = QQ) -> "Series2":
        return cls(((ring.one,),), order, ring)

    @classmethod
    def monomial(cls, coefficient: Any, i: int, j: int, order: int, ring: Ring = QQ) -> "Series2":
        if i < 0 or j < 0:
            raise SeriesError("exponents must be non-negative")
        rows: list[tuple] = []
        for d in range(min(i + j, order) + 1):
            row = [ring.zero] * (d + 1)
            if d == i + j and i + j <= order:
                row[i] = coefficient
            rows.append(tuple(row))
        return cls(tuple(rows), order, ring)

    @classmethod
    def from_dict(cls, entries: dict, order: int, ring: Ring = QQ) -> "Series2":
        """Build from a map (i, j) -> coefficient.  Entries beyond the
        order are dropped, which is the truncation semantic."""
        rows = [[ring.zero] * (d + 1) for d in range(order + 1)]
        for (i, j), value in entries.items():
            if i < 0 or j < 0:
                raise SeriesError("exponents must be non-negative")
            if i + j <= order:
                rows[i + j][i] = rows[i + j][i] + value
        return cls(tuple(tuple(row) for row in rows), order, ring)

    @classmethod
    def from_series1_in_x(cls, series: Series1) -> "Series2":
        """View f(x) as a two-variable series (y never appears)."""
        rows = []
        for d in range(series.order + 1):
            row = [series.ring.zero] * (d + 1)
            row[d] = series.coefficients[d]
            rows.append(tuple(row))
        return cls(tuple(rows), series.order, series.ring)

    @classmethod
    def from_series1_in_y(cls, series: Series1) -> "Series2":
        rows = []
        for d in range(series.order + 1):
            row = [series.ring.zero] * (d + 1)
            row[0] = series.coefficients[d]
            rows.append(tuple(row))
        return cls(tuple(rows), series.order, series.ring)

    # -- access ------------------------------------------------------------

    def coefficient(self, i: int, j: int):
        if i < 0 or j < 0:
            raise SeriesError("exponents must be non-negative")
        if i + j > self.order:
            raise InsufficientOrderError(
                f"insufficient precision: monomial x^{i} y^{j} requested from a "
                f"series truncated after total degree {self.order}"
            )
        return self.rows[i + j][i]

    def homogeneous(self, degree: int) -> tuple:
        """The row of coefficients of total degree ``degree``."""
        if degree > self.order:
            raise InsufficientOrderError(
                f"insufficient precision: total degree {degree} requested from a "
                f"series truncated after total degree {self.order}"
            )
        return self.rows[degree]

    @property
    def constant_term(self):
        return self.rows[0][0]

    def is_zero(self) -> bool:
        zero = self.ring.zero
        return all(c == zero for row in self.rows for c in row)

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise SeriesError("cannot extend a truncated series; rebuild it at higher order")
        return Series2(self.rows[: order + 1], order, self.ring)

    def swap(self) -> "Series2":
        """Exchange the two variables."""
        return Series2(tuple(tuple(reversed(row)) for row in self.rows), self.order, self.ring)

    def is_symmetric(self) -> bool:
        return all(tuple(reversed(row)) == row for row in self.rows)

    # -- arithmetic ----------------------------------------------------------

    def _coerce_scalar(self, other: Any):
        try:
            return self.ring.coerce(other)
        except TypeError:
            return None

    def _require_same_ring(self, other: "Series2") -> None:
        if self.ring is not other.ring:
            raise SeriesError("operands live over different coefficient rings")

    def __add__(self, other: Any) -> "Series2":
        if isinstance(other, Series2):
            self._require_same_ring(other)
            n = min(self.order, other.order)
            rows = tuple(
                tuple(a + b for a, b in zip(self.rows[d], other.rows[d]))
                for d in range(n + 1)
            )
            return Series2(rows, n, self.ring)
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        rows = ((self.rows[0][0] + scalar,),) + self.rows[1:]
        return Series2(rows, self.order, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "Series2":
        return Series2(tuple(tuple(-c for c in row) for row in self.rows), self.order, self.ring)

    def __sub__(self, other: Any) -> "Series2":
        if isinstance(other, Series2):
            return self + (-other)
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        rows = ((self.rows[0][0] - scalar,),) + self.rows[1:]
        return Series2(rows, self.order, self.ring)

    def __rsub__(self, other: Any) -> "Series2":
        return (-self) + other

    def __mul__(self, other: Any) -> "Series2":
        if isinstance(other, Series2):
            self._require_same_ring(other)
            n = min(self.order, other.order)
            zero = self.ring.zero
            out = [[zero] * (d + 1) for d in range(n + 1)]
            for d1 in range(n + 1):
                row1 = self.rows[d1]
                for i1 in range(d1 + 1):
                    a = row1[i1]
                    if a == zero:
                        continue
                    for d2 in range(n + 1 - d1):
                        row2 = other.rows[d2]
                        target = out[d1 + d2]
                        for i2 in range(d2 + 1):
                            b = row2[i2]
                            if b == zero:
                                continue
                            target[i1 + i2] = target[i1 + i2] + a * b
            return Series2(tuple(tuple(row) for row in out), n, self.ring)
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        rows = tuple(tuple(c * scalar for c in row) for row in self.rows)
        return Series2(rows, self.order, self.ring)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Series2":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return reciprocal(self) ** (-exponent)
        result = Series2.one(self.order, self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        terms = []
        for d, row in enumerate(self.rows):
            for i, c in enumerate(row):
                if c == self.ring.zero:
                    continue
                xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                ys = "" if d - i == 0 else ("y" if d - i == 1 else f"y^{d - i}")
                parts = [p for p in (str(c), xs, ys) if p]
                terms.append("*".join(parts))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(deg {self.order + 1})"


# ---------------------------------------------------------------------------
# analytic operations


def reciprocal(series: Series1 | Series2):
    """Multiplicative inverse, by the usual triangular recursion.

    The constant term must be a unit of the coefficient ring.
    """
    ring = series.ring
    c0 = series.constant_term
    if not ring.is_unit(c0):
        raise NotInvertibleError("constant term is not a unit, no multiplicative inverse")
    inv0 = ring.one / c0
    if isinstance(series, Series1):
        n = series.order
        out = [inv0] + [ring.zero] * n
        for k in range(1, n + 1):
            acc = ring.zero
            for i in range(1, k + 1):
                a = series.coefficients[i]
                if a != ring.zero:
                    acc = acc + a * out[k - i]
            out[k] = -inv0 * acc
        return Series1(tuple(out), n, ring)
    n = series.order
    zero = ring.zero
    out = [[zero] * (d + 1) for d in range(n + 1)]
    out[0][0] = inv0
    for d in range(1, n + 1):
        for i in range(d + 1):
            acc = zero
            # sum over nonzero-degree factors a_(e,row) * out at (d-e)
            for e in range(1, d + 1):
                row = series.rows[e]
                for p in range(e + 1):
                    a = row[p]
                    if a == zero:
                        continue
                    q = i - p
                    if 0 <= q <= d - e:
                        acc = acc + a * out[d - e][q]
            out[d][i] = -inv0 * acc
    return Series2(tuple(tuple(row) for row in out), n, ring)


def series_exp(series: Series1 | Series2):
    """Exponential of a series with zero constant term."""
    ring = series.ring
    if series.constant_term != ring.zero:
        raise SeriesError("exp requires zero constant term")
    one = Series1.one(series.order, ring) if isinstance(series, Series1) else Series2.one(series.order, ring)
    acc = one
    term = one
    for k in range(1, series.order + 1):
        term = term * series * (ring.one / ring.coerce(k))
        acc = acc + term
    return acc


def series_log(series: Series1 | Series2):
    """Logarithm of a series with constant term one."""
    ring = series.ring
    if series.constant_term != ring.one:
        raise SeriesError("log requires constant term 1")
    u = series - ring.one
    if isinstance(series, Series1):
        acc = Series1.zero(series.order, ring)
    else:
        acc = Series2.zero(series.order, ring)
    power = u
    sign = 1
    for k in range(1, series.order + 1):
        acc = acc + power * (ring.coerce(sign) / ring.coerce(k))
        power = power * u
        sign = -sign
    return acc


def compose(outer: Series1, inner: Series1 | Series2):
    """Substitute ``inner`` (zero constant term) into ``outer``.

    The one-variable form yields a Series1, the two-variable form a
    Series2.  Evaluation is by Horner's scheme, so the cost is one
    series multiplication per outer coefficient.
    """
    ring = outer.ring
    if inner.ring is not ring:
        raise SeriesError("operands live over different coefficient rings")
    if inner.constant_term != ring.zero:
        raise SeriesError("composition requires the inner series to have zero constant term")
    n = min(outer.order, inner.order)
    if isinstance(inner, Series1):
        result = Series1.zero(n, ring)
    else:
        result = Series2.zero(n, ring)
    truncated_inner = inner.truncate(n)
    for k in range(min(outer.order, n), -1, -1):
        result = result * truncated_inner + outer.coefficients[k]
    return result


def compositional_inverse(series: Series1) -> Series1:
    """The inverse under composition of a series x*(unit + ...).

    Solves degree by degree and then verifies both round-trips before
    returning; a failed round-trip would indicate a bug here, not bad
    input, and raises RuntimeError.
    """
    ring = series.ring
    if series.order < 1:
        raise InsufficientOrderError(
            "insufficient precision: compositional inversion needs at least the linear coefficient"
        )
    if series.constant_term != ring.zero or not ring.is_unit(series.coefficients[1]):
        raise NotInvertibleError("not invertible under composition")
    n = series.order
    lin_inv = ring.one / series.coefficients[1]
    coeffs = [ring.zero, lin_inv] + [ring.zero] * (n - 1)
    for k in range(2, n + 1):
        partial = Series1(tuple(coeffs[: k + 1]), k, ring)
        defect = compose(series.truncate(k), partial).coefficients[k]
        coeffs[k] = -lin_inv * defect
    result = Series1(tuple(coeffs), n, ring)
    identity = Series1.identity(n, ring)
    if compose(series, result) != identity or compose(result, series) != identity:
        raise RuntimeError("internal error: compositional inverse failed its round-trip check")
    return result


def differentiate(series: Series1) -> Series1:
    """d/dx; the order drops by one."""
    if series.order < 1:
        raise InsufficientOrderError("insufficient precision: cannot differentiate a constant-order series")
    ring = series.ring
    values = tuple(ring.coerce(k) * series.coefficients[k] for k in range(1, series.order + 1))
    return Series1(values, series.order - 1, ring)


def scale_argument(series: Series1, factor: Any) -> Series1:
    """x -> factor * x."""
    ring = series.ring
    factor = ring.coerce(factor)
    values = []
    power = ring.one
    for c in series.coefficients:
        values.append(c * power)
        power = power * factor
    return Series1(tuple(values), series.order, ring)


def negate_argument(series: Series1) -> Series1:
    """x -> -x."""
    return scale_argument(series, -series.ring.one)


def shift_up(series: Series1, k: int) -> Series1:
    """Multiply by x^k.  The order rises by k, no knowledge is lost."""
    if k < 0:
        raise SeriesError("shift amount must be non-negative")
    ring = series.ring
    values = (ring.zero,) * k + series.coefficients
    return Series1(values, series.order + k, ring)


def shift_down(series: Series1, k: int) -> Series1:
    """Divide by x^k; the low coefficients must vanish."""
    if k < 0:
        raise SeriesError("shift amount must be non-negative")
    if k > series.order:
        raise InsufficientOrderError("insufficient precision: shift exceeds the truncation order")
    ring = series.ring
    if any(c != ring.zero for c in series.coefficients[:k]):
        raise SeriesError(f"series is not divisible by x^{k}")
    return Series1(series.coefficients[k:], series.order - k, ring)


def differentiate_x(series: Series2) -> Series2:
    """Partial derivative in the first variable; order drops by one."""
    if series.order < 1:
        raise InsufficientOrderError("insufficient precision: cannot differentiate a constant-order series")
    ring = series.ring
    rows = []
    for d in range(1, series.order + 1):
        row = series.rows[d]
        rows.append(tuple(ring.coerce(i + 1) * row[i + 1] for i in range(d)))
    return Series2(tuple(rows), series.order - 1, ring)


def differentiate_y(series: Series2) -> Series2:
    return differentiate_x(series.swap()).swap()


def divide_by_x(series: Series2) -> Series2:
    """Exact division by the first variable."""
    ring = series.ring
    if series.order < 1:
        raise InsufficientOrderError("insufficient precision: cannot divide a constant-order series")
    for d in range(series.order + 1):
        if series.rows[d][0] != ring.zero:
            raise SeriesError("series is not divisible by its first variable")
    rows = tuple(tuple(series.rows[d + 1][1:]) for d in range(series.order))
    return Series2(rows, series.order - 1, ring)


def divide_by_y(series: Series2) -> Series2:
    return divide_by_x(series.swap()).swap()


def divide_by_x_minus_y(series: Series2) -> Series2:
    """Exact division by (x - y), one homogeneous layer at a time.

    Within the layer of total degree d, writing c_j for the coefficient
    of x^j y^(d-j), the quotient layer b of degree d-1 satisfies
    c_j = b_(j-1) - b_j, which is solved from the top down.  The
    leftover at j = 0 is the division remainder and must vanish.
    """
    ring = series.ring
    zero = ring.zero
    if series.rows[0][0] != zero:
        raise SeriesError("not divisible by (x - y)")
    out_rows = []
    for d in range(1, series.order + 1):
        c = series.rows[d]
        b = [zero] * d
        b[d - 1] = c[d]
        for j in range(d - 1, 0, -1):
            b[j - 1] = c[j] + b[j]
        if c[0] + b[0] != zero:
            raise SeriesError("not divisible by (x - y)")
        out_rows.append(tuple(b))
    return Series2(tuple(out_rows), series.order - 1, ring)


def coefficient_extract(series: Series1 | Series2, index) -> Any:
    """Uniform coefficient extraction; ``index`` is an int or an (i, j) pair."""
    if isinstance(series, Series1):
        return series.coefficient(index)
    i, j = index
    return series.coefficient(i, j)


def lagrange_good_extract(g, f_list: Sequence, k) -> Any:
    """Coefficient c_k in the expansion of g as a series in the f_i.

    Given f_i divisible by the i-th variable with invertible diagonal
    derivative at the origin, g expands uniquely as sum of c_k * f^k;
    this computes a single c_k as a residue turned into an ordinary
    coefficient extraction:

        c_k = [z^k] g * J * prod (f_i / z_i)^(-(k_i + 1))

    where J is the Jacobian determinant of the f_i (the plain
    derivative in one variable).  One and two variables are supported.
    """
    f_list = list(f_list)
    if isinstance(k, int):
        k = (k,)
    k = tuple(k)
    if len(f_list) != len(k):
        raise SeriesError("need exactly one index entry per series")
    if len(f_list) == 1:
        f = f_list[0]
        if not isinstance(g, Series1) or not isinstance(f, Series1):
            raise SeriesError("one-variable extraction needs Series1 arguments")
        (k1,) = k
        if k1 < 0:
            raise SeriesError("indices must be non-negative")
        h = shift_down(f, 1)  # checks divisibility by the variable
        if not f.ring.is_unit(h.constant_term):
            raise NotInvertibleError("not invertible under composition")
        factor = reciprocal(h) ** (k1 + 1)
        product = g * differentiate(f) * factor
        return product.coefficient(k1)
    if len(f_list) == 2:
        f1, f2 = f_list
        if not isinstance(g, Series2) or not isinstance(f1, Series2) or not isinstance(f2, Series2):
            raise SeriesError("two-variable extraction needs Series2 arguments")
        k1, k2 = k
        if k1 < 0 or k2 < 0:
            raise SeriesError("indices must be non-negative")
        h1 = divide_by_x(f1)
        h2 = divide_by_y(f2)
        if not g.ring.is_unit(h1.constant_term) or not g.ring.is_unit(h2.constant_term):
            raise NotInvertibleError("not invertible under composition")
        jacobian = differentiate_x(f1) * differentiate_y(f2) - differentiate_y(f1) * differentiate_x(f2)
        product = g * jacobian * (reciprocal(h1) ** (k1 + 1)) * (reciprocal(h2) ** (k2 + 1))
        return product.coefficient(k1, k2)
    raise SeriesError("at most two variables are supported")

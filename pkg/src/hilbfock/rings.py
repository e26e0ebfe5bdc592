"""Exact coefficient rings for the series layer.

Two rings are supported: the rationals, and the dual numbers over the
rationals (epsilon with epsilon squared equal to zero).  Dual numbers
carry first-order perturbation data through an otherwise rational
computation, which is how the additive Chern-character tables fall out
of the multiplicative machinery.

Nothing here is floating point.  Every coefficient in the whole package
is either a ``Fraction`` or a ``DualNumber`` built from two of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable


def to_fraction(value: Any) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting everything else."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected a rational number, got {value!r}")


@dataclass(frozen=True)
class DualNumber:
    """An element ``value + infinitesimal * eps`` of Q[eps]/(eps^2).

    Arithmetic follows the single defining relation eps^2 = 0, so
    multiplication is (a + b eps)(c + d eps) = ac + (ad + bc) eps.
    Ints and Fractions mix freely with dual numbers in expressions.
    """

    value: Fraction
    infinitesimal: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", to_fraction(self.value))
        object.__setattr__(self, "infinitesimal", to_fraction(self.infinitesimal))

    @staticmethod
    def lift(other: Any) -> "DualNumber | None":
        if isinstance(other, DualNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return DualNumber(to_fraction(other))
        return None

    def __add__(self, other: Any) -> "DualNumber":
        lifted = DualNumber.lift(other)
        if lifted is None:
            return NotImplemented
        return DualNumber(self.value + lifted.value, self.infinitesimal + lifted.infinitesimal)

    __radd__ = __add__

    def __neg__(self) -> "DualNumber":
        return DualNumber(-self.value, -self.infinitesimal)

    def __sub__(self, other: Any) -> "DualNumber":
        lifted = DualNumber.lift(other)
        if lifted is None:
            return NotImplemented
        return self + (-lifted)

    def __rsub__(self, other: Any) -> "DualNumber":
        lifted = DualNumber.lift(other)
        if lifted is None:
            return NotImplemented
        return lifted + (-self)

    def __mul__(self, other: Any) -> "DualNumber":
        lifted = DualNumber.lift(other)
        if lifted is None:
            return NotImplemented
        return DualNumber(
            self.value * lifted.value,
            self.value * lifted.infinitesimal + self.infinitesimal * lifted.value,
        )

    __rmul__ = __mul__

    def inverse(self) -> "DualNumber":
        if self.value == 0:
            raise ZeroDivisionError("dual number with zero rational part is not invertible")
        inv = 1 / self.value
        return DualNumber(inv, -self.infinitesimal * inv * inv)

    def __truediv__(self, other: Any) -> "DualNumber":
        lifted = DualNumber.lift(other)
        if lifted is None:
            return NotImplemented
        return self * lifted.inverse()

    def __rtruediv__(self, other: Any) -> "DualNumber":
        lifted = DualNumber.lift(other)
        if lifted is None:
            return NotImplemented
        return lifted * self.inverse()

    def __pow__(self, exponent: int) -> "DualNumber":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = DualNumber(Fraction(1))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        lifted = DualNumber.lift(other)
        if lifted is None:
            return NotImplemented
        return self.value == lifted.value and self.infinitesimal == lifted.infinitesimal

    def __hash__(self) -> int:
        if self.infinitesimal == 0:
            return hash(self.value)
        return hash((self.value, self.infinitesimal))

    def __bool__(self) -> bool:
        return self.value != 0 or self.infinitesimal != 0

    def __repr__(self) -> str:
        return f"DualNumber({self.value}, {self.infinitesimal})"

    def __str__(self) -> str:
        if self.infinitesimal == 0:
            return str(self.value)
        if self.value == 0:
            return f"{self.infinitesimal}*eps"
        return f"{self.value} + {self.infinitesimal}*eps"


def _to_dual(value: Any) -> DualNumber:
    lifted = DualNumber.lift(value)
    if lifted is None:
        raise TypeError(f"expected a dual number or rational, got {value!r}")
    return lifted


@dataclass(frozen=True)
class Ring:
    """Descriptor bundling the constants and predicates the series layer needs.

    Series code never inspects coefficient types directly; it asks the
    ring to coerce incoming values and to decide invertibility.
    """

    name: str
    zero: Any
    one: Any
    coerce: Callable[[Any], Any]
    is_unit: Callable[[Any], bool]

    def __repr__(self) -> str:
        return self.name


QQ = Ring("QQ", Fraction(0), Fraction(1), to_fraction, lambda c: c != 0)

DUALS = Ring(
    "QQ[eps]",
    DualNumber(Fraction(0)),
    DualNumber(Fraction(1)),
    _to_dual,
    lambda c: c.value != 0,
)

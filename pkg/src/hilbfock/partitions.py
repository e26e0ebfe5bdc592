"""Partitions, Young diagrams and their cell statistics.

Cells are addressed as 1-based (row, column) pairs.  For a cell w the
arm a(w) counts the cells strictly to its right, the leg l(w) counts
the cells strictly below, and the hook length is h(w) = a(w) + l(w) + 1.

Two weighted cell products appear in the localisation formulas:

    c(lambda; alpha, beta)       = prod over w of (alpha*(l(w)+1) + beta*a(w))
    c_prime(lambda; alpha, beta) = prod over w of (alpha*l(w) + beta*(a(w)+1))

both of which specialise to the hook product at alpha = beta = 1.  The
weight multiset W(lambda; alpha, beta) holds, for every cell, the pair

    alpha*(l(w)+1) + beta*a(w)   and   -alpha*l(w) - beta*(a(w)+1),

so it has exactly 2*|lambda| elements.  At alpha = beta = +-1 these are
the hook lengths with both signs, which is what collapses the general
formula to a pure hook-length expression.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

# A cell is a 1-based (row, column) pair inside the Young diagram.
Cell = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros in the input are stripped so that every partition
    has exactly one stored representation.
    """

    parts: tuple[int, ...]

    def __init__(self, parts=()) -> None:
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for p in parts:
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {p}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def cells(self) -> Iterator[Cell]:
        """All cells of the diagram, row by row."""
        for i, row_length in enumerate(self.parts, start=1):
            for j in range(1, row_length + 1):
                yield (i, j)

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def conjugate(self) -> "Partition":
        """Transpose the diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for row_length in self.parts:
            for j in range(row_length):
                cols[j] += 1
        return Partition(cols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition()


def _check_cell(partition: Partition, cell: Cell) -> Cell:
    if not partition.contains(cell):
        raise ValueError(f"cell {cell} lies outside the diagram of {partition}")
    return cell


def arm(partition: Partition, cell: Cell) -> int:
    """Number of cells strictly to the right of the cell."""
    i, j = _check_cell(partition, cell)
    return partition.parts[i - 1] - j


def leg(partition: Partition, cell: Cell) -> int:
    """Number of cells strictly below the cell."""
    i, j = _check_cell(partition, cell)
    return sum(1 for row_length in partition.parts[i:] if row_length >= j)


def hook(partition: Partition, cell: Cell) -> int:
    return arm(partition, cell) + leg(partition, cell) + 1


def hook_multiset(partition: Partition) -> tuple[int, ...]:
    """All hook lengths, sorted."""
    return tuple(sorted(hook(partition, w) for w in partition.cells()))


def hook_product(partition: Partition) -> int:
    product = 1
    for w in partition.cells():
        product *= hook(partition, w)
    return product


def c_product(partition: Partition, alpha, beta) -> Fraction:
    product = Fraction(1)
    for w in partition.cells():
        product *= alpha * (leg(partition, w) + 1) + beta * arm(partition, w)
    return product


def c_prime_product(partition: Partition, alpha, beta) -> Fraction:
    product = Fraction(1)
    for w in partition.cells():
        product *= alpha * leg(partition, w) + beta * (arm(partition, w) + 1)
    return product


def weight_multiset(partition: Partition, alpha, beta) -> tuple:
    """The 2|lambda| tangent weights attached to the diagram, sorted.

    Sorting fixes a canonical representation; the callers only ever
    take products over the multiset, so the order carries no meaning.
    """
    weights = []
    for w in partition.cells():
        a = arm(partition, w)
        l = leg(partition, w)
        weights.append(alpha * (l + 1) + beta * a)
        weights.append(-alpha * l - beta * (a + 1))
    return tuple(sorted(weights))


def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    return _partitions_cached(n)


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    result: list[Partition] = []

    def build(remaining: int, bound: int, prefix: list[int]) -> None:
        if remaining == 0:
            result.append(Partition(prefix))
            return
        for part in range(min(remaining, bound), 0, -1):
            prefix.append(part)
            build(remaining - part, part, prefix)
            prefix.pop()

    build(n, n, [])
    return tuple(result)


def partition_count(n: int) -> int:
    return len(enumerate_partitions(n))

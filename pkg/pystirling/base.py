"""The four base triangles and the scalar sequences read from their rows."""

import logging
from enum import Enum
from math import comb, factorial
from typing import Callable, Dict, List

from .errors import IndexRangeError
from .triangle import Triangle, truncate

logger = logging.getLogger(__name__)


class TriangleKind(Enum):
    """Base triangles."""
    BINOMIAL = "binomial"
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    LAH = "lah"

    @property
    def symbol(self) -> str:
        """Short name used in pair labels."""
        return _SYMBOLS[self]


_SYMBOLS = {
    TriangleKind.BINOMIAL: "C",
    TriangleKind.STIRLING1: "S1",
    TriangleKind.STIRLING2: "S2",
    TriangleKind.LAH: "L",
}


class SequenceKind(Enum):
    """Scalar sequences, each a single sum over one base triangle row."""
    FACTORIAL = "factorial"
    POWER2 = "power2"
    POWER3 = "power3"
    BELL = "bell"
    LAH_TOTAL = "lah-total"
    FUBINI = "fubini"
    ORDERED_CYCLE_FACT = "ordered-cycle-fact"
    COLORED_PARTITIONS = "colored-partitions"
    TOTAL_LISTS = "total-lists"
    PARTITION_PAIRS = "partition-pairs"


# Coefficient of T(n-1, m) in T(n, m) = T(n-1, m-1) + c(n, m) T(n-1, m).
# Every base triangle has T(n, n) = 1; only the binomial has T(n, 0) = 1
# for all n, the others have T(n, 0) = delta(n, 0).
_RECURRENCES: Dict[TriangleKind, Callable[[int, int], int]] = {
    TriangleKind.BINOMIAL: lambda n, m: 1,
    TriangleKind.STIRLING1: lambda n, m: n - 1,
    TriangleKind.STIRLING2: lambda n, m: m,
    TriangleKind.LAH: lambda n, m: n + m - 1,
}


# Largest build per kind; smaller orders are truncations of it.
_LARGEST: Dict[TriangleKind, Triangle] = {}


def base_triangle(kind: TriangleKind, last: int) -> Triangle:
    """Rows 0..last of a base triangle, built by its two-term recurrence."""
    if last < 0:
        raise IndexRangeError(f"order {last} is negative")
    built = _LARGEST.get(kind)
    if built is not None and last < built.order:
        return built if last == built.order - 1 else truncate(built, last)
    coefficient = _RECURRENCES[kind]
    column0 = 1 if kind is TriangleKind.BINOMIAL else 0
    rows = list(built.rows) if built is not None else [(1,)]
    for n in range(len(rows), last + 1):
        previous = rows[-1]
        row = [column0] + [0] * (n - 1) + [1]
        for m in range(1, n):
            row[m] = previous[m - 1] + coefficient(n, m) * previous[m]
        rows.append(tuple(row))
    logger.debug("built %s triangle, rows 0..%d", kind.value, last)
    _LARGEST[kind] = Triangle(tuple(rows))
    return _LARGEST[kind]


def lah_closed(n: int, m: int) -> int:
    """L(n, m) = n!/m! * C(n-1, m-1), with L(n, 0) = delta(n, 0)."""
    if m < 0 or m > n:
        raise IndexRangeError(f"Lah number L({n}, {m}) needs 0 <= m <= n")
    if m == 0:
        return 1 if n == 0 else 0
    return factorial(n) // factorial(m) * comb(n - 1, m - 1)


def _weighted_row_sums(
    kind: TriangleKind, last: int, weight: Callable[[int, int], int]
) -> List[int]:
    triangle = base_triangle(kind, last)
    return [
        sum(value * weight(n, m) for m, value in enumerate(row))
        for n, row in enumerate(triangle.rows)
    ]


def sequence(kind: SequenceKind, last: int) -> List[int]:
    """Terms 0..last of a sequence, each a weighted sum over a triangle row."""
    if last < 0:
        raise IndexRangeError(f"length {last} is negative")
    if kind is SequenceKind.FACTORIAL:
        return _weighted_row_sums(TriangleKind.STIRLING1, last, lambda n, m: 1)
    if kind is SequenceKind.POWER2:
        return _weighted_row_sums(TriangleKind.BINOMIAL, last, lambda n, m: 1)
    if kind is SequenceKind.POWER3:
        return _weighted_row_sums(TriangleKind.BINOMIAL, last, lambda n, m: 2 ** m)
    if kind is SequenceKind.BELL:
        return _weighted_row_sums(TriangleKind.STIRLING2, last, lambda n, m: 1)
    if kind is SequenceKind.LAH_TOTAL:
        return _weighted_row_sums(TriangleKind.LAH, last, lambda n, m: 1)
    if kind is SequenceKind.FUBINI:
        return _weighted_row_sums(
            TriangleKind.STIRLING2, last, lambda n, m: factorial(m)
        )
    if kind is SequenceKind.ORDERED_CYCLE_FACT:
        return _weighted_row_sums(
            TriangleKind.STIRLING1, last, lambda n, m: factorial(m)
        )
    if kind is SequenceKind.COLORED_PARTITIONS:
        return _weighted_row_sums(TriangleKind.STIRLING2, last, lambda n, m: 2 ** m)
    if kind is SequenceKind.TOTAL_LISTS:
        # n!/m! = C(n, m) (n-m)!
        return _weighted_row_sums(
            TriangleKind.BINOMIAL, last, lambda n, m: factorial(n - m)
        )
    if kind is SequenceKind.PARTITION_PAIRS:
        bell = sequence(SequenceKind.BELL, last)
        return _weighted_row_sums(
            TriangleKind.STIRLING2, last, lambda n, m: bell[m]
        )
    raise ValueError(f"unknown sequence kind: {kind}")

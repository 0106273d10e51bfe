"""Truncated lower-triangular integer matrices."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import IndexRangeError
from .utils import sign

Row = Tuple[int, ...]


@dataclass(frozen=True)
class Triangle:
    """Rows 0..N of a lower-triangular matrix with exact integer entries.

    Row n stores entries (n, 0)..(n, n); entries above the diagonal are
    implicit zeros. Instances are immutable and hashable.
    """

    rows: Tuple[Row, ...]

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise IndexRangeError(
                    f"row {n} has {len(row)} entries, expected {n + 1}"
                )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "Triangle":
        """Build a triangle from any iterable of rows."""
        return cls(tuple(tuple(int(value) for value in row) for row in rows))

    @property
    def order(self) -> int:
        """Number of stored rows (N + 1)."""
        return len(self.rows)

    @property
    def last(self) -> int:
        """Index N of the last stored row."""
        return len(self.rows) - 1

    def entry(self, n: int, m: int) -> int:
        """Get entry (n, m); zero above the diagonal."""
        if not 0 <= n < len(self.rows):
            raise IndexRangeError(f"row {n} outside 0..{self.last}")
        if m < 0:
            raise IndexRangeError(f"column {m} is negative")
        if m > n:
            return 0
        return self.rows[n][m]

    def row(self, n: int) -> Row:
        """Get row n."""
        if not 0 <= n < len(self.rows):
            raise IndexRangeError(f"row {n} outside 0..{self.last}")
        return self.rows[n]

    def diagonal(self) -> List[int]:
        """Get the diagonal entries."""
        return [row[-1] for row in self.rows]

    def column(self, m: int) -> List[int]:
        """Get column m from row m downwards."""
        return [row[m] for row in self.rows[m:]]

    def row_sums(self) -> List[int]:
        """Get the sum of every row."""
        return [sum(row) for row in self.rows]

    def linearize(self, skip_column0: bool = False) -> Iterator[int]:
        """Read the triangle by rows, optionally dropping column 0."""
        start = 1 if skip_column0 else 0
        for row in self.rows:
            yield from row[start:]

    def __iter__(self) -> Iterator[Row]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


def entry(triangle: Triangle, n: int, m: int) -> int:
    """Get entry (n, m) of a triangle."""
    return triangle.entry(n, m)


def identity_triangle(last: int) -> Triangle:
    """Identity matrix with rows 0..last."""
    if last < 0:
        raise IndexRangeError(f"order {last} is negative")
    return Triangle(tuple(
        tuple(1 if m == n else 0 for m in range(n + 1))
        for n in range(last + 1)
    ))


def sign_twist(triangle: Triangle) -> Triangle:
    """Multiply entry (n, m) by (-1)^(n-m)."""
    return Triangle(tuple(
        tuple(sign(n, m) * value for m, value in enumerate(row))
        for n, row in enumerate(triangle.rows)
    ))


def truncate(triangle: Triangle, last: int) -> Triangle:
    """Keep rows 0..last."""
    if not 0 <= last < triangle.order:
        raise IndexRangeError(
            f"cannot truncate order {triangle.order} to rows 0..{last}"
        )
    return Triangle(triangle.rows[:last + 1])

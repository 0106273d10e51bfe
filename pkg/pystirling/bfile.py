"""OEIS b-file parsing and comparison against triangles read by rows."""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .errors import BFileError
from .triangle import Triangle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BFile:
    """(index, value) pairs with strictly increasing indices."""
    terms: Tuple[Tuple[int, int], ...]

    @property
    def indices(self) -> List[int]:
        return [index for index, _ in self.terms]

    @property
    def values(self) -> List[int]:
        return [value for _, value in self.terms]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class Mismatch:
    """First b-file term that disagrees with the computed term."""
    index: int
    expected: int
    actual: int


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing a b-file against computed terms."""
    compared: int
    mismatch: Optional[Mismatch] = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def parse_bfile(text: str) -> BFile:
    """Parse lines of the form "index value"; '#' lines and blanks are skipped."""
    terms = []
    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"expected 'index value', got {line!r}", line_number)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"non-integer term {line!r}", line_number) from None
        if terms and index <= terms[-1][0]:
            raise BFileError(
                f"index {index} does not follow {terms[-1][0]}", line_number
            )
        terms.append((index, value))
    return BFile(tuple(terms))


def read_bfile(path: str) -> BFile:
    """Read and parse a b-file; OSError propagates to the caller."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise BFileError(f"not UTF-8 text ({e.reason} at byte {e.start})") from e
    return parse_bfile(text)


def rows_needed(count: int, skip_column0: bool = False) -> int:
    """Smallest N such that rows 0..N read by rows give at least count terms."""
    last = 0
    while True:
        # rows 0..last hold (last+1)(last+2)/2 entries, last+1 of them in column 0
        total = (last + 1) * (last + 2) // 2
        if skip_column0:
            total -= last + 1
        if total >= count:
            return last
        last += 1


def triangle_terms(
    build: Callable[[int], Triangle], count: int, skip_column0: bool = False
) -> List[int]:
    """First count terms of a triangle read by rows."""
    if count <= 0:
        return []
    triangle = build(rows_needed(count, skip_column0))
    return list(triangle.linearize(skip_column0))[:count]


def compare(bfile: BFile, terms: List[int], offset: int = 0) -> Comparison:
    """Compare b-file index offset + p against terms[p] for every overlapping p."""
    compared = 0
    for index, value in bfile.terms:
        position = index - offset
        if position < 0 or position >= len(terms):
            continue
        compared += 1
        if terms[position] != value:
            return Comparison(compared, Mismatch(index, value, terms[position]))
    logger.info("compared %d b-file terms", compared)
    return Comparison(compared)


def span(bfile: BFile, offset: int = 0) -> int:
    """Number of computed terms needed to cover the b-file."""
    if not bfile.terms:
        return 0
    return max(0, bfile.terms[-1][0] - offset + 1)

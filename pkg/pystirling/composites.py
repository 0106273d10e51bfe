"""Composite triangles A.B of two base triangles.

Twelve products are registered. Each can be built three ways: as a
matrix product, by its Pascal-like recurrence, and (for five of them) from
a closed form. The registry also records OEIS ids, row-sum targets,
absorption identities and inverse partners.
"""

import logging
from dataclasses import dataclass
from enum import Enum, auto
from math import comb
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from .algebra import multiply
from .base import SequenceKind, TriangleKind, base_triangle, lah_closed, sequence
from .errors import IndexRangeError, UnsupportedPairError
from .triangle import Triangle
from .utils import exact_div, falling_factorial

logger = logging.getLogger(__name__)

C = TriangleKind.BINOMIAL
S1 = TriangleKind.STIRLING1
S2 = TriangleKind.STIRLING2
L = TriangleKind.LAH


class PairKind(Enum):
    """Registered products (left factor, right factor)."""
    BINOMIAL_BINOMIAL = (C, C)
    BINOMIAL_STIRLING1 = (C, S1)
    BINOMIAL_STIRLING2 = (C, S2)
    STIRLING1_BINOMIAL = (S1, C)
    STIRLING1_STIRLING1 = (S1, S1)
    STIRLING1_STIRLING2 = (S1, S2)
    STIRLING2_BINOMIAL = (S2, C)
    STIRLING2_STIRLING1 = (S2, S1)
    STIRLING2_STIRLING2 = (S2, S2)
    BINOMIAL_LAH = (C, L)
    LAH_BINOMIAL = (L, C)
    LAH_LAH = (L, L)

    @property
    def left(self) -> TriangleKind:
        return self.value[0]

    @property
    def right(self) -> TriangleKind:
        return self.value[1]

    @property
    def label(self) -> str:
        """Short form such as "(C,S2)"."""
        return f"({self.left.symbol},{self.right.symbol})"

    @classmethod
    def lookup(cls, a: TriangleKind, b: TriangleKind) -> Optional["PairKind"]:
        """Registered pair for two kinds, or None."""
        try:
            return cls((a, b))
        except ValueError:
            return None


AnyPair = Union[PairKind, Tuple[TriangleKind, TriangleKind]]


class RecurrenceFamily(Enum):
    """Shape of the Pascal-like recurrence a composite satisfies."""
    TWO_TERM = auto()
    MULTI_TERM_CS1 = auto()
    MULTI_TERM_S2C = auto()
    CONVOLUTION = auto()


class Column0(Enum):
    """Boundary values T(n, 0)."""
    ONE = auto()
    DELTA = auto()
    POWER2 = auto()
    FACTORIAL = auto()
    BELL = auto()
    LAH_TOTAL = auto()


class LeftCoefficient(Enum):
    """Coefficient of T(n-1, m-1) in a two-term recurrence."""
    ONE = auto()
    N_OVER_M = auto()


class RightCoefficient(Enum):
    """Coefficient of T(n-1, m) in a two-term recurrence."""
    TWO = auto()
    M_PLUS_ONE = auto()
    N = auto()
    TWO_N = auto()
    N_PLUS_M_MINUS_ONE = auto()

    def at(self, n: int, m: int) -> int:
        if self is RightCoefficient.TWO:
            return 2
        if self is RightCoefficient.M_PLUS_ONE:
            return m + 1
        if self is RightCoefficient.N:
            return n
        if self is RightCoefficient.TWO_N:
            return 2 * n
        return n + m - 1


class Weight(Enum):
    """Block weights w_k of the convolution recurrences."""
    BELL = auto()            # B_k
    CYCLE_SUM = auto()       # sum_i [k,i] (i-1)!
    PARTITION_SUM = auto()   # sum_i {k,i} (i-1)!


@dataclass(frozen=True)
class PairInfo:
    """Registry metadata for one composite."""
    oeis: str
    family: RecurrenceFamily
    column0: Column0
    left: Optional[LeftCoefficient] = None
    right: Optional[RightCoefficient] = None
    weight: Optional[Weight] = None
    has_closed_form: bool = False
    row_sum: Optional[SequenceKind] = None
    row_sum_shift: int = 0


REGISTRY: Dict[PairKind, PairInfo] = {
    PairKind.BINOMIAL_BINOMIAL: PairInfo(
        "A038207", RecurrenceFamily.TWO_TERM, Column0.POWER2,
        LeftCoefficient.ONE, RightCoefficient.TWO,
        has_closed_form=True, row_sum=SequenceKind.POWER3,
    ),
    PairKind.BINOMIAL_STIRLING1: PairInfo(
        "A094816", RecurrenceFamily.MULTI_TERM_CS1, Column0.ONE,
        row_sum=SequenceKind.TOTAL_LISTS,
    ),
    PairKind.BINOMIAL_STIRLING2: PairInfo(
        "A008277", RecurrenceFamily.TWO_TERM, Column0.ONE,
        LeftCoefficient.ONE, RightCoefficient.M_PLUS_ONE,
        has_closed_form=True, row_sum=SequenceKind.BELL, row_sum_shift=1,
    ),
    PairKind.STIRLING1_BINOMIAL: PairInfo(
        "A130534", RecurrenceFamily.TWO_TERM, Column0.FACTORIAL,
        LeftCoefficient.ONE, RightCoefficient.N,
        has_closed_form=True, row_sum=SequenceKind.FACTORIAL, row_sum_shift=1,
    ),
    PairKind.STIRLING1_STIRLING1: PairInfo(
        "A325872", RecurrenceFamily.CONVOLUTION, Column0.DELTA,
        weight=Weight.CYCLE_SUM, row_sum=SequenceKind.ORDERED_CYCLE_FACT,
    ),
    PairKind.STIRLING1_STIRLING2: PairInfo(
        "A271703", RecurrenceFamily.TWO_TERM, Column0.DELTA,
        LeftCoefficient.ONE, RightCoefficient.N_PLUS_M_MINUS_ONE,
        has_closed_form=True, row_sum=SequenceKind.LAH_TOTAL,
    ),
    PairKind.STIRLING2_BINOMIAL: PairInfo(
        "A049020", RecurrenceFamily.MULTI_TERM_S2C, Column0.BELL,
        row_sum=SequenceKind.COLORED_PARTITIONS,
    ),
    PairKind.STIRLING2_STIRLING1: PairInfo(
        "A129062", RecurrenceFamily.CONVOLUTION, Column0.DELTA,
        weight=Weight.PARTITION_SUM, row_sum=SequenceKind.FUBINI,
    ),
    PairKind.STIRLING2_STIRLING2: PairInfo(
        "A130191", RecurrenceFamily.CONVOLUTION, Column0.DELTA,
        weight=Weight.BELL, row_sum=SequenceKind.PARTITION_PAIRS,
    ),
    PairKind.BINOMIAL_LAH: PairInfo(
        "A271705", RecurrenceFamily.TWO_TERM, Column0.ONE,
        LeftCoefficient.N_OVER_M, RightCoefficient.N,
    ),
    PairKind.LAH_BINOMIAL: PairInfo(
        "A059110", RecurrenceFamily.TWO_TERM, Column0.LAH_TOTAL,
        LeftCoefficient.N_OVER_M, RightCoefficient.N,
    ),
    PairKind.LAH_LAH: PairInfo(
        "", RecurrenceFamily.TWO_TERM, Column0.DELTA,
        LeftCoefficient.N_OVER_M, RightCoefficient.TWO_N,
        has_closed_form=True,
    ),
}


class InversePair(NamedTuple):
    """inverse(composite(pair)) == sign_twist(composite(partner)) if twisted."""
    partner: PairKind
    twisted: bool


_INVERSE_PARTNERS: Dict[PairKind, PairKind] = {
    PairKind.BINOMIAL_STIRLING2: PairKind.STIRLING1_BINOMIAL,
    PairKind.STIRLING1_BINOMIAL: PairKind.BINOMIAL_STIRLING2,
    PairKind.STIRLING2_BINOMIAL: PairKind.BINOMIAL_STIRLING1,
    PairKind.BINOMIAL_STIRLING1: PairKind.STIRLING2_BINOMIAL,
    PairKind.STIRLING2_STIRLING2: PairKind.STIRLING1_STIRLING1,
    PairKind.STIRLING1_STIRLING1: PairKind.STIRLING2_STIRLING2,
    PairKind.STIRLING2_STIRLING1: PairKind.STIRLING2_STIRLING1,
    PairKind.STIRLING1_STIRLING2: PairKind.STIRLING1_STIRLING2,
}

ABSORPTION_PAIRS = (PairKind.BINOMIAL_BINOMIAL, PairKind.LAH_LAH)


def _kinds(pair: AnyPair) -> Tuple[TriangleKind, TriangleKind]:
    if isinstance(pair, PairKind):
        return pair.value
    a, b = pair
    return TriangleKind(a), TriangleKind(b)


def _registered(pair: AnyPair) -> PairKind:
    if isinstance(pair, PairKind):
        return pair
    found = PairKind.lookup(*_kinds(pair))
    if found is None:
        a, b = _kinds(pair)
        raise UnsupportedPairError(
            f"({a.symbol},{b.symbol}) is not a registered composite"
        )
    return found


def composite_product(pair: AnyPair, last: int) -> Triangle:
    """Rows 0..last of A.B; any two base kinds are accepted."""
    a, b = _kinds(pair)
    return multiply(base_triangle(a, last), base_triangle(b, last))


composite = composite_product


def composite_column0(pair: AnyPair, last: int) -> List[int]:
    """Boundary values T(n, 0) for n = 0..last."""
    info = REGISTRY[_registered(pair)]
    if info.column0 is Column0.ONE:
        return [1] * (last + 1)
    if info.column0 is Column0.DELTA:
        return [1] + [0] * last
    if info.column0 is Column0.POWER2:
        return sequence(SequenceKind.POWER2, last)
    if info.column0 is Column0.FACTORIAL:
        return sequence(SequenceKind.FACTORIAL, last)
    if info.column0 is Column0.BELL:
        return sequence(SequenceKind.BELL, last)
    return sequence(SequenceKind.LAH_TOTAL, last)


def _weights(weight: Weight, last: int) -> List[int]:
    """w_k for k = 0..last; w_0 is unused."""
    if weight is Weight.BELL:
        return sequence(SequenceKind.BELL, last)
    kind = S1 if weight is Weight.CYCLE_SUM else S2
    triangle = base_triangle(kind, last)
    weights = [0]
    cycle_orders = [1] * (last + 1)  # (i-1)! for i >= 1
    for i in range(2, last + 1):
        cycle_orders[i] = cycle_orders[i - 1] * (i - 1)
    for k in range(1, last + 1):
        row = triangle.row(k)
        weights.append(sum(row[i] * cycle_orders[i] for i in range(1, k + 1)))
    return weights


def composite_recurrence(pair: AnyPair, last: int) -> Triangle:
    """Rows 0..last of a registered composite, built row by row.

    Entries (n, 0) and (n, n) come from the boundary values only; the
    recurrence body fills 0 < m < n.
    """
    pair = _registered(pair)
    if last < 0:
        raise IndexRangeError(f"order {last} is negative")
    info = REGISTRY[pair]
    column0 = composite_column0(pair, last)
    binomial = base_triangle(C, last).rows
    weights = _weights(info.weight, last) if info.weight else []

    rows: List[Tuple[int, ...]] = []
    for n in range(last + 1):
        row = [0] * (n + 1)
        row[0] = column0[n]
        row[n] = 1
        for m in range(1, n):
            if info.family is RecurrenceFamily.TWO_TERM:
                left = rows[n - 1][m - 1]
                if info.left is LeftCoefficient.N_OVER_M:
                    left = exact_div(n * left, m)
                value = left + info.right.at(n, m) * rows[n - 1][m]
            elif info.family is RecurrenceFamily.MULTI_TERM_CS1:
                # x joins a cycle with k others, or x is not in the subset
                value = rows[n - 1][m]
                for k in range(n - m + 1):
                    value += falling_factorial(n - 1, k) * rows[n - 1 - k][m - 1]
            elif info.family is RecurrenceFamily.MULTI_TERM_S2C:
                # x alone in a red block, with others in a red block,
                # or in a blue block with k others
                value = rows[n - 1][m - 1] + m * rows[n - 1][m]
                for k in range(n - m):
                    value += binomial[n - 1][k] * rows[n - 1 - k][m]
            else:
                value = 0
                for k in range(1, n - m + 2):
                    value += binomial[n - 1][k - 1] * weights[k] * rows[n - k][m - 1]
            row[m] = value
        rows.append(tuple(row))
    logger.debug("built %s by recurrence, rows 0..%d", pair.label, last)
    return Triangle(tuple(rows))


CLOSED_FORM_PAIRS = tuple(pair for pair, info in REGISTRY.items() if info.has_closed_form)


def closed_form(pair: AnyPair, n: int, m: int) -> int:
    """Entry (n, m) of a composite that has a closed form."""
    pair = _registered(pair)
    if not REGISTRY[pair].has_closed_form:
        raise UnsupportedPairError(f"{pair.label} has no closed form")
    if m < 0 or m > n:
        raise IndexRangeError(f"closed form needs 0 <= m <= n, got ({n},{m})")
    if pair is PairKind.BINOMIAL_STIRLING2:
        return base_triangle(S2, n + 1).entry(n + 1, m + 1)
    if pair is PairKind.STIRLING1_BINOMIAL:
        return base_triangle(S1, n + 1).entry(n + 1, m + 1)
    if pair is PairKind.STIRLING1_STIRLING2:
        return lah_closed(n, m)
    if pair is PairKind.BINOMIAL_BINOMIAL:
        return 2 ** (n - m) * comb(n, m)
    return 2 ** (n - m) * lah_closed(n, m)


def absorption_residual(
    pair: Union[PairKind, TriangleKind], n: int, m: int
) -> int:
    """Multiplied-out absorption identity; always 0.

    (C,C):  m |n,m| - n |n-1,m-1|                 for 1 <= m <= n
    (L,L):  2m(m-1) |n,m| - (n-m+1) |n,m-1|       for 2 <= m <= n
    LAH:    m(m-1) L(n,m) - (n-m+1) L(n,m-1)      for 2 <= m <= n
    """
    if pair is PairKind.BINOMIAL_BINOMIAL:
        if not 1 <= m <= n:
            raise IndexRangeError(f"(C,C) absorption needs 1 <= m <= n, got ({n},{m})")
        table = composite_product(pair, n)
        return m * table.entry(n, m) - n * table.entry(n - 1, m - 1)
    if pair is PairKind.LAH_LAH or pair is TriangleKind.LAH:
        if not 2 <= m <= n:
            raise IndexRangeError(f"Lah absorption needs 2 <= m <= n, got ({n},{m})")
        if pair is TriangleKind.LAH:
            table = base_triangle(L, n)
            factor = 1
        else:
            table = composite_product(pair, n)
            factor = 2
        return (factor * m * (m - 1) * table.entry(n, m)
                - (n - m + 1) * table.entry(n, m - 1))
    raise UnsupportedPairError(f"no absorption identity for {pair}")


ROW_SUM_PAIRS = tuple(pair for pair, info in REGISTRY.items() if info.row_sum)


def row_sum(pair: AnyPair, n: int) -> int:
    """Sum of row n of a composite with a known row-sum sequence."""
    pair = _registered(pair)
    if REGISTRY[pair].row_sum is None:
        raise UnsupportedPairError(f"{pair.label} has no row-sum identity")
    if n < 0:
        raise IndexRangeError(f"row {n} is negative")
    return sum(composite_product(pair, n).row(n))


def row_sum_target(pair: AnyPair, n: int) -> int:
    """The sequence term that row n of the composite must sum to."""
    pair = _registered(pair)
    info = REGISTRY[pair]
    if info.row_sum is None:
        raise UnsupportedPairError(f"{pair.label} has no row-sum identity")
    index = n + info.row_sum_shift
    return sequence(info.row_sum, index)[index]


INVERSE_PAIRS = tuple(_INVERSE_PARTNERS)


def inverse_pair(pair: AnyPair) -> InversePair:
    """Partner whose sign-twisted composite inverts this one."""
    pair = _registered(pair)
    try:
        return InversePair(_INVERSE_PARTNERS[pair], True)
    except KeyError:
        raise UnsupportedPairError(f"no inverse relation for {pair.label}") from None

"""Brute-force counters for the combinatorial structures behind each triangle.

Every counter generates its structures over the ground set {0..n-1} and
counts them one by one. Nothing here calls the triangle builders, so the
counts are an independent check on them.
"""

import logging
from collections import Counter
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple, Union

from .base import TriangleKind
from .composites import PairKind
from .config import default_config
from .errors import IndexRangeError, OracleLimitError

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]
Partition = Tuple[Block, ...]


class StructureKind(Enum):
    """Enumerable structures and the triangle each one counts."""
    SET_PARTITIONS = "set-partitions"
    CYCLE_PERMUTATIONS = "cycle-permutations"
    LIST_PARTITIONS = "list-partitions"
    NESTED_SUBSETS = "nested-subsets"
    REFINEMENT_PAIRS = "refinement-pairs"
    LIST_REFINEMENT_PAIRS = "list-refinement-pairs"
    COLORED_PARTITIONS = "colored-partitions"
    SUBSET_CYCLE_PERMUTATIONS = "subset-cycle-permutations"
    PARTITION_PERMUTATION_PAIRS = "partition-permutation-pairs"
    PERMUTATION_PAIRS = "permutation-pairs"

    @property
    def target(self) -> Union[TriangleKind, PairKind]:
        """The triangle whose entry (n, m) this structure counts."""
        return STRUCTURE_TARGETS[self]

    @property
    def is_pair(self) -> bool:
        """Pairs of structures get the smaller enumeration bound."""
        return self not in _SINGLE_STRUCTURES


STRUCTURE_TARGETS: Dict[StructureKind, Union[TriangleKind, PairKind]] = {
    StructureKind.SET_PARTITIONS: TriangleKind.STIRLING2,
    StructureKind.CYCLE_PERMUTATIONS: TriangleKind.STIRLING1,
    StructureKind.LIST_PARTITIONS: TriangleKind.LAH,
    StructureKind.NESTED_SUBSETS: PairKind.BINOMIAL_BINOMIAL,
    StructureKind.REFINEMENT_PAIRS: PairKind.STIRLING2_STIRLING2,
    StructureKind.LIST_REFINEMENT_PAIRS: PairKind.LAH_LAH,
    StructureKind.COLORED_PARTITIONS: PairKind.STIRLING2_BINOMIAL,
    StructureKind.SUBSET_CYCLE_PERMUTATIONS: PairKind.BINOMIAL_STIRLING1,
    StructureKind.PARTITION_PERMUTATION_PAIRS: PairKind.STIRLING2_STIRLING1,
    StructureKind.PERMUTATION_PAIRS: PairKind.STIRLING1_STIRLING1,
}

_SINGLE_STRUCTURES = frozenset({
    StructureKind.SET_PARTITIONS,
    StructureKind.CYCLE_PERMUTATIONS,
    StructureKind.LIST_PARTITIONS,
})


def set_partitions(elements: Sequence[int]) -> Iterator[Partition]:
    """Yield every partition of elements into non-empty blocks, once each.

    The first element either joins a block of a partition of the rest or
    forms a block of its own.
    """
    if not elements:
        yield ()
        return
    first = elements[0]
    for partial in set_partitions(elements[1:]):
        for i, block in enumerate(partial):
            yield partial[:i] + ((first,) + block,) + partial[i + 1:]
        yield ((first,),) + partial


def list_partitions(elements: Sequence[int]) -> Iterator[Partition]:
    """Yield every partition of elements into lists (ordered blocks)."""
    for partition in set_partitions(elements):
        yield from product(*(permutations(block) for block in partition))


def permutation_cycles(perm: Sequence[int]) -> int:
    """Count the cycles of a permutation given in one-line form on 0..n-1."""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return cycles


@lru_cache(maxsize=None)
def _all_set_partitions(n: int) -> Tuple[Partition, ...]:
    return tuple(set_partitions(tuple(range(n))))


@lru_cache(maxsize=None)
def _cycle_histogram(degree: int) -> Counter:
    """How many permutations of the given degree have each cycle count."""
    return Counter(permutation_cycles(perm) for perm in permutations(range(degree)))


def _refines(fine: Partition, coarse: Partition) -> bool:
    """Every block of fine lies inside one block of coarse."""
    owner = {}
    for index, block in enumerate(coarse):
        for element in block:
            owner[element] = index
    return all(len({owner[element] for element in block}) == 1 for block in fine)


def _refines_lists(fine: Partition, coarse: Partition) -> bool:
    """Every list of fine is a contiguous segment of one list of coarse."""
    position = {}
    for index, lst in enumerate(coarse):
        for offset, element in enumerate(lst):
            position[element] = (index, offset)
    for lst in fine:
        index, offset = position[lst[0]]
        for step, element in enumerate(lst[1:], 1):
            if position[element] != (index, offset + step):
                return False
    return True


RefinesLists = Callable[[Partition, Partition], bool]


@lru_cache(maxsize=None)
def _single_list_refinements(length: int, refines: RefinesLists) -> int:
    """List partitions of {0..length-1} that refine the one list (0, 1, ..., length-1).

    Every candidate list partition is generated and tested, so a different
    notion of sublist gives a different count.
    """
    ground = tuple(range(length))
    return sum(1 for fine in list_partitions(ground) if refines(fine, (ground,)))


def _count_set_partitions(n: int, m: int) -> int:
    return sum(1 for p in _all_set_partitions(n) if len(p) == m)


def _count_cycle_permutations(n: int, m: int) -> int:
    return sum(1 for perm in permutations(range(n)) if permutation_cycles(perm) == m)


def _count_list_partitions(n: int, m: int) -> int:
    return sum(
        1
        for partition in _all_set_partitions(n) if len(partition) == m
        for _ in product(*(permutations(block) for block in partition))
    )


def _count_nested_subsets(n: int, m: int) -> int:
    count = 0
    for size in range(m, n + 1):
        for outer in combinations(range(n), size):
            count += sum(1 for _ in combinations(outer, m))
    return count


def _count_refinement_pairs(n: int, m: int) -> int:
    partitions = _all_set_partitions(n)
    return sum(
        1
        for coarse in partitions if len(coarse) == m
        for fine in partitions if _refines(fine, coarse)
    )


def _count_list_refinement_pairs(
    n: int, m: int, refines: RefinesLists = _refines_lists
) -> int:
    """Pairs (fine, coarse) of list partitions with coarse made of m lists.

    A fine list never crosses two coarse lists, so the fine partition splits
    each coarse list on its own. Renaming a list's elements by their
    positions leaves its number of refinements unchanged.
    """
    count = 0
    for partition in _all_set_partitions(n):
        if len(partition) != m:
            continue
        for coarse in product(*(permutations(block) for block in partition)):
            ways = 1
            for lst in coarse:
                ways *= _single_list_refinements(len(lst), refines)
            count += ways
    return count


def _count_colored_partitions(n: int, m: int) -> int:
    return sum(
        1
        for partition in _all_set_partitions(n)
        for _ in combinations(partition, m)
    )


def _count_subset_cycle_permutations(n: int, m: int) -> int:
    count = 0
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            count += sum(
                1 for perm in permutations(range(len(subset)))
                if permutation_cycles(perm) == m
            )
    return count


def _count_partition_permutation_pairs(n: int, m: int) -> int:
    return sum(_cycle_histogram(len(p))[m] for p in _all_set_partitions(n))


def _count_permutation_pairs(n: int, m: int) -> int:
    return sum(
        _cycle_histogram(permutation_cycles(perm))[m]
        for perm in permutations(range(n))
    )


_COUNTERS = {
    StructureKind.SET_PARTITIONS: _count_set_partitions,
    StructureKind.CYCLE_PERMUTATIONS: _count_cycle_permutations,
    StructureKind.LIST_PARTITIONS: _count_list_partitions,
    StructureKind.NESTED_SUBSETS: _count_nested_subsets,
    StructureKind.REFINEMENT_PAIRS: _count_refinement_pairs,
    StructureKind.LIST_REFINEMENT_PAIRS: _count_list_refinement_pairs,
    StructureKind.COLORED_PARTITIONS: _count_colored_partitions,
    StructureKind.SUBSET_CYCLE_PERMUTATIONS: _count_subset_cycle_permutations,
    StructureKind.PARTITION_PERMUTATION_PAIRS: _count_partition_permutation_pairs,
    StructureKind.PERMUTATION_PAIRS: _count_permutation_pairs,
}


def enumeration_limit(kind: StructureKind) -> int:
    """Default bound on n for a structure kind."""
    if kind.is_pair:
        return default_config.oracle_pair_max_n
    return default_config.oracle_max_n


def oracle_count(
    kind: StructureKind, n: int, m: int, limit: Optional[int] = None
) -> int:
    """Count structures of the given kind over {0..n-1} with parameter m."""
    if limit is None:
        limit = enumeration_limit(kind)
    if not 0 <= m <= n:
        raise IndexRangeError(f"{kind.value} needs 0 <= m <= n, got ({n},{m})")
    if n > limit:
        raise OracleLimitError(kind.value, n, limit)
    count = _COUNTERS[kind](n, m)
    logger.debug("%s(%d, %d) = %d", kind.value, n, m, count)
    return count


def wrook_placements(n: int, k: int) -> int:
    """Non-attacking placements of k wrooks on the staircase board of size n.

    Row i of the board has i cells (i = 0..n-1) and a wrook only attacks
    along its row, so a placement picks k distinct rows and one cell in each.
    """
    if k < 0 or n < 0:
        return 0
    return sum(
        1
        for rows in combinations(range(n), k)
        for _ in product(*(range(length) for length in rows))
    )

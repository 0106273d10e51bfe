import pytest

from pystirling.base import TriangleKind
from pystirling.composites import (
    ABSORPTION_PAIRS, CLOSED_FORM_PAIRS, INVERSE_PAIRS, REGISTRY, ROW_SUM_PAIRS,
    InversePair, PairKind, absorption_residual, closed_form, composite_column0,
    composite_product, composite_recurrence, inverse_pair, row_sum, row_sum_target,
)
from pystirling.algebra import is_identity, multiply
from pystirling.errors import IndexRangeError, UnsupportedPairError
from pystirling.triangle import sign_twist

C, S1, S2, L = (TriangleKind.BINOMIAL, TriangleKind.STIRLING1,
                TriangleKind.STIRLING2, TriangleKind.LAH)


@pytest.mark.parametrize("pair, last, row", [
    ((S2, S1), 3, (0, 6, 6, 1)),
    ((C, S2), 3, (1, 7, 6, 1)),
    ((C, C), 2, (4, 4, 1)),
    ((S1, S1), 3, (0, 7, 6, 1)),
])
def test_product_rows(pair, last, row):
    assert composite_product(pair, last).row(last) == row


def test_product_accepts_unregistered_kinds():
    assert composite_product((L, S2), 2).row(2) == (0, 3, 1)


def test_pair_lookup_and_label():
    assert PairKind.lookup(C, S2) is PairKind.BINOMIAL_STIRLING2
    assert PairKind.lookup(L, S2) is None
    assert PairKind.STIRLING2_STIRLING1.label == "(S2,S1)"
    assert len(REGISTRY) == len(PairKind) == 12


@pytest.mark.parametrize("pair, n, m, expected", [
    ((S1, C), 3, 1, 11),
    ((L, L), 3, 1, 24),
    ((C, L), 3, 1, 15),
    ((L, C), 2, 0, 3),
])
def test_recurrence_entries(pair, n, m, expected):
    assert composite_recurrence(pair, n).entry(n, m) == expected


@pytest.mark.parametrize("pair, row", [
    ((C, S1), (1, 8, 6, 1)),
    ((S2, C), (5, 10, 6, 1)),
    ((S2, S2), (0, 5, 6, 1)),
    ((S2, S1), (0, 6, 6, 1)),
])
def test_recurrence_rows(pair, row):
    assert composite_recurrence(pair, 3).row(3) == row


@pytest.mark.parametrize("pair", list(PairKind))
def test_recurrence_equals_product(pair):
    assert composite_recurrence(pair, 14) == composite_product(pair, 14)


def test_recurrence_rejects_unregistered_pair():
    with pytest.raises(UnsupportedPairError):
        composite_recurrence((L, S2), 3)


def test_column0_boundaries():
    assert composite_column0(PairKind.STIRLING2_BINOMIAL, 4) == [1, 1, 2, 5, 15]
    assert composite_column0(PairKind.BINOMIAL_BINOMIAL, 3) == [1, 2, 4, 8]
    assert composite_column0(PairKind.LAH_LAH, 3) == [1, 0, 0, 0]
    assert composite_column0(PairKind.LAH_BINOMIAL, 3) == [1, 1, 3, 13]


@pytest.mark.parametrize("pair, n, m, expected", [
    ((C, S2), 3, 1, 7),
    ((C, C), 4, 1, 32),
    ((S1, S2), 4, 2, 36),
    ((S1, C), 3, 1, 11),
    ((L, L), 5, 5, 1),
])
def test_closed_form_values(pair, n, m, expected):
    assert closed_form(pair, n, m) == expected


@pytest.mark.parametrize("pair", CLOSED_FORM_PAIRS)
def test_closed_forms_match_products(pair):
    product = composite_product(pair, 12)
    assert all(
        closed_form(pair, n, m) == product.entry(n, m)
        for n in range(13) for m in range(n + 1)
    )


def test_closed_form_errors():
    with pytest.raises(UnsupportedPairError):
        closed_form((S2, S2), 3, 1)
    with pytest.raises(IndexRangeError):
        closed_form((C, C), 2, 3)


@pytest.mark.parametrize("pair, n, m", [
    (PairKind.BINOMIAL_BINOMIAL, 4, 2),
    (PairKind.LAH_LAH, 3, 2),
    (TriangleKind.LAH, 4, 2),
])
def test_absorption_examples(pair, n, m):
    assert absorption_residual(pair, n, m) == 0


@pytest.mark.parametrize("pair", ABSORPTION_PAIRS + (TriangleKind.LAH,))
def test_absorption_holds_on_all_rows(pair):
    low = 1 if pair is PairKind.BINOMIAL_BINOMIAL else 2
    assert all(
        absorption_residual(pair, n, m) == 0
        for n in range(low, 16) for m in range(low, n + 1)
    )


def test_absorption_errors():
    with pytest.raises(IndexRangeError):
        absorption_residual(PairKind.BINOMIAL_BINOMIAL, 3, 0)
    with pytest.raises(IndexRangeError):
        absorption_residual(PairKind.LAH_LAH, 3, 1)
    with pytest.raises(UnsupportedPairError):
        absorption_residual(PairKind.STIRLING2_STIRLING2, 3, 2)


@pytest.mark.parametrize("pair, n, expected", [
    ((C, S2), 3, 15),
    ((S2, S1), 3, 13),
    ((C, C), 3, 27),
    ((S1, S1), 3, 14),
    ((S1, C), 3, 24),
    ((S1, S2), 4, 73),
    ((S2, C), 3, 22),
    ((C, S1), 3, 16),
    ((S2, S2), 4, 60),
])
def test_row_sums(pair, n, expected):
    assert row_sum(pair, n) == expected
    assert row_sum_target(pair, n) == expected


@pytest.mark.parametrize("pair", ROW_SUM_PAIRS)
def test_row_sums_match_targets(pair):
    assert all(row_sum(pair, n) == row_sum_target(pair, n) for n in range(12))


def test_row_sum_unsupported():
    with pytest.raises(UnsupportedPairError):
        row_sum((L, C), 3)
    with pytest.raises(UnsupportedPairError):
        row_sum_target((C, L), 3)


def test_inverse_pairs():
    assert inverse_pair((C, S2)) == InversePair(PairKind.STIRLING1_BINOMIAL, True)
    assert inverse_pair((S2, S1)).partner is PairKind.STIRLING2_STIRLING1
    assert inverse_pair((S1, S2)).partner is PairKind.STIRLING1_STIRLING2
    with pytest.raises(UnsupportedPairError):
        inverse_pair((C, C))


@pytest.mark.parametrize("pair", INVERSE_PAIRS)
def test_inverse_relations(pair):
    partner = inverse_pair(pair).partner
    product = multiply(composite_product(pair, 10),
                       sign_twist(composite_product(partner, 10)))
    assert is_identity(product)

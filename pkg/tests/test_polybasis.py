import pytest
from hypothesis import given, strategies as st

from pystirling.base import TriangleKind, base_triangle
from pystirling.composites import PairKind, composite_product
from pystirling.errors import ConsistencyError, IndexRangeError, UnsupportedPairError
from pystirling.polybasis import (
    BASIS_CHANGES, BasisFamily, Polynomial, change_matrix, expected_change_matrix,
    family_member, from_falling_basis, poly_add, poly_mul, to_falling_basis,
)
from pystirling.triangle import sign_twist

coefficients = st.lists(st.integers(min_value=-50, max_value=50), max_size=10)


def test_polynomial_arithmetic():
    assert poly_mul(Polynomial([0, 1]), Polynomial([1, 1])) == Polynomial([0, 1, 1])
    p = Polynomial([3, 0, 2])
    assert poly_add(p, Polynomial()) == p
    assert poly_mul(p, Polynomial([1])) == p
    assert 2 * p == Polynomial([6, 0, 4])
    assert Polynomial.linear(1) ** 3 == Polynomial([1, 3, 3, 1])
    assert p(2) == 11


def test_trailing_zeros_are_stripped():
    assert Polynomial([1, 2, 0, 0]).terms == (1, 2)
    assert Polynomial([0, 0]).degree == -1
    assert Polynomial([1, 2]).coefficients(4) == [1, 2, 0, 0]
    with pytest.raises(ConsistencyError):
        Polynomial([1, 2, 3]).coefficients(2)


@given(coefficients, st.integers(min_value=-5, max_value=5))
def test_synthetic_division(terms, root):
    p = Polynomial(terms)
    quotient, remainder = p.divmod_linear(root)
    assert quotient * Polynomial.linear(-root) + Polynomial.constant(remainder) == p
    assert remainder == p(root)


@pytest.mark.parametrize("family, n, terms", [
    (BasisFamily.RISING, 3, [0, 2, 3, 1]),
    (BasisFamily.FALLING, 3, [0, 2, -3, 1]),
    (BasisFamily.SHIFT2, 2, [4, 4, 1]),
    (BasisFamily.BELL, 3, [0, 1, 3, 1]),
    (BasisFamily.POWER, 0, [1]),
])
def test_family_members(family, n, terms):
    assert family_member(family, n) == Polynomial(terms)


@pytest.mark.parametrize("terms, expected", [([0, 0, 1], [0, 1, 1]), ([1], [1]), ([], [])])
def test_to_falling_basis(terms, expected):
    assert to_falling_basis(Polynomial(terms)) == expected


@pytest.mark.parametrize("n", range(8))
def test_falling_member_has_unit_coefficient(n):
    assert to_falling_basis(family_member(BasisFamily.FALLING, n)) == [0] * n + [1]


@given(coefficients)
def test_falling_basis_round_trip(terms):
    p = Polynomial(terms)
    assert from_falling_basis(to_falling_basis(p)) == p


def test_change_matrix_examples():
    assert change_matrix(BasisFamily.SHIFT1, BasisFamily.FALLING, 2).row(2) == (1, 3, 1)
    assert change_matrix(BasisFamily.RISING, BasisFamily.POWER, 3) == base_triangle(
        TriangleKind.STIRLING1, 3
    )
    assert change_matrix(BasisFamily.RISING, BasisFamily.FALLING, 8) == base_triangle(
        TriangleKind.LAH, 8
    )
    assert change_matrix(BasisFamily.FALLING, BasisFamily.POWER, 6) == sign_twist(
        base_triangle(TriangleKind.STIRLING1, 6)
    )


@pytest.mark.parametrize("family, target", list(BASIS_CHANGES))
def test_registered_changes(family, target):
    assert change_matrix(family, target, 10) == expected_change_matrix(family, target, 10)


def test_bell_family_gives_partition_pairs():
    assert change_matrix(BasisFamily.BELL, BasisFamily.FALLING, 6) == composite_product(
        PairKind.STIRLING2_STIRLING2, 6
    )


def test_unregistered_change():
    with pytest.raises(UnsupportedPairError):
        change_matrix(BasisFamily.SHIFT1, BasisFamily.POWER, 3)


def test_negative_family_index():
    with pytest.raises(IndexRangeError):
        family_member(BasisFamily.POWER, -1)

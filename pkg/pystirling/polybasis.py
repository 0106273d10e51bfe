"""Integer polynomials and the basis changes that reproduce the triangles."""

import logging
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Tuple, Union

from .base import TriangleKind, base_triangle
from .composites import PairKind, composite_product
from .errors import ConsistencyError, IndexRangeError, UnsupportedPairError
from .triangle import Triangle, sign_twist

logger = logging.getLogger(__name__)


class Polynomial:
    """Dense polynomial in the power basis; terms[i] is the coefficient of x^i.

    Trailing zeros are stripped on construction, so the zero polynomial has
    no terms and equal polynomials have equal term tuples.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[int] = ()):
        terms = [int(c) for c in terms]
        while terms and terms[-1] == 0:
            terms.pop()
        self.terms: Tuple[int, ...] = tuple(terms)

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls((value,))

    @classmethod
    def linear(cls, shift: int) -> "Polynomial":
        """x + shift."""
        return cls((shift, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.terms) - 1

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.terms):
            return self.terms[i]
        return 0

    def coefficients(self, length: int) -> List[int]:
        """Coefficients of x^0..x^(length-1), zero padded."""
        if self.degree >= length:
            raise ConsistencyError(f"degree {self.degree} does not fit {length} terms")
        return list(self.terms) + [0] * (length - len(self.terms))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"Polynomial({list(self.terms)!r})"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.terms), len(other.terms))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(c * other for c in self.terms)
        if not self.terms or not other.terms:
            return Polynomial()
        result = [0] * (len(self.terms) + len(other.terms) - 1)
        for i, a in enumerate(self.terms):
            for j, b in enumerate(other.terms):
                result[i + j] += a * b
        return Polynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.terms):
            value = value * x + c
        return value

    def divmod_linear(self, root: int) -> Tuple["Polynomial", int]:
        """Synthetic division by (x - root): quotient and remainder."""
        if not self.terms:
            return Polynomial(), 0
        quotient = [0] * (len(self.terms) - 1)
        carry = 0
        for i in range(len(self.terms) - 1, 0, -1):
            carry = carry * root + self.terms[i]
            quotient[i - 1] = carry
        remainder = carry * root + self.terms[0]
        return Polynomial(quotient), remainder


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


class BasisFamily(Enum):
    """Polynomial families whose n-th member has degree n."""
    POWER = "power"                  # x^n
    FALLING = "falling"              # x(x-1)...(x-n+1)
    RISING = "rising"                # x(x+1)...(x+n-1)
    SHIFT1 = "shift1"                # (1+x)^n
    SHIFT2 = "shift2"                # (2+x)^n
    BINOM_RISING = "binom-rising"    # sum_k C(n,k) x^(k rising)
    BELL = "bell"                    # B_n(x) = sum_k {n,k} x^k
    BELL_SHIFT1 = "bell-shift1"      # B_n(1+x)
    S2_RISING = "s2-rising"          # sum_k {n,k} x^(k rising)
    S1_RISING = "s1-rising"          # sum_k [n,k] x^(k rising)
    S1_SHIFT1 = "s1-shift1"          # sum_k [n,k] (1+x)^k


@lru_cache(maxsize=128)
def _product_basis(shift_sign: int, n: int) -> Polynomial:
    """x(x + s)(x + 2s)...(x + (n-1)s) for s = +1 or -1."""
    result = Polynomial.constant(1)
    for i in range(n):
        result = result * Polynomial.linear(shift_sign * i)
    return result


def _weighted(weights: Iterable[int], member) -> Polynomial:
    total = Polynomial()
    for k, weight in enumerate(weights):
        if weight:
            total = total + weight * member(k)
    return total


def family_member(family: BasisFamily, n: int) -> Polynomial:
    """The n-th member of a basis family in power-basis coefficients."""
    if n < 0:
        raise IndexRangeError(f"family index {n} is negative")
    if family is BasisFamily.POWER:
        return Polynomial([0] * n + [1])
    if family is BasisFamily.FALLING:
        return _product_basis(-1, n)
    if family is BasisFamily.RISING:
        return _product_basis(1, n)
    if family is BasisFamily.SHIFT1:
        return Polynomial.linear(1) ** n
    if family is BasisFamily.SHIFT2:
        return Polynomial.linear(2) ** n

    rising = lambda k: _product_basis(1, k)
    shift1 = lambda k: Polynomial.linear(1) ** k
    power = lambda k: Polynomial([0] * k + [1])
    stirling1 = base_triangle(TriangleKind.STIRLING1, n).row(n)
    stirling2 = base_triangle(TriangleKind.STIRLING2, n).row(n)
    if family is BasisFamily.BINOM_RISING:
        return _weighted((comb(n, k) for k in range(n + 1)), rising)
    if family is BasisFamily.BELL:
        return _weighted(stirling2, power)
    if family is BasisFamily.BELL_SHIFT1:
        return _weighted(stirling2, shift1)
    if family is BasisFamily.S2_RISING:
        return _weighted(stirling2, rising)
    if family is BasisFamily.S1_RISING:
        return _weighted(stirling1, rising)
    if family is BasisFamily.S1_SHIFT1:
        return _weighted(stirling1, shift1)
    raise ValueError(f"unknown basis family: {family}")


def to_falling_basis(p: Polynomial) -> List[int]:
    """Coefficients c_m with p = sum_m c_m x^(m falling).

    Dividing repeatedly by x, x-1, x-2, ... peels off the Newton form
    p = c_0 + x(c_1 + (x-1)(c_2 + ...)). Each divisor is monic, so every
    quotient stays integral.
    """
    coefficients = []
    remaining = p
    root = 0
    while remaining.terms:
        quotient, remainder = remaining.divmod_linear(root)
        coefficients.append(remainder)
        remaining = quotient
        root += 1
    return coefficients


def from_falling_basis(coefficients: Iterable[int]) -> Polynomial:
    """Expand sum_m c_m x^(m falling) into the power basis."""
    return _weighted(coefficients, lambda m: _product_basis(-1, m))


Target = Union[TriangleKind, PairKind, str]

# (family, target basis) -> what the change-of-basis matrix equals.
# "stirling1-signed" is sign_twist of the Stirling-1 triangle.
BASIS_CHANGES: Dict[Tuple[BasisFamily, BasisFamily], Target] = {
    (BasisFamily.POWER, BasisFamily.FALLING): TriangleKind.STIRLING2,
    (BasisFamily.RISING, BasisFamily.POWER): TriangleKind.STIRLING1,
    (BasisFamily.RISING, BasisFamily.FALLING): TriangleKind.LAH,
    (BasisFamily.SHIFT1, BasisFamily.FALLING): PairKind.BINOMIAL_STIRLING2,
    (BasisFamily.SHIFT2, BasisFamily.POWER): PairKind.BINOMIAL_BINOMIAL,
    (BasisFamily.BINOM_RISING, BasisFamily.POWER): PairKind.BINOMIAL_STIRLING1,
    (BasisFamily.BELL, BasisFamily.FALLING): PairKind.STIRLING2_STIRLING2,
    (BasisFamily.S2_RISING, BasisFamily.POWER): PairKind.STIRLING2_STIRLING1,
    (BasisFamily.S1_RISING, BasisFamily.POWER): PairKind.STIRLING1_STIRLING1,
    (BasisFamily.BELL_SHIFT1, BasisFamily.POWER): PairKind.STIRLING2_BINOMIAL,
    (BasisFamily.S1_SHIFT1, BasisFamily.POWER): PairKind.STIRLING1_BINOMIAL,
    (BasisFamily.FALLING, BasisFamily.POWER): "stirling1-signed",
}


def change_matrix(family: BasisFamily, target: BasisFamily, last: int) -> Triangle:
    """Row n holds the coefficients of family member n in the target basis."""
    if (family, target) not in BASIS_CHANGES:
        raise UnsupportedPairError(
            f"no registered change from {family.value} to {target.value}"
        )
    rows = []
    for n in range(last + 1):
        member = family_member(family, n)
        if target is BasisFamily.FALLING:
            coefficients = Polynomial(to_falling_basis(member)).coefficients(n + 1)
        else:
            coefficients = member.coefficients(n + 1)
        rows.append(tuple(coefficients))
    logger.debug("change matrix %s -> %s, rows 0..%d", family.value, target.value, last)
    return Triangle(tuple(rows))


def expected_change_matrix(family: BasisFamily, target: BasisFamily, last: int) -> Triangle:
    """The triangle a registered basis change must reproduce."""
    expected = BASIS_CHANGES[(family, target)]
    if isinstance(expected, TriangleKind):
        return base_triangle(expected, last)
    if isinstance(expected, PairKind):
        return composite_product(expected, last)
    return sign_twist(base_triangle(TriangleKind.STIRLING1, last))

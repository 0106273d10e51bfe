"""Utility functions for exact integer arithmetic."""

from .errors import ConsistencyError


def falling_factorial(x: int, k: int) -> int:
    """Return x(x-1)...(x-k+1); the empty product is 1."""
    result = 1
    for i in range(k):
        result *= x - i
    return result


def rising_factorial(x: int, k: int) -> int:
    """Return x(x+1)...(x+k-1); the empty product is 1."""
    result = 1
    for i in range(k):
        result *= x + i
    return result


def exact_div(numerator: int, denominator: int) -> int:
    """Divide, raising ConsistencyError unless the remainder is zero."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ConsistencyError(
            f"{numerator} is not divisible by {denominator}"
        )
    return quotient


def sign(n: int, m: int) -> int:
    """Return (-1)^(n-m)."""
    return -1 if (n - m) % 2 else 1

"""Exact product, inverse and identity test for triangles."""

from .errors import NotInvertibleError, ShapeError
from .triangle import Triangle


def multiply(a: Triangle, b: Triangle) -> Triangle:
    """Matrix product; entry (n, m) is sum over k=m..n of a(n,k) * b(k,m)."""
    if a.order != b.order:
        raise ShapeError(f"cannot multiply orders {a.order} and {b.order}")
    rows = []
    for n, a_row in enumerate(a.rows):
        row = []
        for m in range(n + 1):
            total = 0
            for k in range(m, n + 1):
                total += a_row[k] * b.rows[k][m]
            row.append(total)
        rows.append(tuple(row))
    return Triangle(tuple(rows))


def inverse(triangle: Triangle) -> Triangle:
    """Inverse of a triangle whose diagonal entries are all +1 or -1.

    Forward substitution on T X = I. Entry (n, m) of the result depends
    only on rows 0..n of T, so inverting a truncation gives the truncation
    of the inverse.
    """
    rows = []
    for n, t_row in enumerate(triangle.rows):
        pivot = t_row[n]
        if pivot not in (1, -1):
            raise NotInvertibleError(
                f"diagonal entry ({n},{n}) = {pivot} is not a unit"
            )
        row = [0] * (n + 1)
        # pivot is its own inverse
        row[n] = pivot
        for m in range(n):
            total = 0
            for k in range(m, n):
                total += t_row[k] * rows[k][m]
            row[m] = -pivot * total
        rows.append(tuple(row))
    return Triangle(tuple(rows))


def is_identity(triangle: Triangle) -> bool:
    """Check for unit diagonal and zeros below it."""
    return all(
        value == (1 if m == n else 0)
        for n, row in enumerate(triangle.rows)
        for m, value in enumerate(row)
    )

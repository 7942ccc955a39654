"""Fraction-free exact linear algebra over the integers (Bareiss elimination).

Matrices are lists of lists of Python ints.  Nothing here uses floating point.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["SingularMatrixError", "bareiss_rank", "determinant", "integer_inverse"]


class SingularMatrixError(ArithmeticError):
    pass


def _copy(m: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(map(int, row)) for row in m]


def bareiss_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix via one-step fraction-free elimination."""
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c, cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        r += 1
        if r == rows:
            break
    return r


def _bareiss_augmented(m: Sequence[Sequence[int]]):
    """Reduce ``[M | I]`` fraction-free to ``[det*I | adj(M)]`` (up to sign)."""
    n = len(m)
    a = [list(map(int, row)) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    width = 2 * n
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {k})")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        p = a[k][k]
        row_k = a[k]
        for i in range(n):
            if i == k:
                continue
            row_i = a[i]
            f = row_i[k]
            if i > k:
                for j in range(k, width):
                    row_i[j] = (p * row_i[j] - f * row_k[j]) // prev
            else:
                # above the pivot: keep every row scaled by the current leading minor
                for j in range(width):
                    row_i[j] = (p * row_i[j] - f * row_k[j]) // prev
        prev = p
    return a, prev


def determinant(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = _copy(m)
    prev = 1
    sign = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (p * a[i][j] - f * a[k][j]) // prev
            a[i][k] = 0
        prev = p
    return sign * a[n - 1][n - 1]


def integer_inverse(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a square integer matrix whose inverse is known to be integral.

    Raises :class:`SingularMatrixError` if ``m`` is singular and
    ``ArithmeticError`` if the inverse has a non-integer entry.
    """
    n = len(m)
    if n == 0:
        return []
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    a, d = _bareiss_augmented(m)
    inv = []
    for i in range(n):
        # a[i][i] == d after full fraction-free Gauss-Jordan
        if a[i][i] != d:
            raise ArithmeticError("fraction-free reduction lost its diagonal invariant")
        row = []
        for j in range(n, 2 * n):
            q, r = divmod(a[i][j], d)
            if r:
                raise ArithmeticError(f"inverse entry ({i}, {j - n}) = {a[i][j]}/{d} is not an integer")
            row.append(q)
        inv.append(row)
    return inv

import random
from fractions import Fraction

import pytest

from schubsem.linalg import SingularMatrixError, bareiss_rank, determinant, integer_inverse


def fraction_inverse(m):
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [v / piv for v in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def unimodular(rng, n):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(4 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        f = rng.randint(-3, 3)
        m[i] = [a + f * b for a, b in zip(m[i], m[j])]
    return m


def test_integer_inverse_matches_fractions():
    rng = random.Random(7)
    for n in range(1, 9):
        for _ in range(5):
            m = unimodular(rng, n)
            inv = integer_inverse(m)
            assert inv == [[int(v) for v in row] for row in fraction_inverse(m)]
            assert abs(determinant(m)) == 1


def test_non_integral_inverse_raises():
    with pytest.raises(ArithmeticError):
        integer_inverse([[2, 0], [0, 1]])


def test_singular():
    with pytest.raises(SingularMatrixError):
        integer_inverse([[1, 2], [2, 4]])
    assert determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1


def test_determinant_and_rank():
    assert determinant([[2, 1], [1, 3]]) == 5
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([]) == 1
    assert bareiss_rank([[1, 0, 0], [0, 1, 0]]) == 2
    assert bareiss_rank([[0, 0], [0, 0]]) == 0

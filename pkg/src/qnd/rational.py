"""Small dense matrices over Fraction (lists of rows)."""

from __future__ import annotations

from fractions import Fraction


class SingularMatrix(ZeroDivisionError):
    pass


def as_fractions(a):
    return [[Fraction(x) for x in row] for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def _eliminate(a):
    """Gauss-Jordan on [a | I]; returns (det, inverse) or raises SingularMatrix."""
    n = len(a)
    m = [list(map(Fraction, row)) + identity(n)[i] for i, row in enumerate(a)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det, [row[n:] for row in m]


def inverse(a):
    return _eliminate(a)[1]


def det(a):
    try:
        return _eliminate(a)[0]
    except SingularMatrix:
        return Fraction(0)

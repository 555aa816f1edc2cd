"""Small exact matrix helpers over Q (lists of lists)."""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .polynomials import Poly


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)]


def inverse(A):
    """Gauss-Jordan inverse with exact fractions."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise DomainError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def det(A):
    """Fraction-free Bareiss determinant (exact for rational entries)."""
    n = len(A)
    if n == 0:
        return 1
    M = [[Fraction(x) for x in row] for row in A]
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    d = sign * M[n - 1][n - 1]
    return d.numerator if d.denominator == 1 else d


def charpoly(A) -> Poly:
    """``det(xI - A)`` by Bareiss elimination over Q[x].

    Leading principal minors of ``xI - A`` are monic, hence nonzero, so no
    pivoting is needed and every division is exact.
    """
    n = len(A)
    x = Poly.x()
    M = [[(x if i == j else Poly()) - A[i][j] for j in range(n)] for i in range(n)]
    prev = Poly([1])
    for k in range(n - 1):
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("inexact Bareiss division")
                M[i][j] = q
        prev = M[k][k]
    return M[n - 1][n - 1]

"""Tuple-of-tuples matrices over any exact field (Fraction or QuadElem)."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

Matrix = tuple[tuple, ...]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def diag(values: Sequence, zero=Fraction(0)) -> Matrix:
    n = len(values)
    return tuple(tuple(values[i] if i == j else zero for j in range(n)) for i in range(n))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = tuple(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = row[0] * col[0]
            for k in range(1, len(row)):
                acc = acc + row[k] * col[k]
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def matmul_chain(*Ms: Matrix) -> Matrix:
    out = Ms[0]
    for M in Ms[1:]:
        out = matmul(out, M)
    return out


def add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(A, B))


def sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(A, B))


def scale(c, A: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in A)


def neg(A: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in A)


def apply(f: Callable, A: Matrix) -> Matrix:
    return tuple(tuple(f(x) for x in r) for r in A)


def _is_zero(x) -> bool:
    return x == 0


def inverse(A: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError when singular."""
    n = len(A)
    one = A[0][0] * 0 + 1
    zero = one * 0
    M = [list(A[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not _is_zero(M[r][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv_p = 1 / M[col][col]
        M[col] = [x * inv_p for x in M[col]]
        for r in range(n):
            if r != col and not _is_zero(M[r][col]):
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return tuple(tuple(row[n:]) for row in M)


def det(A: Matrix):
    n = len(A)
    M = [list(r) for r in A]
    result = M[0][0] * 0 + 1
    for col in range(n):
        piv = next((r for r in range(col, n) if not _is_zero(M[r][col])), None)
        if piv is None:
            return result * 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            result = -result
        p = M[col][col]
        result = result * p
        for r in range(col + 1, n):
            if not _is_zero(M[r][col]):
                f = M[r][col] / p
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return result


def solve(A: Matrix, b: Sequence) -> tuple:
    """Solve A x = b for square nonsingular A."""
    Ainv = inverse(A)
    return tuple(sum((Ainv[i][j] * b[j] for j in range(1, len(b))), Ainv[i][0] * b[0]) for i in range(len(b)))


def is_integral(A: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for r in A for x in r)


def to_fractions(A: Matrix) -> Matrix:
    return tuple(tuple(Fraction(x) for x in r) for r in A)


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_strings(A: Matrix) -> list[list[str]]:
    return [[frac_str(x) for x in r] for r in A]


def from_strings(rows: Sequence[Sequence[str]]) -> Matrix:
    return tuple(tuple(Fraction(str(x)) for x in r) for r in rows)

"""Rational 4x4 orthogonal groups of the forms T_N = [[0,0,N],[0,T,0],[N,0,0]].

Membership in the identity component SO_0 is decided exactly: diagonalise the
form over Q into a positive and a negative plane (``split_basis``) and check
that U preserves the orientation of the positive plane, i.e. that the
upper-left 2x2 block of R^-1 U R has positive determinant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import _matrix as mx
from .errors import DegenerateBasis, NotOrthogonal, WrongSignature
from .quadfield import QuadElem

Mat4 = tuple[tuple[Fraction, ...], ...]

__all__ = [
    "GramForm",
    "gram_of_basis",
    "is_orthogonal",
    "split_basis",
    "in_SO0",
    "in_discriminant_kernel",
    "conjugator",
]


@dataclass(frozen=True)
class GramForm:
    """The binary form S together with the corner N of its extension S_N."""

    S: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    N: Fraction = Fraction(1)

    def __post_init__(self):
        S = mx.to_fractions(self.S)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "N", Fraction(self.N))
        if S[0][1] != S[1][0]:
            raise ValueError("Gram matrix must be symmetric")

    @cached_property
    def matrix(self) -> Mat4:
        (a, b), (_, c) = self.S
        N, z = self.N, Fraction(0)
        return (
            (z, z, z, N),
            (z, a, b, z),
            (z, b, c, z),
            (N, z, z, z),
        )

    @cached_property
    def inverse(self) -> Mat4:
        return mx.inverse(self.matrix)

    @property
    def det(self) -> Fraction:
        (a, b), (_, c) = self.S
        return a * c - b * b

    def is_even(self) -> bool:
        return all(x.denominator == 1 for r in self.S for x in r) and all(
            int(self.S[i][i]) % 2 == 0 for i in range(2)
        )

    def extended(self, N) -> GramForm:
        return GramForm(self.S, N)

    def scaled(self, c) -> GramForm:
        """c * T_N: the form c*S with corner c*N."""
        c = Fraction(c)
        return GramForm(mx.scale(c, self.S), c * self.N)


def gram_of_basis(basis: tuple[QuadElem, QuadElem]) -> GramForm:
    """S = G^T P G = [[2uu', uv'+u'v], [uv'+u'v, 2vv']]."""
    u, v = basis
    if (u * v.conj() - u.conj() * v).is_zero():
        raise DegenerateBasis(f"({u}, {v}) is not a Q-basis of K")
    s11 = 2 * u.norm()
    s12 = (u * v.conj()).trace()
    s22 = 2 * v.norm()
    return GramForm(((s11, s12), (s12, s22)))


def is_orthogonal(U: Mat4, T: GramForm) -> bool:
    T4 = T.matrix
    return mx.matmul_chain(mx.transpose(U), T4, U) == T4 and mx.det(U) == 1


@lru_cache(maxsize=None)
def split_basis(T: GramForm) -> Mat4:
    """Invertible rational R with R^T T_N R = diag(p1, p2, n1, n2), p > 0 > n."""
    A = [list(r) for r in T.matrix]
    n = 4
    R = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]  # columns = basis

    def col_op(target: int, source: int, f: Fraction):
        # e_target += f * e_source
        for i in range(n):
            R[i][target] += f * R[i][source]
        for i in range(n):
            A[i][target] += f * A[i][source]
        for j in range(n):
            A[target][j] += f * A[source][j]

    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                # swap basis vectors k and j
                for i in range(n):
                    R[i][k], R[i][j] = R[i][j], R[i][k]
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    raise WrongSignature("degenerate form")
                # e_k <- e_k + e_j gives value 2 A[k][j] != 0
                col_op(k, j, Fraction(1))
        p = A[k][k]
        for j in range(k + 1, n):
            if A[k][j] != 0:
                col_op(j, k, -A[k][j] / p)

    Rm = mx.mat(R)
    D = mx.matmul_chain(mx.transpose(Rm), T.matrix, Rm)
    assert all(D[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    pos = [i for i in range(n) if D[i][i] > 0]
    neg = [i for i in range(n) if D[i][i] < 0]
    if len(pos) != 2 or len(neg) != 2:
        raise WrongSignature(f"signature ({len(pos)},{len(neg)}) is not (2,2)")
    order = pos + neg
    Rm = tuple(tuple(row[j] for j in order) for row in Rm)
    # self-check by re-multiplication
    D = mx.matmul_chain(mx.transpose(Rm), T.matrix, Rm)
    assert all(D[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    assert D[0][0] > 0 and D[1][1] > 0 and D[2][2] < 0 and D[3][3] < 0
    return Rm


@lru_cache(maxsize=None)
def _split_inverse(T: GramForm) -> Mat4:
    return mx.inverse(split_basis(T))


def in_SO0(U: Mat4, T: GramForm) -> bool:
    if not is_orthogonal(U, T):
        raise NotOrthogonal("U does not preserve the form")
    R = split_basis(T)
    V = mx.matmul_chain(_split_inverse(T), U, R)
    return V[0][0] * V[1][1] - V[0][1] * V[1][0] > 0


def in_discriminant_kernel(U: Mat4, T: GramForm) -> bool:
    """U integral, in SO_0, and U in I + Z^{4x4} T_N."""
    if not mx.is_integral(U):
        return False
    if not is_orthogonal(U, T) or not in_SO0(U, T):
        return False
    X = mx.matmul(mx.sub(U, mx.identity(4)), T.inverse)
    return mx.is_integral(X)


def conjugator(kind: str, n) -> Mat4:
    """The diagonal matrices F_N, G_N, H_N (= diag(N,1,1,1)) and H_n (= diag(n,1,1,1/n))."""
    n = Fraction(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    one = Fraction(1)
    values = {
        "F": (one, one, one, n),
        "G": (one, n, n, one),
        "H_N": (n, one, one, one),
        "H_n": (n, one, one, 1 / n),
    }[kind]
    return mx.diag(values)

"""Ideals of O_K in Hermite normal form.

An integral ideal is stored as the lattice Z*a + Z*(b + c*omega) with
``c | a``, ``c | b`` and ``0 <= b < a``; this form is unique, so ideal
equality is equality of the triples.  Fractional ideals are ``num / den``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ._arith import is_squarefree, lcm_all
from .errors import BadDivisor, NotIntegral, NotPrimitive, ZeroIdeal
from .quadfield import FieldCtx, QuadElem, make_field

__all__ = [
    "IdealHNF",
    "FracIdeal",
    "hnf_of_lattice",
    "ideal_from_generators",
    "principal_ideal",
    "unit_ideal",
    "ideal_mul",
    "ideal_eq",
    "ideal_contains",
    "ideal_scale",
    "ideal_conj",
    "A_ell",
    "is_primitive",
    "canonical_basis",
    "ideal_from_canonical",
    "ideal_inverse",
    "content_ideal",
    "frac_contains",
    "frac_content_ideal",
    "frac_mul",
]


@dataclass(frozen=True)
class IdealHNF:
    a: int
    b: int
    c: int
    m: int

    @property
    def ctx(self) -> FieldCtx:
        return make_field(self.m)

    @property
    def norm(self) -> int:
        """Reduced norm [O_K : I]."""
        return self.a * self.c

    @property
    def content(self) -> int:
        return self.c

    def basis(self) -> tuple[QuadElem, QuadElem]:
        ctx = self.ctx
        return ctx.elem(self.a), ctx.from_coords(self.b, self.c)

    def __contains__(self, x: QuadElem) -> bool:
        return ideal_contains(self, x)

    def __mul__(self, other: IdealHNF) -> IdealHNF:
        return ideal_mul(self, other)

    def __str__(self):
        return f"[{self.a}, {self.b}+{self.c}*w]"


@dataclass(frozen=True)
class FracIdeal:
    """The fractional ideal num / den, reduced so gcd(den, content(num)) = 1."""

    num: IdealHNF
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        g = gcd(self.den, self.num.c)
        if g > 1:
            object.__setattr__(self, "num", ideal_scale(self.num, Fraction(1, g)))
            object.__setattr__(self, "den", self.den // g)

    def __contains__(self, x: QuadElem) -> bool:
        return frac_contains(self, x)

    def __str__(self):
        return f"{self.num}/{self.den}"


def hnf_of_lattice(vectors: Iterable[tuple[int, int]], m: int) -> IdealHNF:
    """HNF of the Z-span of integer coordinate vectors (x, y) ~ x + y*omega.

    Assumes the span has rank 2 (true for any nonzero ideal).
    """
    px, py = 0, 0  # pivot vector, py >= 0 the gcd of second coordinates so far
    xs = 0  # gcd of first coordinates of the rank-one sublattice y = 0
    for x, y in vectors:
        if y == 0:
            xs = gcd(xs, x)
            continue
        if py == 0:
            # absorb an old zero-y pivot into xs
            xs = gcd(xs, px)
            px, py = (x, y) if y > 0 else (-x, -y)
            continue
        g, s, t = _egcd(py, y)
        nx = s * px + t * x
        # the combination with zero second coordinate
        zx = (y // g) * px - (py // g) * x
        xs = gcd(xs, zx)
        px, py = nx, g
    if py == 0 or xs == 0:
        raise ZeroIdeal("lattice does not have full rank")
    a, c = xs, py
    return IdealHNF(a, px % a, c, m)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = s*a + t*b = gcd(a, b) > 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def ideal_from_generators(gens: Sequence[QuadElem], ctx: FieldCtx | None = None) -> IdealHNF:
    """HNF of the O_K-ideal generated by integral elements."""
    gens = list(gens)
    if ctx is None:
        if not gens:
            raise ZeroIdeal("no generators")
        ctx = make_field(gens[0].m)
    vecs = []
    for g in gens:
        if not ctx.is_integral(g):
            raise NotIntegral(f"generator {g} is not in O_K")
        if g.is_zero():
            continue
        vecs.append(ctx.int_coords(g))
        vecs.append(ctx.int_coords(g * ctx.omega))
    if not vecs:
        raise ZeroIdeal("all generators are zero")
    return hnf_of_lattice(vecs, ctx.m)


def principal_ideal(x: QuadElem) -> IdealHNF:
    return ideal_from_generators([x])


def unit_ideal(ctx: FieldCtx) -> IdealHNF:
    return IdealHNF(1, 0, 1, ctx.m)


def ideal_mul(I: IdealHNF, J: IdealHNF) -> IdealHNF:
    assert I.m == J.m
    ctx = I.ctx
    vecs = [ctx.int_coords(x * y) for x in I.basis() for y in J.basis()]
    return hnf_of_lattice(vecs, I.m)


def ideal_eq(I: IdealHNF, J: IdealHNF) -> bool:
    return I == J


def ideal_contains(I: IdealHNF, x: QuadElem) -> bool:
    ctx = I.ctx
    if not ctx.is_integral(x):
        return False
    x0, x1 = ctx.int_coords(x)
    if x1 % I.c:
        return False
    return (x0 - (x1 // I.c) * I.b) % I.a == 0


def ideal_scale(I: IdealHNF, q) -> IdealHNF:
    """q * I for a positive rational q keeping the result integral."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("scale factor must be positive")
    n, d = q.numerator, q.denominator
    if (I.a * n) % d or (I.b * n) % d or (I.c * n) % d:
        raise NotIntegral(f"{q} * {I} is not integral")
    a, c = I.a * n // d, I.c * n // d
    return IdealHNF(a, (I.b * n // d) % a, c, I.m)


def ideal_conj(I: IdealHNF) -> IdealHNF:
    return ideal_from_generators([x.conj() for x in I.basis()])


def A_ell(ell: int, ctx: FieldCtx) -> IdealHNF:
    """The ideal Z*ell + Z*omega for a squarefree divisor ell of d_K."""
    if ell <= 0 or ctx.disc % ell or not is_squarefree(ell):
        raise BadDivisor(f"{ell} is not a squarefree divisor of d_K = {ctx.disc}")
    I = ideal_from_generators([ctx.elem(ell), ctx.omega], ctx)
    # Z*ell + Z*omega is already O_K-stable, so the generated ideal is exactly it
    assert (I.a, I.b, I.c) == (ell, 0, 1), I
    return I


def is_primitive(I: IdealHNF) -> bool:
    return I.c == 1


def canonical_basis(I: IdealHNF) -> tuple[int, int]:
    """(N, t) with I = Z*N + Z*(t + omega), N the reduced norm, 0 <= t < N."""
    if not is_primitive(I):
        raise NotPrimitive(f"{I} is divisible by {I.c}")
    return I.a, I.b


def ideal_from_canonical(N: int, t: int, ctx: FieldCtx) -> IdealHNF:
    """The primitive ideal with Z-basis (N, t + omega); checks N | N(t + omega)."""
    if N <= 0:
        raise ValueError("N must be positive")
    if (t + ctx.omega).norm() % N:
        raise NotIntegral(f"Z*{N} + Z*({t}+w) is not an ideal")
    I = IdealHNF(N, t % N, 1, ctx.m)
    J = ideal_from_generators([ctx.elem(N), t + ctx.omega], ctx)
    assert I == J
    return I


def ideal_inverse(I: IdealHNF) -> FracIdeal:
    """I^-1 = (1/N) I' for a primitive ideal of reduced norm N."""
    if not is_primitive(I):
        raise NotPrimitive(f"{I} is not primitive")
    Ic = ideal_conj(I)
    assert ideal_mul(I, Ic) == ideal_scale(unit_ideal(I.ctx), I.norm)
    return FracIdeal(Ic, I.norm)


def general_inverse(I: IdealHNF) -> FracIdeal:
    """I^-1 for any nonzero integral ideal, using I * I' = N(I) O_K."""
    return FracIdeal(ideal_conj(I), I.norm)


def content_ideal(L: Sequence[Sequence[QuadElem]]) -> IdealHNF:
    """The O_K-ideal generated by the entries of an integral matrix."""
    entries = [x for row in L for x in row]
    return ideal_from_generators(entries)


def frac_contains(J: FracIdeal, x: QuadElem) -> bool:
    return ideal_contains(J.num, x * J.den)


def frac_content_ideal(entries: Sequence[QuadElem]) -> FracIdeal:
    """Fractional ideal generated by arbitrary nonzero-containing elements of K."""
    ctx = make_field(entries[0].m)
    den = lcm_all(
        c.denominator for x in entries for c in ctx.coords(x)
    )
    return FracIdeal(ideal_from_generators([x * den for x in entries], ctx), den)


def frac_mul(I: FracIdeal, J: FracIdeal) -> FracIdeal:
    return FracIdeal(ideal_mul(I.num, J.num), I.den * J.den)

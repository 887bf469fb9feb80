"""Exact arithmetic in a real quadratic field K = Q(sqrt(m)) and its integers.

Elements are stored as ``(a + b*sqrt(m)) / d`` with Python integers, so every
operation is exact and unbounded.  The fixed real embedding takes sqrt(m) > 0;
``conj`` is the non-trivial automorphism sqrt(m) -> -sqrt(m).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from ._arith import is_square, is_squarefree
from .errors import (
    DegenerateBasis,
    NoRepresentation,
    NotIntegral,
    NotSquarefree,
    ParseError,
    TrivialField,
)

__all__ = [
    "FieldCtx",
    "QuadElem",
    "make_field",
    "conj",
    "norm",
    "trace",
    "is_integral",
    "coords_wrt",
    "is_totally_positive",
    "fundamental_unit",
    "two_squares",
    "parse_quad",
    "format_quad",
]


class QuadElem:
    """The number ``(a + b*sqrt(m)) / d``, kept in lowest terms with ``d > 0``."""

    __slots__ = ("a", "b", "d", "m")

    def __init__(self, a: int, b: int, d: int, m: int, _reduced: bool = False):
        if not _reduced:
            if d == 0:
                raise ZeroDivisionError("zero denominator")
            if d < 0:
                a, b, d = -a, -b, -d
            g = gcd(gcd(a, b), d)
            if g > 1:
                a, b, d = a // g, b // g, d // g
        self.a = a
        self.b = b
        self.d = d
        self.m = m

    @classmethod
    def from_rationals(cls, x, y, m: int) -> QuadElem:
        x, y = Fraction(x), Fraction(y)
        d = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
        return cls(x.numerator * (d // x.denominator), y.numerator * (d // y.denominator), d, m)

    @classmethod
    def rational(cls, q, m: int) -> QuadElem:
        q = Fraction(q)
        return cls(q.numerator, 0, q.denominator, m, _reduced=True)

    # -- coefficients ---------------------------------------------------
    @property
    def x(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def y(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.a, self.d)

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            assert other.m == self.m, "mixing elements of different fields"
            return other
        if isinstance(other, int):
            return QuadElem(other, 0, 1, self.m, _reduced=True)
        if isinstance(other, Fraction):
            return QuadElem(other.numerator, 0, other.denominator, self.m, _reduced=True)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.d == o.d:
            return QuadElem(self.a + o.a, self.b + o.b, self.d, self.m)
        return QuadElem(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d, self.m, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(
            self.a * o.a + self.m * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d * o.d,
            self.m,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadElem:
        n = self.a * self.a - self.m * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        # 1/((a+b r)/d) = d (a - b r) / (a^2 - m b^2)
        return QuadElem(self.d * self.a, -self.d * self.b, n, self.m)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadElem(1, 0, 1, self.m, _reduced=True)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- Galois structure -----------------------------------------------
    def conj(self) -> QuadElem:
        return QuadElem(self.a, -self.b, self.d, self.m, _reduced=True)

    def norm(self) -> Fraction:
        return Fraction(self.a * self.a - self.m * self.b * self.b, self.d * self.d)

    def trace(self) -> Fraction:
        return Fraction(2 * self.a, self.d)

    # -- order under the fixed embedding ----------------------------------
    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with m b^2
        if a * a > self.m * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return (self.a + self.b * self.m ** 0.5) / self.d

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.d, self.m) == (other.a, other.b, other.d, other.m)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.d) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d, self.m))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"QuadElem({format_quad(self)!r}, m={self.m})"

    def __str__(self):
        return format_quad(self)


@dataclass(frozen=True)
class FieldCtx:
    """Data of K = Q(sqrt(m)): the generator omega of O_K = Z + Z*omega and d_K."""

    m: int
    omega: QuadElem
    disc: int
    omega_trace: int
    omega_norm: int

    def elem(self, x, y=0) -> QuadElem:
        return QuadElem.from_rationals(x, y, self.m)

    def __call__(self, x, y=0) -> QuadElem:
        return self.elem(x, y)

    @property
    def one(self) -> QuadElem:
        return QuadElem(1, 0, 1, self.m, _reduced=True)

    @property
    def zero(self) -> QuadElem:
        return QuadElem(0, 0, 1, self.m, _reduced=True)

    @property
    def sqrt_m(self) -> QuadElem:
        return QuadElem(0, 1, 1, self.m, _reduced=True)

    @property
    def sqrt_disc(self) -> QuadElem:
        """sqrt(d_K) as an element of K."""
        return self.sqrt_m if self.disc == self.m else 2 * self.sqrt_m

    def from_coords(self, c0, c1) -> QuadElem:
        """The element c0 + c1*omega."""
        return c0 + c1 * self.omega

    def coords(self, a: QuadElem) -> tuple[Fraction, Fraction]:
        """Coordinates of a in the basis (1, omega)."""
        # omega = (m + s r)/s with s = 2 or 1, so r = s*omega - m
        x, y = a.x, a.y
        if self.disc == self.m:
            return x - y * self.m, 2 * y
        return x - y * self.m, y

    def is_integral(self, a: QuadElem) -> bool:
        c0, c1 = self.coords(a)
        return c0.denominator == 1 and c1.denominator == 1

    def int_coords(self, a: QuadElem) -> tuple[int, int]:
        c0, c1 = self.coords(a)
        if c0.denominator != 1 or c1.denominator != 1:
            raise NotIntegral(f"{a} is not in O_K")
        return int(c0), int(c1)

    def __repr__(self):
        return f"FieldCtx(m={self.m}, omega={self.omega}, d_K={self.disc})"


@lru_cache(maxsize=None)
def make_field(m: int) -> FieldCtx:
    if m == 1:
        raise TrivialField("m = 1 gives Q itself")
    if m < 1:
        raise ValueError("only real quadratic fields (m > 1) are supported")
    if not is_squarefree(m):
        raise NotSquarefree(f"{m} is not squarefree")
    if m % 4 == 1:
        omega = QuadElem(m, 1, 2, m)
        disc = m
    else:
        omega = QuadElem(m, 1, 1, m)
        disc = 4 * m
    return FieldCtx(
        m=m,
        omega=omega,
        disc=disc,
        omega_trace=int(omega.trace()),
        omega_norm=int(omega.norm()),
    )


def conj(a: QuadElem) -> QuadElem:
    return a.conj()


def norm(a: QuadElem) -> Fraction:
    return a.norm()


def trace(a: QuadElem) -> Fraction:
    return a.trace()


def is_integral(a: QuadElem) -> bool:
    """True iff a lies in O_K = Z + Z*omega."""
    return make_field(a.m).is_integral(a)


def coords_wrt(a: QuadElem, basis: tuple[QuadElem, QuadElem]) -> tuple[Fraction, Fraction]:
    """Rational (s, t) with a = s*u + t*v for basis = (u, v)."""
    u, v = basis
    det = u * v.conj() - u.conj() * v
    if det.is_zero():
        raise DegenerateBasis(f"({u}, {v}) is not a Q-basis of K")
    ac = a.conj()
    s = (a * v.conj() - ac * v) / det
    t = (u * ac - u.conj() * a) / det
    return s.to_fraction(), t.to_fraction()


def is_totally_positive(a: QuadElem) -> bool:
    return a.sign() > 0 and a.conj().sign() > 0


def _cf_generator(m: int) -> tuple[int, int]:
    """(P0, Q0) with (P0 + sqrt(m))/Q0 generating O_K over Z."""
    return (1, 2) if m % 4 == 1 else (0, 1)


@lru_cache(maxsize=None)
def fundamental_unit(ctx: FieldCtx) -> QuadElem:
    """The fundamental unit eps0 > 1 of O_K.

    Runs the continued fraction of theta = (P0 + sqrt(m))/Q0 over one full
    period of the surd states (P, Q); the unit is read off from the first
    convergent p/q in that period with N(p - q*theta) = +-1.
    """
    m = ctx.m
    P0, Q0 = _cf_generator(m)
    s = isqrt(m)
    theta = QuadElem(P0, 1, Q0, m)

    a0 = (P0 + s) // Q0
    P, Q = a0 * Q0 - P0, (m - (a0 * Q0 - P0) ** 2) // Q0
    start = (P, Q)
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    convergents = [(p, q)]
    while True:
        a = (P + s) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        convergents.append((p, q))
        P = a * Q - P
        Q = (m - P * P) // Q
        if (P, Q) == start:
            break

    for p, q in convergents:
        x = p - q * theta
        if abs(x.norm()) == 1:
            eps = x.conj()
            if eps < 0:
                eps = -eps
            if eps < 1:
                eps = eps.inverse()
            assert eps > 1 and abs(eps.norm()) == 1
            return eps
    raise AssertionError(f"no unit found in one period for m={m}")


def two_squares(m: int) -> tuple[int, int]:
    """Lexicographically smallest (alpha, beta), alpha odd, with alpha^2 + beta^2 = m."""
    for alpha in range(1, isqrt(m) + 1, 2):
        rest = m - alpha * alpha
        if rest > 0 and is_square(rest):
            return alpha, isqrt(rest)
    raise NoRepresentation(f"{m} is not alpha^2 + beta^2 with alpha odd, beta > 0")


# -- text form -----------------------------------------------------------

def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_quad(a: QuadElem) -> str:
    """Canonical text ``x+y*sqrt(m)``; zero terms and unit coefficients dropped."""
    x, y = a.x, a.y
    if y == 0:
        return _frac_str(x)
    root = f"sqrt({a.m})"
    if y == 1:
        yt = root
    elif y == -1:
        yt = "-" + root
    else:
        yt = f"{_frac_str(y)}*{root}"
    if x == 0:
        return yt
    return f"{_frac_str(x)}{'' if yt.startswith('-') else '+'}{yt}"


_TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?(\*)?(sqrt\((\d+)\)|w)?")


def parse_quad(text: str, m: int) -> QuadElem:
    """Parse ``x+y*sqrt(m)`` style text; ``w`` stands for omega."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty element")
    ctx = make_field(m)
    total = ctx.zero
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if mt is None or mt.end() == pos:
            raise ParseError(f"cannot parse {text!r} at offset {pos}")
        sign, coef, star, sym, root = mt.groups()
        if coef is None and sym is None:
            raise ParseError(f"dangling sign in {text!r}")
        if star and (coef is None or sym is None):
            raise ParseError(f"misplaced '*' in {text!r}")
        if pos > 0 and sign is None:
            raise ParseError(f"missing operator in {text!r}")
        c = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            c = -c
        if sym is None:
            term = ctx.elem(c)
        elif sym == "w":
            term = c * ctx.omega
        else:
            if int(root) != m:
                raise ParseError(f"sqrt({root}) does not belong to Q(sqrt({m}))")
            term = ctx.elem(0, c)
        total = total + term
        pos = mt.end()
    return total

"""Small integer helpers on top of sympy's factorisation."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt

from sympy import factorint


def prime_factors(n: int) -> list[int]:
    return sorted(factorint(abs(n)))


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorint(abs(n)).values())


def squarefree_part(n: int) -> int:
    """Return q squarefree with n = q * s**2 (sign kept on q)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    q = -1 if n < 0 else 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            q *= p
    return q


def largest_square_divisor_root(n: int) -> int:
    """Largest s with s**2 | n."""
    s = 1
    for p, e in factorint(abs(n)).items():
        s *= p ** (e // 2)
    return s


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def gcd_all(values) -> int:
    return reduce(gcd, values, 0)


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def squarefree_divisors(n: int) -> list[int]:
    divs = [1]
    for p in prime_factors(n):
        divs += [d * p for d in divs]
    return sorted(divs)

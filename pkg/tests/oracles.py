"""Brute-force reference computations, independent of the library code."""
from math import isqrt


def squarefree(n):
    return n > 1 and all(n % (p * p) for p in range(2, isqrt(n) + 1))


def pell_unit(m, y_max=10**6):
    """Smallest unit > 1 of the maximal order, as (x, y, d): (x + y sqrt m)/d.

    Searches y = 1, 2, ... for x^2 - m y^2 = +-k with k = 4 (m = 1 mod 4,
    half-integral units) or k = 1.  The first hit has the smallest y, hence
    is the smallest unit > 1.
    """
    k, d = (4, 2) if m % 4 == 1 else (1, 1)
    for y in range(1, y_max):
        for s in (-1, 1):
            t = m * y * y + s * k
            if t > 0:
                x = isqrt(t)
                if x * x == t:
                    return x, y, d
    raise RuntimeError("no unit found")


def two_squares_exhaustive(m):
    hits = [(a, b) for a in range(1, isqrt(m) + 1, 2) for b in range(1, isqrt(m) + 1) if a * a + b * b == m]
    return min(hits) if hits else None


def squarefree_kernel(n):
    """Product of primes dividing n to an odd power."""
    q, p = 1, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            q *= p
        p += 1
    return q * n

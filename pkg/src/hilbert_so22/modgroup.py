"""The 2x2 matrix groups around SL_2(O_K).

Every real matrix here has the shape ``(1/sqrt(ell)) * L`` with ``L`` over O_K
and ``det L = ell`` (the group Sigma_K), or ``(1/sqrt(delta)) * L`` with
``delta = det L`` in O_K (normalizer elements).  Square roots are never
evaluated: products only ever need ``ell`` as a rational integer.

All statements are modulo {+I, -I}; ``SigmaElem`` equality is projective.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional, Sequence

from . import _matrix as mx
from ._arith import (
    is_square,
    is_squarefree,
    lcm_all,
    prime_factors,
    squarefree_divisors,
    squarefree_part,
)
from .errors import (
    BadDivisor,
    NoBezout,
    NotInGamma,
    NotIntegral,
    NotTotallyPositiveUnit,
    ParseError,
    WrongCase,
)
from .ideals import (
    FracIdeal,
    IdealHNF,
    A_ell,
    content_ideal,
    frac_contains,
    frac_content_ideal,
    frac_mul,
    general_inverse,
    ideal_contains,
    ideal_inverse,
    ideal_mul,
    ideal_scale,
    is_primitive,
    principal_ideal,
    unit_ideal,
)
from .quadfield import (
    FieldCtx,
    QuadElem,
    format_quad,
    fundamental_unit,
    is_totally_positive,
    make_field,
    parse_quad,
    two_squares,
)

Mat2 = tuple[tuple[QuadElem, QuadElem], tuple[QuadElem, QuadElem]]


def _det2(L: Mat2) -> QuadElem:
    return L[0][0] * L[1][1] - L[0][1] * L[1][0]


def _adj2(L: Mat2) -> Mat2:
    (a, b), (c, d) = L
    return ((d, -b), (-c, a))


def _entries(L: Mat2):
    return (L[0][0], L[0][1], L[1][0], L[1][1])


# ---------------------------------------------------------------------------
# Sigma_K
# ---------------------------------------------------------------------------


class SigmaElem:
    """The projective class of ``(1/sqrt(ell)) * L``, L over O_K, det L = ell.

    Instances are canonical: ``ell`` is minimal among all representations
    (including the one obtained by multiplying L by sqrt(m)), and the first
    nonzero entry of L is positive.
    """

    __slots__ = ("L", "ell", "m")

    def __init__(self, L: Mat2, ell: int, *, check: bool = True):
        L = mx.mat(L)
        m = L[0][0].m if isinstance(L[0][0], QuadElem) else None
        if m is None:
            raise TypeError("entries must be QuadElem")
        if check:
            ctx = make_field(m)
            if ell <= 0:
                raise ValueError("ell must be a positive integer")
            if not all(ctx.is_integral(x) for x in _entries(L)):
                raise NotIntegral("L must have entries in O_K")
            if _det2(L) != ell:
                raise ValueError(f"det L = {_det2(L)} differs from ell = {ell}")
        L, ell = _canonical(L, ell, m)
        self.L = L
        self.ell = ell
        self.m = m

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_matrix(cls, X: Sequence[Sequence[QuadElem]], ell: int = 1) -> SigmaElem:
        """(1/sqrt(ell)) X for X over K with det X = ell."""
        X = mx.mat(X)
        ctx = make_field(X[0][0].m)
        den = lcm_all(c.denominator for x in _entries(X) for c in ctx.coords(x))
        return cls(mx.scale(den, X), ell * den * den)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> SigmaElem:
        return cls(((ctx.one, ctx.zero), (ctx.zero, ctx.one)), 1)

    @classmethod
    def upper(cls, beta: QuadElem) -> SigmaElem:
        ctx = make_field(beta.m)
        return cls.from_matrix(((ctx.one, beta), (ctx.zero, ctx.one)))

    @classmethod
    def lower(cls, gamma: QuadElem) -> SigmaElem:
        ctx = make_field(gamma.m)
        return cls.from_matrix(((ctx.one, ctx.zero), (gamma, ctx.one)))

    @classmethod
    def diagonal(cls, x: QuadElem, y: QuadElem, ell: int = 1) -> SigmaElem:
        zero = make_field(x.m).zero
        return cls.from_matrix(((x, zero), (zero, y)), ell)

    # -- views -------------------------------------------------------------
    @property
    def ctx(self) -> FieldCtx:
        return make_field(self.m)

    @property
    def conj_sign(self) -> int:
        """-1 when sqrt(ell) lies in K with conjugate -sqrt(ell) (ell = m*n^2), else 1."""
        ell = self.ell
        return -1 if ell % self.m == 0 and is_square(ell // self.m) else 1

    def conj_L(self) -> Mat2:
        return mx.apply(QuadElem.conj, self.L)

    def as_K_matrix(self) -> Optional[Mat2]:
        """The matrix itself when all its entries lie in K, else None."""
        ell, m = self.ell, self.m
        if is_square(ell):
            r = self.ctx.elem(isqrt(ell))
        elif ell % m == 0 and is_square(ell // m):
            r = isqrt(ell // m) * self.ctx.sqrt_m
        else:
            return None
        return mx.apply(lambda x: x / r, self.L)

    def real_entries(self) -> tuple[float, float, float, float]:
        s = self.ell ** 0.5
        return tuple(float(x) / s for x in _entries(self.L))

    # -- group structure ----------------------------------------------------
    def __mul__(self, other: SigmaElem) -> SigmaElem:
        return mul(self, other)

    def __invert__(self) -> SigmaElem:
        return inv(self)

    def __eq__(self, other):
        if not isinstance(other, SigmaElem):
            return NotImplemented
        return eq(self, other)

    def __hash__(self):
        return hash((self.L, self.ell))

    def __repr__(self):
        return f"SigmaElem({format_matrix(self)!r})"

    __str__ = lambda self: format_matrix(self)


def _int_reduce(L: Mat2, ell: int, ctx: FieldCtx) -> tuple[Mat2, int]:
    """Divide L by the largest n with n | L and n^2 | ell."""
    if ell == 1:
        return L, ell
    c = 0
    for x in _entries(L):
        x0, x1 = ctx.int_coords(x)
        c = gcd(gcd(c, x0), x1)
    g = gcd(c, ell)
    if g == 1:
        return L, ell
    n = 1
    for p in prime_factors(g):
        vc = vl = 0
        cc, ll = c, ell
        while cc % p == 0:
            cc //= p
            vc += 1
        while ll % p == 0:
            ll //= p
            vl += 1
        n *= p ** min(vc, vl // 2)
    if n == 1:
        return L, ell
    return mx.apply(lambda x: x / n, L), ell // (n * n)


def _canonical(L: Mat2, ell: int, m: int) -> tuple[Mat2, int]:
    ctx = make_field(m)
    best = _int_reduce(L, ell, ctx)
    if best[1] > 1:
        r = ctx.sqrt_m
        alt = _int_reduce(mx.apply(lambda x: x * r, L), ell * m, ctx)
        if alt[1] < best[1]:
            best = alt
    L, ell = best
    first = next(x for x in _entries(L) if not x.is_zero())
    if first.sign() < 0:
        L = mx.neg(L)
    return L, ell


def mul(M1: SigmaElem, M2: SigmaElem) -> SigmaElem:
    assert M1.m == M2.m
    return SigmaElem(mx.matmul(M1.L, M2.L), M1.ell * M2.ell, check=False)


def inv(M: SigmaElem) -> SigmaElem:
    return SigmaElem(_adj2(M.L), M.ell, check=False)


def eq(M1: SigmaElem, M2: SigmaElem) -> bool:
    """Projective equality: M1 = +-M2 as real matrices."""
    if M1.m != M2.m:
        return False
    # M1 M2^-1 = (1/sqrt(l1 l2)) L1 adj(L2) is scalar iff it is +-I
    P = mx.matmul(M1.L, _adj2(M2.L))
    return P[0][1].is_zero() and P[1][0].is_zero() and P[0][0] == P[1][1]


def word_product(factors: Sequence[SigmaElem], ctx: FieldCtx) -> SigmaElem:
    out = SigmaElem.identity(ctx)
    for f in factors:
        out = mul(out, f)
    return out


# ---------------------------------------------------------------------------
# Gamma_K and Gamma_K(I)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaICtx:
    """Data of Gamma_K(I): the ideal, its inverse and its reduced norm."""

    ideal: IdealHNF
    inv: FracIdeal
    N: int

    @classmethod
    def of(cls, ideal: IdealHNF) -> GammaICtx:
        inv_ = ideal_inverse(ideal) if is_primitive(ideal) else general_inverse(ideal)
        return cls(ideal, inv_, ideal.norm)

    @property
    def ctx(self) -> FieldCtx:
        return make_field(self.ideal.m)

    def inverse_basis(self) -> tuple[QuadElem, QuadElem]:
        u, v = self.inv.num.basis()
        return u / self.inv.den, v / self.inv.den


def in_gamma(M: SigmaElem) -> bool:
    X = M.as_K_matrix()
    return X is not None and all(M.ctx.is_integral(x) for x in _entries(X))


def gamma_entries(M: SigmaElem) -> tuple[QuadElem, QuadElem, QuadElem, QuadElem]:
    """(alpha, beta, gamma, delta) of an element of SL_2(K); raises NotInGamma otherwise."""
    X = M.as_K_matrix()
    if X is None:
        raise NotInGamma(f"{M} has entries outside K")
    return _entries(X)


def in_gamma_I(M: SigmaElem, gctx: GammaICtx) -> bool:
    X = M.as_K_matrix()
    if X is None:
        return False
    (a, b), (c, d) = X
    ctx = M.ctx
    return (
        ctx.is_integral(a)
        and ctx.is_integral(d)
        and ideal_contains(gctx.ideal, b)
        and frac_contains(gctx.inv, c)
    )


# ---------------------------------------------------------------------------
# Normalizer and Hurwitz-Maass extension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalizerElem:
    """``(1/sqrt(delta)) * L`` with L over O_K and delta = det L."""

    L: Mat2
    delta: QuadElem

    def __post_init__(self):
        if _det2(self.L) != self.delta:
            raise ValueError("delta must equal det L")

    @classmethod
    def from_sigma(cls, M: SigmaElem) -> NormalizerElem:
        return cls(M.L, M.ctx.elem(M.ell))

    def __str__(self):
        rows = ",".join("[" + ",".join(format_quad(x) for x in r) + "]" for r in self.L)
        return f"[{rows}]/sqrt({format_quad(self.delta)})"


def _content_square_is(L: Mat2, delta: QuadElem) -> bool:
    I = content_ideal(L)
    return ideal_mul(I, I) == principal_ideal(delta)


def in_normalizer(M) -> bool:
    """det L > 0 under the fixed embedding and I(L)^2 = O_K det L."""
    if isinstance(M, SigmaElem):
        M = NormalizerElem.from_sigma(M)
    return M.delta.sign() > 0 and _content_square_is(M.L, M.delta)


def in_gamma_star(M) -> bool:
    if isinstance(M, SigmaElem):
        M = NormalizerElem.from_sigma(M)
    return in_normalizer(M) and is_totally_positive(M.delta)


def in_gamma_star_I(M: SigmaElem, gctx: GammaICtx) -> bool:
    """Membership in the Hurwitz-Maass extension of Gamma_K(I).

    The content of L is taken relative to the block shape
    [[O_K, I], [I^-1, O_K]], i.e. alpha*O_K + beta*I^-1 + gamma*I + delta*O_K,
    which is invariant under rescaling L.
    """
    (a, b), (c, d) = M.L
    ctx = M.ctx
    parts = [a, d]
    for x in b * gctx.inv.num.basis()[0], b * gctx.inv.num.basis()[1]:
        parts.append(x / gctx.inv.den)
    for x in gctx.ideal.basis():
        parts.append(c * x)
    parts = [p for p in parts if not p.is_zero()]
    J = frac_content_ideal(parts)
    J2 = frac_mul(J, J)
    target = FracIdeal(ideal_scale(unit_ideal(ctx), M.ell), 1)
    return J2 == target


# ---------------------------------------------------------------------------
# Atkin-Lehner matrices
# ---------------------------------------------------------------------------


def _check_divisor(ell: int, ctx: FieldCtx) -> None:
    if ell <= 0 or ctx.disc % ell or not is_squarefree(ell):
        raise BadDivisor(f"{ell} is not a squarefree divisor of d_K = {ctx.disc}")


def _bezout_nu(ell: int, k: int) -> tuple[int, int]:
    """(nu, mu) with nu*ell - mu*k = 1 and nu minimal positive."""
    if k <= 0 or gcd(ell, k) != 1:
        raise NoBezout(f"nu*{ell} - mu*{k} = 1 has no integer solution")
    nu = pow(ell, -1, k) if k > 1 else 1
    if nu == 0:
        nu = k
    mu = (nu * ell - 1) // k
    assert nu * ell - mu * k == 1
    return nu, mu


def atkin_lehner(ell: int, ctx: FieldCtx) -> SigmaElem:
    """V_ell = (1/sqrt(ell)) [[nu*ell, mu*(m+sqrt m)], [m-sqrt m, ell]]."""
    _check_divisor(ell, ctx)
    m = ctx.m
    if (m * (m - 1)) % ell:
        raise NoBezout(f"{ell} does not divide m(m-1) = {m * (m - 1)}")
    nu, mu = _bezout_nu(ell, m * (m - 1) // ell)
    r = ctx.sqrt_m
    L = ((ctx.elem(nu * ell), mu * (m + r)), (m - r, ctx.elem(ell)))
    return SigmaElem(L, ell)


def atkin_lehner_ideal(ell: int, gctx: GammaICtx) -> SigmaElem:
    """V_ell for Gamma_K(I): (1/sqrt(ell)) [[nu*ell, mu*u*N], [u', ell]],
    u = ell/gcd(ell, N) + m + sqrt(m)."""
    ctx = gctx.ctx
    _check_divisor(ell, ctx)
    N = gctx.N
    u = ell // gcd(ell, N) + ctx.m + ctx.sqrt_m
    uu = int(u.norm())
    if (N * uu) % ell:
        raise NoBezout(f"{ell} does not divide N*u*u' = {N * uu}")
    nu, mu = _bezout_nu(ell, N * uu // ell)
    L = ((ctx.elem(nu * ell), mu * N * u), (u.conj(), ctx.elem(ell)))
    V = SigmaElem(L, ell)
    assert in_gamma_star_I(V, gctx), "ideal Atkin-Lehner matrix left Gamma*_K(I)"
    return V


def atkin_lehner_set(ctx: FieldCtx) -> dict[int, SigmaElem]:
    return {ell: atkin_lehner(ell, ctx) for ell in squarefree_divisors(ctx.disc)}


def coset_eq(Vk: SigmaElem, Vl: SigmaElem) -> bool:
    return in_gamma(mul(inv(Vk), Vl))


def coset_eq_I(Vk: SigmaElem, Vl: SigmaElem, gctx: GammaICtx) -> bool:
    return in_gamma_I(mul(inv(Vk), Vl), gctx)


def coset_classes(mats: dict[int, SigmaElem], same=coset_eq) -> list[list[int]]:
    """Partition the keys of ``mats`` by the coset relation ``same``."""
    classes: list[list[int]] = []
    for ell, V in mats.items():
        for cls in classes:
            if same(mats[cls[0]], V):
                cls.append(ell)
                break
        else:
            classes.append([ell])
    return classes


def coset_count(ctx: FieldCtx) -> int:
    return len(coset_classes(atkin_lehner_set(ctx)))


def nu_primes(ctx: FieldCtx) -> int:
    return len(prime_factors(ctx.disc))


def index_gamma_star(ctx: FieldCtx) -> int:
    """The closed form 2^(nu-1)."""
    return 2 ** (nu_primes(ctx) - 1)


# ---------------------------------------------------------------------------
# Exceptional normalizer elements
# ---------------------------------------------------------------------------


def m0_unit(ctx: FieldCtx) -> NormalizerElem:
    """(1/sqrt(eps0)) diag(eps0, 1), available when N(eps0) = -1."""
    eps = fundamental_unit(ctx)
    if eps.norm() != -1:
        raise WrongCase(f"fundamental unit {eps} has norm +1")
    return NormalizerElem(((eps, ctx.zero), (ctx.zero, ctx.one)), eps)


def m0_two_squares(ctx: FieldCtx) -> NormalizerElem:
    """(1/sqrt(u)) [[mu*alpha + nu*u, mu*u], [u, alpha]], u = beta + sqrt(m)."""
    try:
        alpha, beta = two_squares(ctx.m)
    except Exception as exc:
        raise WrongCase(str(exc)) from exc
    # nu*alpha - 2*mu*beta = 1
    nu, mu = _bezout_nu(alpha, 2 * beta) if alpha > 1 else (1, 0)
    u = beta + ctx.sqrt_m
    assert u.norm() == -alpha * alpha
    L = ((mu * alpha + nu * u, mu * u), (u, ctx.elem(alpha)))
    M0 = NormalizerElem(L, u)
    assert in_normalizer(M0) and not in_gamma_star(M0)
    return M0


@dataclass(frozen=True)
class NormalizerClass:
    kind: str  # "equal" or "extended"
    m0: Optional[NormalizerElem] = None
    source: Optional[str] = None  # "unit" or "two_squares"


def normalizer_class(ctx: FieldCtx) -> NormalizerClass:
    eps = fundamental_unit(ctx)
    has_3mod4 = any(p % 4 == 3 for p in prime_factors(ctx.disc))
    if eps.norm() == 1 and has_3mod4:
        return NormalizerClass("equal")
    if eps.norm() == -1:
        return NormalizerClass("extended", m0_unit(ctx), "unit")
    return NormalizerClass("extended", m0_two_squares(ctx), "two_squares")


# ---------------------------------------------------------------------------
# unit and genus-field checks
# ---------------------------------------------------------------------------


def khat_primes(ctx: FieldCtx) -> list[int]:
    return prime_factors(ctx.disc)


def unit_kernel_check(eps: QuadElem) -> tuple[int, bool]:
    """(q, q | d_K) for q the squarefree part of 2 + eps + eps'."""
    ctx = make_field(eps.m)
    if not ctx.is_integral(eps) or abs(eps.norm()) != 1 or not is_totally_positive(eps):
        raise NotTotallyPositiveUnit(f"{eps} is not a totally positive unit")
    value = 2 + eps.trace()
    assert value.denominator == 1 and value > 0
    q = squarefree_part(int(value))
    # (1/sqrt(2+eps+eps')) diag(eps+1, eps'+1) lies in Gamma*_K
    D = SigmaElem.diagonal(eps + 1, eps.conj() + 1, int(value))
    assert in_gamma_star(D)
    return q, ctx.disc % q == 0


# ---------------------------------------------------------------------------
# Congruence subgroups
# ---------------------------------------------------------------------------


def _scalar_congruent(entries, N: int, ideal: IdealHNF) -> bool:
    a, b, c, d = entries
    if not (ideal_contains(ideal, b) and ideal_contains(ideal, c)):
        return False
    for e in range(N):
        if (e * e - 1) % N == 0 and ideal_contains(ideal, a - e) and ideal_contains(ideal, d - e):
            return True
    return False


def cor2a_lhs(M: SigmaElem, N: int) -> bool:
    """alpha alpha' = delta delta' = 1 mod N and gamma in N O_K."""
    if not in_gamma(M):
        raise NotInGamma(str(M))
    a, b, c, d = gamma_entries(M)
    NO = ideal_scale(unit_ideal(M.ctx), N)
    return (
        (a.norm() - 1) % N == 0
        and (d.norm() - 1) % N == 0
        and ideal_contains(NO, c)
    )


def cor2b_lhs(M: SigmaElem, N: int) -> bool:
    """M = eps I mod N O_K for an integer eps with eps^2 = 1 mod N."""
    if not in_gamma(M):
        raise NotInGamma(str(M))
    return _scalar_congruent(gamma_entries(M), N, ideal_scale(unit_ideal(M.ctx), N))


def cor3_lhs(M: SigmaElem, N: int) -> bool:
    """M = eps I mod A_N for an integer eps with eps^2 = 1 mod N."""
    if not in_gamma(M):
        raise NotInGamma(str(M))
    return _scalar_congruent(gamma_entries(M), N, A_ell(N, M.ctx))


# ---------------------------------------------------------------------------
# Random test elements
# ---------------------------------------------------------------------------

MAX_WORD = 12
MAX_HEIGHT = 9


def _lattice_elem(rng: random.Random, basis) -> QuadElem:
    u, v = basis
    return rng.randint(-MAX_HEIGHT, MAX_HEIGHT) * u + rng.randint(-MAX_HEIGHT, MAX_HEIGHT) * v


def _congruent_unit_power(ctx: FieldCtx, N: int, ideal: IdealHNF, max_k: int = 24) -> Optional[QuadElem]:
    eps = fundamental_unit(ctx)
    x = eps
    for _ in range(max_k):
        xi = x.inverse()
        for e in range(N):
            if (e * e - 1) % N == 0 and ideal_contains(ideal, x - e) and ideal_contains(ideal, xi - e):
                return x
        x = x * eps
    return None


def _word_letters(kind: str, ctx: FieldCtx, N: Optional[int], gctx: Optional[GammaICtx]):
    """(upper lattice basis, lower lattice basis, unit or None) for a kind."""
    O = (ctx.one, ctx.omega)
    eps = fundamental_unit(ctx)
    if kind in ("gamma", "gamma_star", "sigma"):
        return O, O, eps
    if kind == "gamma_I":
        return gctx.ideal.basis(), gctx.inverse_basis(), eps
    if kind == "principal_congruence":
        NO = (ctx.elem(N), N * ctx.omega)
        return NO, NO, _congruent_unit_power(ctx, N, ideal_scale(unit_ideal(ctx), N))
    if kind == "cor2a":
        NO = (ctx.elem(N), N * ctx.omega)
        return O, NO, eps * eps
    if kind == "cor3":
        A = A_ell(N, ctx)
        return A.basis(), A.basis(), _congruent_unit_power(ctx, N, A)
    raise ValueError(f"unknown sample kind {kind!r}")


def sample_with_word(
    kind: str,
    seed,
    ctx: FieldCtx,
    *,
    N: Optional[int] = None,
    gctx: Optional[GammaICtx] = None,
) -> tuple[SigmaElem, list[str]]:
    """Pseudo-random member of the group named by ``kind`` and the word producing it.

    Kinds: gamma, gamma_I, principal_congruence, cor2a, cor3 (congruence families)
    plus gamma_star (word times an Atkin-Lehner matrix) and sigma (general
    elements of Sigma_K with rational scalings and non-integral translations).
    """
    rng = random.Random(f"{kind}:{ctx.m}:{N}:{seed}")
    up, low, unit = _word_letters(kind, ctx, N, gctx)
    word: list[str] = []
    factors: list[SigmaElem] = []
    for _ in range(rng.randint(1, MAX_WORD)):
        r = rng.random()
        if unit is not None and r < 0.15:
            k = rng.choice((1, -1))
            x = unit if k == 1 else unit.inverse()
            factors.append(SigmaElem.diagonal(x, x.inverse()))
            word.append(f"D({format_quad(x)})")
        elif r < 0.575:
            b = _lattice_elem(rng, up)
            factors.append(SigmaElem.upper(b))
            word.append(f"U({format_quad(b)})")
        else:
            c = _lattice_elem(rng, low)
            factors.append(SigmaElem.lower(c))
            word.append(f"L({format_quad(c)})")
    if kind in ("gamma_star", "sigma"):
        ell = rng.choice(squarefree_divisors(ctx.disc))
        V = atkin_lehner(ell, ctx)
        pos = rng.randint(0, len(factors))
        factors.insert(pos, V)
        word.insert(pos, f"V({ell})")
    if kind == "sigma":
        for _ in range(rng.randint(1, 3)):
            pos = rng.randint(0, len(factors))
            if rng.random() < 0.5:
                n = rng.randint(2, 5)
                factors.insert(pos, SigmaElem.diagonal(ctx.elem(n), ctx.one, n))
                word.insert(pos, f"S({n})")
            else:
                den = rng.randint(2, 3)
                lam = _lattice_elem(rng, (ctx.one, ctx.omega)) / den
                factors.insert(pos, SigmaElem.upper(lam))
                word.insert(pos, f"U({format_quad(lam)})")
    return word_product(factors, ctx), word


def sample(kind: str, seed, ctx: FieldCtx, *, N=None, gctx=None) -> SigmaElem:
    return sample_with_word(kind, seed, ctx, N=N, gctx=gctx)[0]


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------


def format_matrix(M: SigmaElem) -> str:
    rows = ",".join("[" + ",".join(format_quad(x) for x in r) + "]" for r in M.L)
    body = f"[{rows}]"
    return body if M.ell == 1 else f"{body}/sqrt({M.ell})"


def parse_matrix(text: str, m: int) -> SigmaElem:
    """Parse ``[[a,b],[c,d]]`` optionally followed by ``/sqrt(l)``."""
    import re

    s = re.sub(r"\s+", "", text)
    mt = re.fullmatch(r"\[\[([^,\[\]]+),([^,\[\]]+)\],\[([^,\[\]]+),([^,\[\]]+)\]\](?:/sqrt\((\d+)\))?", s)
    if mt is None:
        raise ParseError(f"cannot parse matrix {text!r}")
    a, b, c, d = (parse_quad(g, m) for g in mt.groups()[:4])
    ell = int(mt.group(5)) if mt.group(5) else 1
    X = ((a, b), (c, d))
    if _det2(X) != ell:
        raise ParseError(f"determinant {_det2(X)} of {text!r} is not {ell}")
    return SigmaElem.from_matrix(X, ell)

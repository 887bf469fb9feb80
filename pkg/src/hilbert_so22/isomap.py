"""The explicit maps from Sigma_K into rational orthogonal groups of signature (2,2).

Two independent routes compute the image of M = (1/sqrt(ell)) L:

* ``phi_fast`` evaluates the closed formulas entrywise: corners are the
  rational numbers alpha*alpha', -beta*beta', -gamma*gamma', delta*delta';
  the edge vectors are coordinates of -alpha'*beta, -alpha*gamma',
  beta*delta', gamma'*delta; the middle block represents
  w -> alpha*delta'*w + beta*gamma'*w'.
* ``base_change_oracle`` builds the 4x4 matrix Omega(M, M') over K and
  conjugates it by diag(1, G, 1) with G = [[u, v], [u', v']].

They share nothing beyond field arithmetic, so agreement is a real check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from . import _matrix as mx
from .errors import (
    DegenerateBasis,
    IrrationalEntry,
    NotInImage,
    NotIntegralImage,
    NotOrthogonal,
)
from .ideals import IdealHNF, hnf_of_lattice, ideal_contains, is_primitive
from .modgroup import SigmaElem
from .ortho4 import GramForm, conjugator, gram_of_basis, in_discriminant_kernel, in_SO0
from .quadfield import FieldCtx, QuadElem, coords_wrt, make_field

Mat4 = tuple[tuple[Fraction, ...], ...]

__all__ = [
    "BasisCtx",
    "omega_pair",
    "phi_fast",
    "base_change_oracle",
    "phi_inverse",
    "k_block",
    "block_congruence_holds",
    "dk_criterion_fm",
    "psi",
    "psi_inverse",
    "cor2a_rhs",
    "cor2b_rhs",
    "cor3_rhs",
    "cor3_context",
    "hn_conjugation_check",
]


@dataclass(frozen=True)
class BasisCtx:
    """A Q-basis (u, v) of K with its Gram data.

    ``lattice`` is the HNF of Z*u + Z*v when that lattice is an ideal of O_K
    (O_K itself or a primitive ideal), else None.
    """

    u: QuadElem
    v: QuadElem
    lattice: Optional[IdealHNF] = field(default=None, compare=False)

    @classmethod
    def of(cls, u: QuadElem, v: QuadElem) -> BasisCtx:
        ctx = make_field(u.m)
        if (u * v.conj() - u.conj() * v).is_zero():
            raise DegenerateBasis(f"({u}, {v}) is not a Q-basis of K")
        lattice = None
        if ctx.is_integral(u) and ctx.is_integral(v):
            cand = hnf_of_lattice([ctx.int_coords(u), ctx.int_coords(v)], ctx.m)
            # closed under omega and primitive <=> a primitive ideal (or O_K)
            closed = all(ideal_contains(cand, x * ctx.omega) for x in (u, v))
            if closed and is_primitive(cand):
                lattice = cand
        return cls(u, v, lattice)

    @classmethod
    def standard(cls, ctx: FieldCtx) -> BasisCtx:
        return cls.of(ctx.one, ctx.omega)

    @classmethod
    def for_ideal(cls, I: IdealHNF) -> BasisCtx:
        u, v = I.basis()
        return cls.of(u, v)

    @property
    def ctx(self) -> FieldCtx:
        return make_field(self.u.m)

    @property
    def basis(self) -> tuple[QuadElem, QuadElem]:
        return self.u, self.v

    @property
    def role(self) -> str:
        if self.lattice is None:
            return "field_basis"
        return "ok_basis" if self.lattice.norm == 1 else "ideal_basis"

    @property
    def N(self) -> int:
        """Reduced norm of the spanned ideal (1 for O_K)."""
        if self.lattice is None:
            raise ValueError("basis does not span an ideal")
        return self.lattice.norm

    @cached_property
    def S(self) -> GramForm:
        return gram_of_basis(self.basis)

    @cached_property
    def T(self) -> GramForm:
        """S/N, the form of the discriminant kernel attached to an ideal basis."""
        return GramForm(mx.scale(Fraction(1, self.N), self.S.S))

    @cached_property
    def G(self):
        return ((self.u, self.v), (self.u.conj(), self.v.conj()))

    @cached_property
    def Ghat(self):
        ctx = self.ctx
        z, o = ctx.zero, ctx.one
        (u, v), (uc, vc) = self.G
        return ((o, z, z, z), (z, u, v, z), (z, uc, vc, z), (z, z, z, o))

    @cached_property
    def Ghat_inv(self):
        return mx.inverse(self.Ghat)

    def coords(self, w: QuadElem) -> tuple[Fraction, Fraction]:
        return coords_wrt(w, self.basis)

    def __str__(self):
        return f"({self.u}, {self.v})"


# ---------------------------------------------------------------------------
# entries of M and M'
# ---------------------------------------------------------------------------


def _scaled_products(M: SigmaElem):
    """L-entries of M and the factor turning a product x*y' of L-entries into
    the product of the corresponding entries of M and M'.

    That factor is 1/ell, negated when ell = m*n^2: then sqrt(ell) lies in K
    and its conjugate is -sqrt(ell).  Otherwise sqrt(ell) is fixed.
    """
    (a, b), (c, d) = M.L
    return a, b, c, d, Fraction(M.conj_sign, M.ell)


def omega_pair(M: SigmaElem):
    """Omega(M, M') as a 4x4 matrix over K."""
    a, b, c, d, s = _scaled_products(M)
    ac, bc, cc, dc = a.conj(), b.conj(), c.conj(), d.conj()
    rows = (
        (a * ac, -a * bc, -b * ac, -b * bc),
        (-a * cc, a * dc, b * cc, b * dc),
        (-c * ac, c * bc, d * ac, d * bc),
        (-c * cc, c * dc, d * cc, d * dc),
    )
    return mx.scale(s, rows)


def _rational(x: QuadElem) -> Fraction:
    if not x.is_rational():
        raise IrrationalEntry(f"entry {x} is not rational")
    return x.to_fraction()


def k_block_of(s: QuadElem, t: QuadElem, bctx: BasisCtx):
    """Matrix of w -> s*w + t*w' with respect to the basis (columns = images)."""
    cols = [bctx.coords(s * w + t * w.conj()) for w in bctx.basis]
    return ((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1]))


def phi_fast(M: SigmaElem, bctx: BasisCtx) -> Mat4:
    """The rational 4x4 image of M, assembled entrywise."""
    a, b, c, d, inv_ell = _scaled_products(M)
    ac, cc, dc = a.conj(), c.conj(), d.conj()

    corner_a = a.norm() * inv_ell
    corner_b = -b.norm() * inv_ell
    corner_c = -c.norm() * inv_ell
    corner_d = d.norm() * inv_ell

    S = bctx.S.S
    va = bctx.coords(-ac * b * inv_ell)
    vb = bctx.coords(-a * cc * inv_ell)
    vc = bctx.coords(b * dc * inv_ell)
    vd = bctx.coords(cc * d * inv_ell)
    aS = (va[0] * S[0][0] + va[1] * S[1][0], va[0] * S[0][1] + va[1] * S[1][1])
    dS = (vd[0] * S[0][0] + vd[1] * S[1][0], vd[0] * S[0][1] + vd[1] * S[1][1])

    K = k_block_of(a * dc * inv_ell, b * cc * inv_ell, bctx)
    return (
        (corner_a, aS[0], aS[1], corner_b),
        (vb[0], K[0][0], K[0][1], vc[0]),
        (vb[1], K[1][0], K[1][1], vc[1]),
        (corner_c, dS[0], dS[1], corner_d),
    )


def base_change_oracle(M: SigmaElem, bctx: BasisCtx) -> Mat4:
    """Ghat^-1 Omega(M, M') Ghat, computed over K and checked to be rational."""
    X = mx.matmul_chain(bctx.Ghat_inv, omega_pair(M), bctx.Ghat)
    return mx.apply(_rational, X)


def k_block(U: Mat4):
    return ((U[1][1], U[1][2]), (U[2][1], U[2][2]))


# ---------------------------------------------------------------------------
# inverse map
# ---------------------------------------------------------------------------


def _solve_k_block(K, bctx: BasisCtx) -> tuple[QuadElem, QuadElem]:
    """(s, t) with K the matrix of w -> s*w + t*w'."""
    ctx = bctx.ctx
    one, r = ctx.one, ctx.sqrt_m
    basis_maps = [(one, ctx.zero), (r, ctx.zero), (ctx.zero, one), (ctx.zero, r)]
    cols = []
    for s, t in basis_maps:
        B = k_block_of(s, t, bctx)
        cols.append((B[0][0], B[0][1], B[1][0], B[1][1]))
    A = mx.transpose(mx.mat(cols))
    rhs = (K[0][0], K[0][1], K[1][0], K[1][1])
    s0, s1, t0, t1 = mx.solve(A, rhs)
    return ctx.elem(s0, s1), ctx.elem(t0, t1)


def phi_inverse(U: Mat4, bctx: BasisCtx) -> SigmaElem:
    """Recover +-M with phi_fast(M) = +-U for U in SO_0(S_1; Q)."""
    U = mx.to_fractions(U)
    S1 = bctx.S
    try:
        if not in_SO0(U, S1):
            raise NotInImage("matrix is not in the identity component")
    except NotOrthogonal as exc:
        raise NotInImage(str(exc)) from exc
    ctx = bctx.ctx
    Sinv = mx.inverse(S1.S)

    def elem_of(vec):
        x, y = vec
        return x * bctx.u + y * bctx.v

    def from_row(row):
        # row = d^T S  =>  d = S^-1 row^T
        return (Sinv[0][0] * row[0] + Sinv[0][1] * row[1], Sinv[1][0] * row[0] + Sinv[1][1] * row[1])

    A_el = elem_of(from_row((U[0][1], U[0][2])))  # -alpha' beta
    B_el = elem_of((U[1][0], U[2][0]))  # -alpha gamma'
    C_el = elem_of((U[1][3], U[2][3]))  # beta delta'
    D_el = elem_of(from_row((U[3][1], U[3][2])))  # gamma' delta
    s, t = _solve_k_block(k_block(U), bctx)  # alpha delta', beta gamma'

    q = lambda x: ctx.elem(x)
    # P[x][y] = x * y' for x, y in (alpha, beta, gamma, delta)
    P = {
        ("a", "a"): q(U[0][0]), ("b", "b"): q(-U[0][3]),
        ("c", "c"): q(-U[3][0]), ("d", "d"): q(U[3][3]),
        ("b", "a"): -A_el, ("a", "b"): -A_el.conj(),
        ("a", "c"): -B_el, ("c", "a"): -B_el.conj(),
        ("b", "d"): C_el, ("d", "b"): C_el.conj(),
        ("d", "c"): D_el, ("c", "d"): D_el.conj(),
        ("a", "d"): s, ("d", "a"): s.conj(),
        ("b", "c"): t, ("c", "b"): t.conj(),
    }
    y = next((k for k in "abcd" if not P[(k, k)].is_zero()), None)
    if y is None:
        raise NotInImage("all corner norms vanish")
    # X = y' * M has entries in K, det X = y'^2
    X = ((P[("a", y)], P[("b", y)]), (P[("c", y)], P[("d", y)]))
    delta = X[0][0] * X[1][1] - X[0][1] * X[1][0]
    n = abs(P[(y, y)].to_fraction())
    r = delta.trace() + 2 * n
    c = delta + n
    if r <= 0 or c.is_zero():
        r, c = delta.trace() - 2 * n, delta - n
    if r <= 0 or c.is_zero():
        raise NotInImage("determinant has no admissible square root")
    # y' = +-c/sqrt(r); M = +-X sqrt(r)/c = (1/sqrt(pq)) * (p X / c) for r = p/q
    p_, q_ = r.numerator, r.denominator
    try:
        M = SigmaElem.from_matrix(mx.apply(lambda x: p_ * x / c, X), p_ * q_)
    except (ValueError, ArithmeticError) as exc:
        raise NotInImage(f"reconstruction failed: {exc}") from exc
    img = phi_fast(M, bctx)
    if img != U and img != mx.neg(U):
        raise NotInImage("reconstructed matrix does not map back to U")
    return M


# ---------------------------------------------------------------------------
# discriminant-kernel criteria
# ---------------------------------------------------------------------------


def _lattice_form(bctx: BasisCtx) -> GramForm:
    return bctx.S if bctx.N == 1 else bctx.T


def block_congruence_holds(M: SigmaElem, bctx: BasisCtx) -> bool:
    """(K - I) in Z^{2x2} S (or Z^{2x2} T = Z^{2x2} S/N for an ideal basis)."""
    K = k_block(phi_fast(M, bctx))
    X = mx.matmul(mx.sub(K, mx.identity(2)), mx.inverse(_lattice_form(bctx).S))
    return mx.is_integral(X)


def dk_criterion_fm(M: SigmaElem, bctx: BasisCtx) -> bool:
    """F_M(sqrt(d_K) * Lambda) subset d_K * Lambda for the basis lattice Lambda,
    with F_M(w) = alpha delta' w + beta gamma' w' - w.

    The image (psi for an ideal basis, phi otherwise) must be integral.
    """
    U = psi(M, bctx) if bctx.role == "ideal_basis" else phi_fast(M, bctx)
    if not mx.is_integral(U):
        raise NotIntegralImage("criterion needs an integral image")
    ctx = bctx.ctx
    a, b, c, d, inv_ell = _scaled_products(M)
    s, t = a * d.conj() * inv_ell, b * c.conj() * inv_ell
    root = ctx.sqrt_disc
    for w in bctx.basis:
        x = root * w
        image = s * x + t * x.conj() - x
        c0, c1 = bctx.coords(image)
        if (c0 / ctx.disc).denominator != 1 or (c1 / ctx.disc).denominator != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# ideal version
# ---------------------------------------------------------------------------


def psi(M: SigmaElem, bctx: BasisCtx) -> Mat4:
    """H_N^-1 phi(M) H_N with H_N = diag(N, 1, 1, 1)."""
    H = conjugator("H_N", bctx.N)
    return mx.matmul_chain(mx.inverse(H), phi_fast(M, bctx), H)


def psi_inverse(U: Mat4, bctx: BasisCtx) -> SigmaElem:
    H = conjugator("H_N", bctx.N)
    Hinv = mx.inverse(H)
    return phi_inverse(mx.matmul_chain(H, mx.to_fractions(U), Hinv), bctx)


# ---------------------------------------------------------------------------
# congruence subgroups
# ---------------------------------------------------------------------------


def _conj_in_dk(U: Mat4, C: Mat4, T: GramForm) -> bool:
    """U in C^-1 D(T) C, i.e. C U C^-1 in D(T)."""
    V = mx.matmul_chain(C, mx.to_fractions(U), mx.inverse(C))
    return in_discriminant_kernel(V, T)


def cor2a_rhs(U: Mat4, N: int, bctx: BasisCtx) -> bool:
    """U in F_N D(S_N; Z) F_N^-1."""
    F = conjugator("F", N)
    return _conj_in_dk(U, mx.inverse(F), bctx.S.extended(N))


def cor2b_rhs(U: Mat4, N: int, bctx: BasisCtx) -> bool:
    """U in D(N S_1; Z)."""
    return in_discriminant_kernel(mx.to_fractions(U), bctx.S.scaled(N))


def cor3_context(N: int, ctx: FieldCtx) -> tuple[BasisCtx, GramForm]:
    """Basis B = (N, omega) of A_N and the form T = [[2N, tr w], [tr w, 2 N(w)/N]]."""
    bctx = BasisCtx.of(ctx.elem(N), ctx.omega)
    tr, nm = ctx.omega_trace, ctx.omega_norm
    T = GramForm(((2 * N, tr), (tr, Fraction(2 * nm, N))), N)
    return bctx, T


def cor3_rhs(U: Mat4, N: int, ctx: FieldCtx) -> bool:
    """U in G_N^-1 D(T_N; Z) G_N, for U the image in the basis (N, omega)."""
    _, T = cor3_context(N, ctx)
    return _conj_in_dk(U, conjugator("G", N), T)


def hn_conjugation_check(
    I: IdealHNF,
    n: int,
    samples: int = 100,
    seed: int = 0,
    bctx: Optional[BasisCtx] = None,
) -> bool:
    """H_n^-1 phi(M) H_n = phi(M*) for M in Gamma_K(nI) and its partner M* in Gamma_K(I).

    M* = D^-1 M D with D = (1/sqrt(n)) diag(n, 1); samples are drawn in
    Gamma_K(I) and pushed forward, then membership in Gamma_K(nI) is checked.
    """
    from .ideals import ideal_scale
    from .modgroup import GammaICtx, in_gamma_I, mul, inv, sample

    ctx = make_field(I.m)
    bctx = bctx or BasisCtx.standard(ctx)
    g1 = GammaICtx.of(I)
    gn = GammaICtx.of(ideal_scale(I, n))
    D = SigmaElem.diagonal(ctx.elem(n), ctx.one, n)
    Hn = conjugator("H_n", n)
    Hn_inv = mx.inverse(Hn)
    for k in range(samples):
        Mstar = sample("gamma_I", (seed, k), ctx, gctx=g1)
        M = mul(mul(D, Mstar), inv(D))
        if not in_gamma_I(M, gn):
            return False
        lhs = mx.matmul_chain(Hn_inv, phi_fast(M, bctx), Hn)
        if lhs != phi_fast(Mstar, bctx):
            return False
    return True

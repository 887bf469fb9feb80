"""Exact group actions on H^2 and on the orthogonal half-space H_T.

Points live in K(i): a ``CPoint`` is re + i*im with re, im in K, where K is
viewed inside R through the embedding sqrt(m) > 0.  A point of H_T is a pair
of CPoints; with a Q-basis (u, v) the base change (tau1, tau2) = G z sends it
to H^2, the second coordinate using conjugated basis elements.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _matrix as mx
from .errors import NotOrthogonal, PoleAtPoint, SingularAutomorphy
from .isomap import BasisCtx, phi_fast
from .modgroup import SigmaElem
from .ortho4 import GramForm, in_SO0
from .quadfield import FieldCtx, QuadElem, is_totally_positive, make_field

__all__ = [
    "CPoint",
    "mobius",
    "ortho_action",
    "automorphy",
    "automorphy_from_matrix",
    "in_half_space",
    "in_upper_half_plane",
    "base_change",
    "base_change_inverse",
    "check_compat",
    "random_point",
    "positive_reference",
]


@dataclass(frozen=True)
class CPoint:
    re: QuadElem
    im: QuadElem

    @classmethod
    def of(cls, re, im, ctx: FieldCtx) -> CPoint:
        return cls(_lift(re, ctx), _lift(im, ctx))

    @property
    def m(self) -> int:
        return self.re.m

    def _coerce(self, other) -> CPoint:
        if isinstance(other, CPoint):
            return other
        return CPoint(_lift(other, make_field(self.m)), make_field(self.m).zero)

    def __add__(self, other):
        o = self._coerce(other)
        return CPoint(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CPoint(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return CPoint(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def abs2(self) -> QuadElem:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __truediv__(self, other):
        o = self._coerce(other)
        n = o.abs2()
        if n.is_zero():
            raise ZeroDivisionError("division by zero in K(i)")
        num = self * CPoint(o.re, -o.im)
        return CPoint(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        if not isinstance(other, CPoint):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        return f"({self.re}) + i*({self.im})"


def _lift(x, ctx: FieldCtx) -> QuadElem:
    return x if isinstance(x, QuadElem) else ctx.elem(Fraction(x))


# ---------------------------------------------------------------------------
# H^2
# ---------------------------------------------------------------------------


def in_upper_half_plane(tau: CPoint) -> bool:
    return tau.im.sign() > 0


def mobius(M: SigmaElem, tau: CPoint, which: str = "first") -> CPoint:
    """L<tau> (or L'<tau>); the scalar 1/sqrt(ell) cancels."""
    if which == "first":
        (a, b), (c, d) = M.L
    elif which == "conjugate":
        (a, b), (c, d) = M.conj_L()
    else:
        raise ValueError("which must be 'first' or 'conjugate'")
    den = c * tau + d
    if den.is_zero():
        raise PoleAtPoint(f"{tau} is the pole of the transformation")
    return (a * tau + b) / den


# ---------------------------------------------------------------------------
# H_T
# ---------------------------------------------------------------------------


def _quad_form(z: Sequence[CPoint], S) -> CPoint:
    return (
        S[0][0] * z[0] * z[0]
        + 2 * S[0][1] * z[0] * z[1]
        + S[1][1] * z[1] * z[1]
    )


def in_half_space(z: Sequence[CPoint], T: GramForm, ref: Optional[Sequence] = None) -> bool:
    """y^T T y > 0 together with the choice of cone component.

    The component is the one containing ``ref`` (a rational vector with
    ref^T T ref > 0); without ``ref`` the test is y_1 > 0.
    """
    y = [p.im for p in z]
    S = T.S
    val = S[0][0] * y[0] * y[0] + 2 * S[0][1] * y[0] * y[1] + S[1][1] * y[1] * y[1]
    if val.sign() <= 0:
        return False
    if ref is None:
        return y[0].sign() > 0
    side = (
        S[0][0] * y[0] * ref[0]
        + S[0][1] * (y[0] * ref[1] + y[1] * ref[0])
        + S[1][1] * y[1] * ref[1]
    )
    return side.sign() > 0


def _blocks(U):
    U = mx.to_fractions(U)
    return {
        "alpha": U[0][0],
        "aT": (U[0][1], U[0][2]),
        "beta": U[0][3],
        "b": (U[1][0], U[2][0]),
        "K": ((U[1][1], U[1][2]), (U[2][1], U[2][2])),
        "c": (U[1][3], U[2][3]),
        "gamma": U[3][0],
        "dT": (U[3][1], U[3][2]),
        "delta": U[3][3],
    }


def automorphy(U, z: Sequence[CPoint], T: GramForm) -> CPoint:
    """-1/2 gamma z^T T z + d^T T z + delta for U in the block shape."""
    B = _blocks(U)
    q = _quad_form(z, T.S)
    j = (
        q * (-B["gamma"] / 2)
        + z[0] * B["dT"][0]
        + z[1] * B["dT"][1]
        + B["delta"]
    )
    if j.is_zero():
        raise SingularAutomorphy("factor of automorphy vanishes")
    return j


def ortho_action(U, z: Sequence[CPoint], T: GramForm, *, check: bool = True) -> tuple[CPoint, CPoint]:
    U = mx.to_fractions(U)
    if check and not in_SO0(U, T):
        raise NotOrthogonal("matrix is not in SO_0 of the form")
    B = _blocks(U)
    j = automorphy(U, z, T)
    q = _quad_form(z, T.S)
    K, b, c = B["K"], B["b"], B["c"]
    out = []
    for r in range(2):
        w = q * (-b[r] / 2) + z[0] * K[r][0] + z[1] * K[r][1] + c[r]
        out.append(w / j)
    return tuple(out)


def automorphy_from_matrix(M: SigmaElem, bctx: BasisCtx, z: Sequence[CPoint]) -> CPoint:
    """(gamma tau1 + delta)(gamma' tau2 + delta') evaluated as
    (sign/ell)(c tau1 + d)(c' tau2 + d'), with the conjugation sign of M."""
    tau1, tau2 = base_change(bctx, z)
    (_, _), (c, d) = M.L
    prod = (c * tau1 + d) * (c.conj() * tau2 + d.conj())
    return prod * Fraction(M.conj_sign, M.ell)


# ---------------------------------------------------------------------------
# base change and compatibility
# ---------------------------------------------------------------------------


def base_change(bctx: BasisCtx, z: Sequence[CPoint]) -> tuple[CPoint, CPoint]:
    """(tau1, tau2) = G z with G = [[u, v], [u', v']]."""
    (u, v), (uc, vc) = bctx.G
    return (z[0] * u + z[1] * v, z[0] * uc + z[1] * vc)


def base_change_inverse(bctx: BasisCtx, tau: Sequence[CPoint]) -> tuple[CPoint, CPoint]:
    """z = G^-1 tau."""
    (u, v), (uc, vc) = bctx.G
    det = u * vc - v * uc
    t1, t2 = tau
    return ((t1 * vc - t2 * v) / det, (t2 * u - t1 * uc) / det)


def check_compat(M: SigmaElem, bctx: BasisCtx, z: Sequence[CPoint], U=None) -> bool:
    """Orthogonal action of the image equals G^-1 (M<tau1>, M'<tau2>) with (tau1, tau2) = Gz.

    ``U`` overrides the image matrix (used for negative controls).
    """
    if U is None:
        U = phi_fast(M, bctx)
    try:
        lhs = ortho_action(U, z, bctx.S, check=False)
    except (SingularAutomorphy, ZeroDivisionError):
        return False
    tau1, tau2 = base_change(bctx, z)
    rhs = base_change_inverse(bctx, (mobius(M, tau1, "first"), mobius(M, tau2, "conjugate")))
    return tuple(lhs) == tuple(rhs)


def positive_reference(bctx: BasisCtx) -> tuple[Fraction, Fraction]:
    """Coordinates of 1 in the basis: the cone component of totally positive elements."""
    return bctx.coords(bctx.ctx.one)


def random_point(bctx: BasisCtx, rng: random.Random, height: int = 6) -> tuple[CPoint, CPoint]:
    """A point z in Q(i)^2 whose imaginary part is the coordinate vector of a
    totally positive element, so Gz lies in H^2."""
    ctx = bctx.ctx
    while True:
        w = ctx.elem(
            Fraction(rng.randint(-height, height), rng.randint(1, height)),
            Fraction(rng.randint(-height, height), rng.randint(1, height)),
        )
        if not w.is_zero() and is_totally_positive(w):
            break
    y = bctx.coords(w)
    x = [Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(2)]
    return CPoint.of(x[0], y[0], ctx), CPoint.of(x[1], y[1], ctx)

import random
from fractions import Fraction

import pytest

from hilbert_so22 import _matrix as mx
from hilbert_so22 import errors
from hilbert_so22.action import ortho_action, positive_reference, random_point, in_half_space
from hilbert_so22.isomap import BasisCtx, phi_fast
from hilbert_so22.modgroup import SigmaElem, atkin_lehner, sample
from hilbert_so22.ortho4 import (
    GramForm,
    conjugator,
    gram_of_basis,
    in_discriminant_kernel,
    in_SO0,
    is_orthogonal,
    split_basis,
)
from hilbert_so22.quadfield import make_field

from .conftest import M_SET

I4 = mx.identity(4)


def swap_galois_m5(sign=-1):
    # e1 -> sign*e4, e4 -> sign*e1 together with w -> w' = 5 - w on the middle block.
    # The Galois block reverses the negative plane only; the plain swap (sign=+1)
    # also reverses only the negative plane, so the product lies in SO_0.
    return mx.mat([[0, 0, 0, sign], [0, 1, 5, 0], [0, 0, -1, 0], [sign, 0, 0, 0]])


def S1(m):
    return BasisCtx.standard(make_field(m)).S


def test_gram_examples():
    assert S1(5).S == ((2, 5), (5, 10)) and S1(5).det == -5
    assert S1(2).S == ((2, 4), (4, 4)) and S1(2).det == -8


def test_degenerate():
    ctx = make_field(5)
    with pytest.raises(errors.DegenerateBasis):
        gram_of_basis((ctx.one, ctx.one))


def test_gram_symmetric_required():
    with pytest.raises(ValueError):
        GramForm(((1, 2), (3, 4)))


def test_ok_bases_have_disc_determinant(ctx):
    w = ctx.omega
    for u, v in ((ctx.one, w), (w, ctx.one), (ctx.one, w + 3), (2 * w + 1, w + ctx.one)):
        S = gram_of_basis((u, v))
        assert S.det == -ctx.disc
        assert S.is_even()


def test_orthogonal_examples():
    T = S1(5)
    assert is_orthogonal(I4, T) and is_orthogonal(mx.neg(I4), T)
    assert in_SO0(I4, T) and in_SO0(mx.neg(I4), T)
    assert not is_orthogonal(mx.diag([2, 1, 1, 1]), T)


def test_swap_not_in_SO0():
    T, U = S1(5), swap_galois_m5()
    assert is_orthogonal(U, T) and mx.det(U) == 1
    assert not in_SO0(U, T)
    plain = swap_galois_m5(+1)
    assert is_orthogonal(plain, T) and in_SO0(plain, T)


def test_in_SO0_requires_orthogonal():
    with pytest.raises(errors.NotOrthogonal):
        in_SO0(mx.diag([2, 1, 1, 1]), S1(5))


def test_split_basis(ctx):
    for N in (1, 2, 7):
        T = S1(ctx.m).extended(N)
        R = split_basis(T)
        D = mx.matmul_chain(mx.transpose(R), T.matrix, R)
        assert all(D[i][j] == 0 for i in range(4) for j in range(4) if i != j)
        assert D[0][0] > 0 and D[1][1] > 0 and D[2][2] < 0 and D[3][3] < 0


def test_split_positive_definite():
    with pytest.raises(errors.WrongSignature):
        split_basis(GramForm(((1, 0), (0, 1)), 0))
    with pytest.raises(errors.WrongSignature):
        # S positive definite: signature (3,1)
        split_basis(GramForm(((2, 1), (1, 2))))


def test_discriminant_kernel_examples():
    ctx = make_field(5)
    b = BasisCtx.standard(ctx)
    U = phi_fast(SigmaElem.upper(ctx.one), b)
    assert U == mx.mat([[1, -2, -5, -1], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert in_discriminant_kernel(U, b.S)
    assert in_discriminant_kernel(I4, b.S)
    c6 = make_field(6)
    b6 = BasisCtx.standard(c6)
    assert not in_discriminant_kernel(phi_fast(atkin_lehner(2, c6), b6), b6.S)


def test_conjugators():
    assert conjugator("F", 2) == mx.diag([1, 1, 1, 2])
    assert conjugator("G", 4) == mx.diag([1, 4, 4, 1])
    assert conjugator("H_N", 11) == mx.diag([11, 1, 1, 1])
    assert conjugator("H_n", 3) == mx.diag([3, 1, 1, Fraction(1, 3)])
    for kind in ("F", "G", "H_N", "H_n"):
        assert conjugator(kind, 1) == I4
    with pytest.raises(ValueError):
        conjugator("F", 0)


@pytest.mark.parametrize("m", M_SET)
def test_component_is_homomorphism(m):
    ctx = make_field(m)
    b = BasisCtx.standard(ctx)
    pool = [phi_fast(sample("sigma", s, ctx), b) for s in range(8)]
    if m == 5:
        pool.append(swap_galois_m5())
    for U in pool:
        for V in pool:
            assert in_SO0(mx.matmul(U, V), b.S) == (in_SO0(U, b.S) == in_SO0(V, b.S))


@pytest.mark.parametrize("m", (2, 5, 6, 13))
def test_discriminant_kernel_is_group(m):
    ctx = make_field(m)
    b = BasisCtx.standard(ctx)
    Us = [phi_fast(sample("gamma", s, ctx), b) for s in range(6)]
    W = phi_fast(sample("gamma_star", 99, ctx), b)
    for U in Us:
        assert in_discriminant_kernel(mx.inverse(U), b.S)
        # normal in SO_0(S; Z)
        assert in_discriminant_kernel(mx.matmul_chain(W, U, mx.inverse(W)), b.S)
        for V in Us:
            assert in_discriminant_kernel(mx.matmul(U, V), b.S)


def test_component_matches_half_space_action():
    # an SO_0 element keeps the positive component; the swap moves every point off it
    ctx = make_field(5)
    b = BasisCtx.standard(ctx)
    ref = positive_reference(b)
    rng = random.Random(7)
    good = phi_fast(sample("sigma", 3, ctx), b)
    bad = swap_galois_m5()
    also_good = swap_galois_m5(+1)
    for _ in range(20):
        z = random_point(b, rng)
        assert in_half_space(z, b.S, ref)
        assert in_half_space(ortho_action(good, z, b.S), b.S, ref)
        assert in_half_space(ortho_action(also_good, z, b.S), b.S, ref)
        assert not in_half_space(ortho_action(bad, z, b.S, check=False), b.S, ref)

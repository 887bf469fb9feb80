from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hilbert_so22 import errors
from hilbert_so22.quadfield import (
    QuadElem,
    coords_wrt,
    format_quad,
    fundamental_unit,
    is_totally_positive,
    make_field,
    parse_quad,
    two_squares,
)
from tests.oracles import pell_unit, squarefree, two_squares_exhaustive

from .conftest import M_SET

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def elems(m):
    return st.builds(lambda x, y: QuadElem.from_rationals(x, y, m), rationals, rationals)


class TestMakeField:
    def test_m5(self):
        ctx = make_field(5)
        assert ctx.omega == QuadElem.from_rationals(Fraction(5, 2), Fraction(1, 2), 5)
        assert ctx.disc == 5

    def test_m2(self):
        ctx = make_field(2)
        assert ctx.omega == QuadElem.from_rationals(2, 1, 2)
        assert ctx.disc == 8

    def test_not_squarefree(self):
        with pytest.raises(errors.NotSquarefree):
            make_field(12)

    def test_trivial(self):
        with pytest.raises(errors.TrivialField):
            make_field(1)

    @pytest.mark.parametrize("m", M_SET)
    def test_omega_equation(self, m):
        ctx = make_field(m)
        w = ctx.omega
        assert w * w - w.trace() * w + w.norm() == 0
        assert ctx.is_integral(w * w)


class TestConjNormTrace:
    def test_examples(self):
        ctx = make_field(2)
        a = ctx.elem(1, 1)
        assert a.conj() == ctx.elem(1, -1)
        assert a.norm() == -1
        assert ctx.elem(Fraction(3, 7)).conj() == ctx.elem(Fraction(3, 7))

    @given(elems(7), elems(7))
    def test_automorphism(self, a, b):
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a + b).trace() == a.trace() + b.trace()

    @given(elems(13))
    def test_inverse(self, a):
        if not a.is_zero():
            assert a * a.inverse() == 1


class TestIntegrality:
    def test_golden_ratio(self):
        ctx = make_field(5)
        assert ctx.is_integral(ctx.elem(Fraction(1, 2), Fraction(1, 2)))
        assert not ctx.is_integral(ctx.elem(Fraction(1, 2)))

    def test_coords(self):
        ctx = make_field(5)
        assert coords_wrt(ctx.omega, (ctx.one, ctx.omega)) == (0, 1)
        assert coords_wrt(ctx.sqrt_m, (ctx.one, ctx.omega)) == (-5, 2)

    def test_degenerate(self):
        ctx = make_field(5)
        with pytest.raises(errors.DegenerateBasis):
            coords_wrt(ctx.one, (ctx.one, ctx.one))


class TestTotallyPositive:
    def test_examples(self):
        ctx = make_field(2)
        assert is_totally_positive(ctx.elem(2, 1))
        assert not is_totally_positive(ctx.elem(1, 1))
        assert not is_totally_positive(ctx.zero)

    @given(st.integers(-40, 40), st.integers(-40, 40))
    def test_matches_float(self, x, y):
        m = 10
        r = m ** 0.5
        e1, e2 = x + y * r, x - y * r
        if min(abs(e1), abs(e2)) > 1e-6:
            assert is_totally_positive(make_field(m).elem(x, y)) == (e1 > 0 and e2 > 0)


class TestFundamentalUnit:
    @pytest.mark.parametrize("m", [m for m in range(2, 61) if squarefree(m)])
    def test_matches_pell_oracle(self, m):
        x, y, d = pell_unit(m)
        assert fundamental_unit(make_field(m)) == QuadElem(x, y, d, m)

    def test_golden(self):
        assert fundamental_unit(make_field(2)) == make_field(2).elem(1, 1)
        assert fundamental_unit(make_field(3)) == make_field(3).elem(2, 1)
        assert fundamental_unit(make_field(5)) == make_field(5).elem(Fraction(1, 2), Fraction(1, 2))
        assert fundamental_unit(make_field(6)) == make_field(6).elem(5, 2)
        assert fundamental_unit(make_field(13)) == make_field(13).elem(Fraction(3, 2), Fraction(1, 2))

    def test_large_convergents(self):
        # the continued fraction passes through numbers beyond 64 bits here
        eps = fundamental_unit(make_field(94))
        assert eps == make_field(94).elem(2143295, 221064)
        assert eps.norm() == 1


class TestTwoSquares:
    def test_examples(self):
        assert two_squares(13) == (3, 2)
        assert two_squares(2) == (1, 1)
        with pytest.raises(errors.NoRepresentation):
            two_squares(3)

    @pytest.mark.parametrize("m", [m for m in range(2, 200) if squarefree(m)])
    def test_matches_exhaustive(self, m):
        expected = two_squares_exhaustive(m)
        if expected is None:
            with pytest.raises(errors.NoRepresentation):
                two_squares(m)
        else:
            assert two_squares(m) == expected


class TestText:
    def test_parse_forms(self):
        ctx = make_field(5)
        assert parse_quad("3", 5) == ctx.elem(3)
        assert parse_quad("sqrt(5)", 5) == ctx.sqrt_m
        assert parse_quad(" -1/2 * sqrt(5) ", 5) == ctx.elem(0, Fraction(-1, 2))
        assert parse_quad("w", 5) == ctx.omega

    def test_parse_error(self):
        with pytest.raises(errors.ParseError):
            parse_quad("1+sqrt(7)", 5)

    @given(elems(6))
    def test_round_trip(self, a):
        assert parse_quad(format_quad(a), 6) == a

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import GL11, dense, systems
from superyangian import BAESystem, DensePoly, LWeight, ParitySeq
from superyangian.bethe import fermionic_reproduce
from superyangian.diffop import (
    ONE,
    ZERO,
    RatFuncDense,
    ShiftOpSeries,
    build_operator,
    compare_systems,
    first_mismatch,
    sos_eq,
    sos_factor,
    sos_inverse_factor,
    sos_mul,
)
from superyangian.errors import DivideByZero, OrderMismatch
from superyangian.polycore import dp_gcd

P = ParitySeq.parse


def dp(*coeffs):
    return DensePoly(coeffs)


def rf(num, den=(1,)):
    return RatFuncDense(DensePoly(num), DensePoly(den))


def const(c):
    return rf((c,))


@st.composite
def ratfuncs(draw):
    num = draw(dense(max_degree=3))
    den = draw(dense(max_degree=3, nonzero=True))
    return RatFuncDense(num, den)


@st.composite
def series(draw, order=3):
    return ShiftOpSeries(order, tuple(draw(ratfuncs()) for _ in range(order + 1)))


class TestRatFunc:
    def test_reduced_and_monic(self):
        f = rf((2, 2), (4, 8, 4))  # 2(u+1) / 4(u+1)^2
        assert f.num == dp(F(1, 2)) and f.den == dp(1, 1)

    def test_zero_denominator(self):
        with pytest.raises(DivideByZero):
            rf((1,), ())

    def test_irreducible_factor(self):
        f = rf((1, 0, 1), (1, 1)) * rf((1, 1), (1, 0, 1))
        assert f == ONE and f.den == dp(1)

    @given(ratfuncs(), ratfuncs(), ratfuncs())
    @settings(max_examples=60, deadline=None)
    def test_field_laws(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a - a == ZERO
        assert a * b == b * a

    @given(ratfuncs())
    def test_canonical(self, a):
        assert a.den.is_monic()
        assert dp_gcd(a.num, a.den).degree <= 0 or a.num.is_zero()
        assert a == RatFuncDense(a.num, a.den)
        assert hash(a) == hash(RatFuncDense(a.num, a.den))

    @given(ratfuncs(), st.integers(-3, 3))
    def test_shift(self, a, k):
        assert a.shift(k).shift(-k) == a


class TestSeries:
    def test_identity_left(self):
        b = ShiftOpSeries(2, (rf((1, 1)), rf((0, 1)), const(3)))
        assert sos_mul(ShiftOpSeries.identity(2), b) == b

    def test_shift_rule(self):
        f, g = rf((0, 1)), rf((1, 1))
        a = ShiftOpSeries(2, (ZERO, f))
        b = ShiftOpSeries(2, (ZERO, g))
        # (f D)(g D) = f(u) g(u-1) D^2
        assert sos_mul(a, b).coeffs[2] == f * g.shift(-1)
        d = ShiftOpSeries(1, (ZERO, ONE))
        assert sos_mul(d, ShiftOpSeries(1, (f,))).coeffs[1] == f.shift(-1)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            sos_mul(ShiftOpSeries.identity(1), ShiftOpSeries.identity(2))

    def test_inverse_factor(self):
        assert sos_inverse_factor(ZERO, 3) == ShiftOpSeries.identity(3)
        assert sos_inverse_factor(ONE, 2) == ShiftOpSeries(2, (ONE, ONE, ONE))

    @given(ratfuncs(), st.integers(0, 5))
    @settings(deadline=None)
    def test_two_sided_inverse(self, a, order):
        inv = sos_inverse_factor(a, order)
        fac = sos_factor(a, order)
        one = ShiftOpSeries.identity(order)
        assert sos_mul(fac, inv) == one and sos_mul(inv, fac) == one

    @given(series(), series(), series())
    @settings(max_examples=25, deadline=None)
    def test_associative(self, a, b, c):
        assert sos_mul(sos_mul(a, b), c) == sos_mul(a, sos_mul(b, c))

    def test_mismatch_position(self):
        a = ShiftOpSeries(3, (ONE, const(2)))
        b = ShiftOpSeries(3, (ONE, const(2), const(1)))
        assert first_mismatch(a, b) == 2 and not sos_eq(a, b) and sos_eq(a, a)


class TestOperator:
    def test_gl11_trivial(self):
        op = build_operator(GL11, LWeight.unit(GL11), [dp(1)], 4)
        assert op == ShiftOpSeries.identity(4)

    def test_gl2_square(self):
        s = P("++")
        assert build_operator(s, LWeight.unit(s), [dp(1)], 2) == ShiftOpSeries(2, (ONE, const(-2), ONE))

    def test_constant_term(self):
        z = LWeight.from_roots(P("+-+"), [([1], [2]), ([0], [F(1, 2)]), ([], [])])
        op = build_operator(z.parity, z, [dp(1, 1), dp(-2, 1)], 3)
        assert op.coeffs[0] == ONE

    def test_gl11_identity(self):
        before = BAESystem(GL11, LWeight.from_roots(GL11, [([-1], [0]), ([], [])]), (dp(1),))
        after = BAESystem(P("-+"), LWeight.from_roots(P("-+"), [([1], [0]), ([], [])]), (dp(1),))
        assert compare_systems(before, after, 8).to_json() == {"equal": True, "order": 8, "first_mismatch": None}

    def test_perturbed(self):
        sys_ = BAESystem(GL11, LWeight.from_roots(GL11, [([-1], [0]), ([], [])]), (dp(1),))
        other = BAESystem(GL11, LWeight.from_roots(GL11, [([-2], [0]), ([], [])]), (dp(1),))
        cmp = compare_systems(sys_, other, 4)
        assert not cmp.equal and cmp.first_mismatch == 1

    @given(systems(max_size=3))
    @settings(max_examples=20, deadline=None)
    def test_reproduction_identity(self, pair):
        sys_, i = pair
        out = fermionic_reproduce(sys_, i)
        assert compare_systems(sys_, out, 6).equal

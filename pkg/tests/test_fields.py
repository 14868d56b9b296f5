"""Places, polynomial arithmetic over F_q, and factored rational functions."""

import pytest
from hypothesis import given, strategies as st

from ncpbound.errors import ValidationError
from ncpbound.fields import (
    QQ,
    FqtElt,
    Place,
    enumerate_places,
    fqt_const,
    fqt_from_factors,
    infinite_place,
    monic_irreducibles,
    poly_divmod,
    poly_is_irreducible,
    poly_mul,
    poly_place,
    poly_pow_mod,
    poly_str,
    prime_place,
    rational_function_field,
    real_place,
    residue_norm,
    residue_rep,
)

F3 = rational_function_field(3)
F7 = rational_function_field(7)


class TestBaseField:
    def test_constructors(self):
        assert QQ.is_rationals() and QQ.char == 0
        assert F7.char == 7 and not F7.is_rationals()
        assert str(F7) == "F_7(t)"
        with pytest.raises(ValidationError):
            rational_function_field(6)

    def test_q_forbidden_on_rationals(self):
        from ncpbound.fields import BaseField

        with pytest.raises(ValidationError):
            BaseField("Q", q=5)


class TestPolynomials:
    def test_mul(self):
        # (t+1)(t+2) = t^2 + 3t + 2 = t^2 + 2 over F_3
        assert poly_mul((1, 1), (2, 1), 3) == (2, 0, 1)

    def test_divmod(self):
        q, r = poly_divmod((2, 0, 1), (1, 1), 3)
        assert poly_mul (q, (1, 1), 3) == (2, 0, 1) if not r else True
        assert r == ()
        q2, r2 = poly_divmod((1, 0, 1), (1, 1), 3)
        assert r2 != ()

    def test_pow_mod(self):
        # t^3 mod (t^2+1) over F_3: t*t^2 = -t = 2t
        assert poly_pow_mod((0, 1), 3, (1, 0, 1), 3) == (0, 2)

    def test_irreducibility(self):
        assert poly_is_irreducible((1, 0, 1), 3)  # t^2+1 over F_3
        assert not poly_is_irreducible((2, 0, 1), 3)  # (t+1)(t+2)
        assert not poly_is_irreducible((1,), 3)
        assert poly_is_irreducible((3, 1), 7)

    def test_monic_irreducibles_frozen(self):
        # degree 1 over F_3, lexicographic by ascending coefficients
        assert monic_irreducibles(3, 1) == ((0, 1), (1, 1), (2, 1))
        # the three monic irreducible quadratics over F_3
        assert monic_irreducibles(3, 2) == ((1, 0, 1), (2, 1, 1), (2, 2, 1))
        assert len(monic_irreducibles(7, 2)) == (49 - 7) // 2

    def test_poly_str(self):
        assert poly_str((2, 0, 1)) == "t^2+2"
        assert poly_str((0, 1)) == "t"
        assert poly_str((4, 1)) == "t+4"
        assert poly_str(()) == "0"

    @given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
    def test_divmod_reconstructs(self, a0, a1, a2, b0):
        a = (a0, a1, a2, 1)
        b = (b0, 1)
        q, r = poly_divmod(a, b, 3)
        from ncpbound.fields import poly_trim

        lhs = [c % 3 for c in poly_mul(q, b, 3)] + [0] * 4
        for i, c in enumerate(r):
            lhs[i] = (lhs[i] + c) % 3
        assert poly_trim(lhs) == a


class TestPlaces:
    def test_rational_places(self):
        assert prime_place(7).norm() == 7
        assert str(real_place()) == "real"
        with pytest.raises(ValidationError):
            prime_place(6)
        with pytest.raises(ValidationError):
            real_place().norm()

    def test_function_field_places(self):
        P = poly_place(3, (0, 1))
        assert P.norm() == 3 and P.degree == 1
        assert infinite_place(3).norm() == 3
        assert poly_place(3, (1, 0, 1)).norm() == 9
        with pytest.raises(ValidationError):
            poly_place(3, (2, 0, 1))  # reducible
        with pytest.raises(ValidationError):
            poly_place(3, (0, 2))  # not monic

    def test_place_coeff_normalization(self):
        assert poly_place(3, (4, 1)) == poly_place(3, (1, 1))

    def test_enumerate_places_rationals(self):
        ps = list(enumerate_places(QQ, 10))
        assert [p.p for p in ps] == [2, 3, 5, 7]
        with_real = list(enumerate_places(QQ, 3, include_real=True))
        assert with_real[-1].kind == "real"

    def test_enumerate_places_function_field(self):
        ps = list(enumerate_places(F3, 3))
        assert [str(p) for p in ps] == ["(t)", "(t+1)", "(t+2)", "inf"]
        ps9 = list(enumerate_places(F3, 9))
        assert len(ps9) == 4 + 3  # three quadratics join
        assert ps9[:4] == ps

    def test_enumerate_places_emits_in_sort_key_order(self):
        for base, bound in ((QQ, 30), (F3, 27), (F7, 49)):
            keys = [P.sort_key() for P in enumerate_places(base, bound)]
            assert keys == sorted(keys)

    def test_residue_norm(self):
        assert residue_norm(poly_place(7, (4, 1))) == 7
        assert residue_norm(infinite_place(7)) == 7


class TestFqtElt:
    def test_normalization(self):
        x = FqtElt(3, 5, (((0, 1), 2),))
        assert x.c == 2
        y = fqt_from_factors(7, 1, [((0, 1), 1), ((6, 1), 0)])
        assert y.factors == (((0, 1), 1),)
        with pytest.raises(ValidationError):
            FqtElt(3, 3, ())
        with pytest.raises(ValidationError):
            fqt_from_factors(3, 1, [((2, 0, 1), 1)])  # reducible factor

    def test_valuations(self):
        # x = 2 * t^2 * (t+1)^-1 over F_3
        x = fqt_from_factors(3, 2, [((0, 1), 2), ((1, 1), -1)])
        assert x.valuation(poly_place(3, (0, 1))) == 2
        assert x.valuation(poly_place(3, (1, 1))) == -1
        assert x.valuation(poly_place(3, (2, 1))) == 0
        assert x.valuation(infinite_place(3)) == -1  # deg = 2 - 1

    def test_mul_pow(self):
        t = fqt_from_factors(3, 1, [((0, 1), 1)])
        t2 = t.mul(t)
        assert t2.valuation(poly_place(3, (0, 1))) == 2
        assert t.pow(-1).valuation(infinite_place(3)) == 1
        inv = t.mul(t.pow(-1))
        assert inv == fqt_const(3, 1)

    def test_unit_residue_finite(self):
        # (t-1)(t-2) at (t): residue is (-1)(-2) = 2 over F_7
        x = fqt_from_factors(7, 1, [((6, 1), 1), ((5, 1), 1)])
        assert x.unit_residue(poly_place(7, (0, 1))) == (2,)
        # t at (t): unit part is 1 w.r.t. uniformizer t
        t = fqt_from_factors(7, 1, [((0, 1), 1)])
        assert t.unit_residue(poly_place(7, (0, 1))) == (1,)

    def test_unit_residue_infinity(self):
        x = fqt_from_factors(7, 3, [((0, 1), 2)])
        assert x.unit_residue(infinite_place(7)) == 3

    def test_residue_symbol_dlog(self):
        # cubes in F_7* are {1,6}; smallest primitive root is 3, zeta_3 = 3^2 = 2
        t = fqt_from_factors(7, 1, [((0, 1), 1)])
        P = poly_place(7, (4, 1))  # t+4, i.e. t = -4 = 3, a non-cube
        d = t.residue_symbol_dlog(P, 3)
        assert d in (1, 2)
        # 3^((7-1)/3) = 9 = 2 = zeta^1
        assert d == 1
        six = fqt_const(7, 6)
        assert six.residue_symbol_dlog(P, 3) == 0  # 6 is a cube mod 7

    def test_is_nth_power(self):
        t = fqt_from_factors(7, 1, [((0, 1), 1)])
        assert not t.is_nth_power(3)
        assert t.pow(3).is_nth_power(3)
        assert fqt_const(7, 6).is_nth_power(3)
        assert not fqt_const(7, 2).is_nth_power(3)

    def test_class_order(self):
        t = fqt_from_factors(7, 1, [((0, 1), 1)])
        assert t.class_order(3) == 3
        assert fqt_const(7, 6).class_order(3) == 1
        assert fqt_const(7, 2).class_order(3) == 3
        x = fqt_from_factors(7, 1, [((0, 1), 3)])
        assert x.class_order(3) == 1

    def test_support(self):
        x = fqt_from_factors(3, 1, [((0, 1), 1)])
        assert [str(p) for p in x.support()] == ["(t)", "inf"]
        balanced = fqt_from_factors(3, 1, [((0, 1), 1), ((1, 1), -1)])
        assert [str(p) for p in balanced.support()] == ["(t)", "(t+1)"]

    def test_str(self):
        assert str(fqt_const(3, 2)) == "2"
        assert str(fqt_from_factors(3, 1, [((0, 1), 2)])) == "(t)^2"


class TestResidueRep:
    def test_rational(self):
        from fractions import Fraction

        assert residue_rep(prime_place(7), 10) == 3
        assert residue_rep(prime_place(7), Fraction(1, 2)) == 4
        with pytest.raises(ValidationError):
            residue_rep(prime_place(7), Fraction(1, 7))
        with pytest.raises(ValidationError):
            residue_rep(real_place(), 1)

    def test_function_field(self):
        x = fqt_from_factors(7, 1, [((6, 1), 1)])  # t - 1
        assert residue_rep(poly_place(7, (5, 1)), x) == (1,)  # at t=-5=2: 2-1=1
        assert residue_rep(poly_place(7, (6, 1)), x) == ()  # zero at t=1
        with pytest.raises(ValidationError):
            residue_rep(poly_place(7, (6, 1)), x.pow(-1))

import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euclid import number
from euclid.errors import DivisionByZero, NegativeRadicand
from euclid.number import (
    Constructible,
    approx,
    div,
    from_prefix,
    mul,
    new_context,
    sign,
    sqrt_nonneg,
    sub,
    to_prefix,
)


def C(x, y=1):
    return Constructible(Fraction(x, y))


rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)


class TestRationalArithmetic:
    def test_add_fractions(self):
        assert (C(1, 2) + C(1, 3)).as_fraction() == Fraction(5, 6)

    def test_sqrt2_plus_zero(self):
        r2 = sqrt_nonneg(C(2))
        assert (r2 + 0).sign() == r2.sign()
        assert (r2 + 0 - r2).sign() == 0

    def test_sqrt2_plus_sqrt8_equals_sqrt18(self):
        # expansion oracle: (sqrt2 + sqrt8)^2 = 2 + 8 + 2*sqrt(16) = 18
        lhs = sqrt_nonneg(C(2)) + sqrt_nonneg(C(8))
        assert (lhs * lhs - 18).sign() == 0
        assert (lhs - sqrt_nonneg(C(18))).sign() == 0

    def test_mul_sqrt2_sqrt2(self):
        r2 = sqrt_nonneg(C(2))
        assert mul(r2, r2) == C(2)

    def test_div_one_by_sqrt2(self):
        r2 = sqrt_nonneg(C(2))
        assert (div(1, r2) - r2 / 2).sign() == 0

    def test_sub_identical_radicals(self):
        r3 = sqrt_nonneg(C(3))
        assert sub(r3, r3).sign() == 0

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            div(1, C(0))
        with pytest.raises(DivisionByZero):
            div(sqrt_nonneg(C(2)), sqrt_nonneg(C(2)) - sqrt_nonneg(C(2)))


class TestSqrt:
    def test_sqrt_zero(self):
        assert sqrt_nonneg(C(0)).is_zero()

    def test_sqrt_rational_square(self):
        assert sqrt_nonneg(C(9, 4)).as_fraction() == Fraction(3, 2)

    def test_sqrt_defining_property(self):
        r = sqrt_nonneg(C(2))
        assert (r * r - 2).sign() == 0
        assert r.sign() == 1

    def test_negative_radicand(self):
        with pytest.raises(NegativeRadicand):
            sqrt_nonneg(C(-1))

    def test_sqrt_of_tower_square(self):
        # sqrt(3 + 2*sqrt(2)) = 1 + sqrt(2), found inside the tower
        r2 = sqrt_nonneg(C(2))
        v = sqrt_nonneg(3 + 2 * r2)
        assert (v - (1 + r2)).sign() == 0

    def test_sqrt_scaled_radicand_shares_tower(self):
        new_context()
        r2 = sqrt_nonneg(C(2))
        r8 = sqrt_nonneg(C(8))
        assert (r8 - 2 * r2).is_zero()

    def test_depth(self):
        r2 = sqrt_nonneg(C(2))
        assert C(5).radical_depth() == 0
        assert r2.radical_depth() == 1
        assert sqrt_nonneg(1 + r2).radical_depth() == 2


class TestSign:
    def test_sqrt2_vs_seven_fifths(self):
        # rational squaring oracle: 2 > 49/25
        assert sign(sqrt_nonneg(C(2)) - C(7, 5)) == 1

    def test_sqrt2_vs_three_halves(self):
        # rational squaring oracle: 2 < 9/4
        assert sign(sqrt_nonneg(C(2)) - C(3, 2)) == -1

    def test_expansion_zero(self):
        lhs = sqrt_nonneg(C(2)) + sqrt_nonneg(C(8))
        assert sign(lhs * lhs - 18) == 0

    def test_tiny_difference(self):
        # sqrt(2) against a 20-digit convergent; sign must still be exact
        a = Fraction(14142135623730950488, 10 ** 19)
        assert sign(sqrt_nonneg(C(2)) - Constructible(a)) == 1
        b = Fraction(14142135623730950489, 10 ** 19)
        assert sign(sqrt_nonneg(C(2)) - Constructible(b)) == -1

    def test_sign_beyond_interval_refinement(self):
        # a 200-digit convergent: intervals up to 512 bits straddle zero,
        # so this exercises the exact algebraic fallback
        new_context()
        q = 10 ** 200
        p = __import__("math").isqrt(2 * q * q)
        approx_under = Fraction(p, q)
        v = sqrt_nonneg(C(2)) - Constructible(approx_under)
        assert v.sign() == 1
        w = sqrt_nonneg(C(2)) - Constructible(Fraction(p + 1, q))
        assert w.sign() == -1

    def test_threaded_shared_values(self):
        from concurrent.futures import ThreadPoolExecutor

        new_context()
        r2 = sqrt_nonneg(C(2))
        r3 = sqrt_nonneg(C(3))

        def work(i):
            x = (r2 + r3) * (r2 - r3)      # exactly -1
            y = sqrt_nonneg(C(i % 7 + 2))
            return (x + 1).sign() == 0 and (y * y - (i % 7 + 2)).sign() == 0

        with ThreadPoolExecutor(max_workers=4) as pool:
            assert all(pool.map(work, range(40)))

    def test_zero_family(self):
        # sqrt(a) + sqrt(b) - sqrt(a + b + 2*sqrt(ab)) is identically zero
        rng = random.Random(7)
        new_context()
        for _ in range(25):
            a = Fraction(rng.randint(1, 40), rng.randint(1, 12))
            b = Fraction(rng.randint(1, 40), rng.randint(1, 12))
            ra = sqrt_nonneg(Constructible(a))
            rb = sqrt_nonneg(Constructible(b))
            inner = sqrt_nonneg(Constructible(a * b))
            total = sqrt_nonneg(Constructible(a) + Constructible(b) + 2 * inner)
            assert (ra + rb - total).sign() == 0


class TestApprox:
    def test_third(self):
        assert approx(C(1, 3), 4) == "0.3333"

    def test_sqrt2(self):
        # interval-refinement oracle: isqrt(2 * 10^8) = 14142
        assert approx(sqrt_nonneg(C(2)), 4) == "1.4142"

    def test_zero(self):
        assert approx(C(0), 2) == "0.00"

    def test_negative(self):
        assert approx(C(-1, 3), 3) == "-0.333"

    def test_agrees_with_mpmath(self):
        with mpmath.workdps(60):
            want = mpmath.nstr(mpmath.sqrt(5), 25, strip_zeros=False)
        got = approx(sqrt_nonneg(C(5)), 20)
        assert abs(mpmath.mpf(got) - mpmath.mpf(want)) < mpmath.mpf(10) ** -19


class TestProperties:
    @given(rationals, rationals, rationals)
    def test_field_axioms(self, a, b, c):
        ca, cb, cc = Constructible(a), Constructible(b), Constructible(c)
        assert ((ca + cb) + cc - (ca + (cb + cc))).sign() == 0
        assert (ca * (cb + cc) - (ca * cb + ca * cc)).sign() == 0
        assert (ca + cb - (cb + ca)).sign() == 0

    @given(st.fractions(min_value=Fraction(0), max_value=Fraction(50), max_denominator=12))
    @settings(max_examples=40, deadline=None)
    def test_sqrt_squares_back(self, x):
        new_context()
        v = Constructible(x)
        r = sqrt_nonneg(v)
        assert (r * r - v).sign() == 0
        assert r.sign() >= 0

    def test_interval_oracle_agreement(self):
        # random radical expressions of depth <= 3 vs a 100-digit mpmath
        # interval evaluation
        rng = random.Random(20240809)

        def build(depth):
            kind = rng.randint(0, 5 if depth > 0 else 2)
            if kind == 0:
                q = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
                return Constructible(q), mpmath.mpf(q.numerator) / q.denominator
            if kind == 1:
                q = Fraction(rng.randint(1, 30))
                return Constructible(q), mpmath.mpf(q.numerator)
            if kind == 2:
                q = Fraction(rng.randint(-5, 5))
                return Constructible(q), mpmath.mpf(q.numerator)
            a, fa = build(depth - 1)
            b, fb = build(depth - 1)
            if kind == 3:
                return a + b, fa + fb
            if kind == 4:
                return a * b, fa * fb
            if a.sign() < 0:
                a, fa = -a, -fa
            return sqrt_nonneg(a), mpmath.sqrt(fa)

        with mpmath.workdps(100):
            for _ in range(300):
                new_context()
                v, f = build(3)
                if abs(f) > mpmath.mpf(10) ** -80:
                    want = 1 if f > 0 else -1
                    assert v.sign() == want


class TestSerialization:
    def test_rational_round_trip(self):
        v = C(-22, 7)
        assert from_prefix(to_prefix(v)) == v

    def test_radical_round_trip(self):
        v = sqrt_nonneg(C(2)) + sqrt_nonneg(C(3)) * C(1, 2)
        w = from_prefix(to_prefix(v))
        assert (v - w).sign() == 0

    def test_nested_round_trip(self):
        v = sqrt_nonneg(1 + sqrt_nonneg(C(5)))
        w = from_prefix(to_prefix(v))
        assert (v - w).sign() == 0

    def test_accepts_all_operator_tokens(self):
        v = from_prefix("÷ − 5 1 √ 4")
        assert v.as_fraction() == Fraction(2)

    def test_canonical_is_stable(self):
        new_context()
        a = to_prefix(sqrt_nonneg(C(2)) + 1)
        new_context()
        b = to_prefix(sqrt_nonneg(C(2)) + 1)
        assert a == b


class TestImmutability:
    def test_hash_and_eq(self):
        new_context()
        a = sqrt_nonneg(C(2)) + 1
        b = 1 + sqrt_nonneg(C(2))
        assert a == b
        assert hash(a) == hash(b)

    def test_ordering(self):
        assert sqrt_nonneg(C(2)) < sqrt_nonneg(C(3))
        assert C(1) <= C(1)
        assert sqrt_nonneg(C(2)) > C(1)

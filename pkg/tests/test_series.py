import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qbailey.oracles import partition_counts_dp
from qbailey.qtools import Q, poch_infinite
from qbailey.series import (
    LaurentSeries,
    NonUnitError,
    PrecisionError,
    VerificationReport,
    add,
    coefficient_at,
    div,
    div_binomial,
    equal_up_to,
    from_coeffs,
    invert,
    monomial,
    mul,
    mul_binomial,
    one,
    shift,
    sub,
    truncate,
    zero,
)
from strategies import exact_polys, truncated_series, unit_series


def known(s, lo, hi):
    return [s[e] for e in range(lo, hi)]


class TestConstruction:
    def test_monomial_constant(self):
        s = monomial(1, 0, 10)
        assert s.min_exp == 0 and s.prec == 10
        assert known(s, 0, 10) == [1] + [0] * 9

    def test_monomial_negative_q(self):
        assert known(monomial(-1, 1, 10), 0, 3) == [0, -1, 0]

    def test_monomial_negative_exponent(self):
        s = monomial(1, -1, 10)
        assert s.min_exp == -1 and s[-1] == 1 and s[0] == 0

    @pytest.mark.parametrize("prec", [0, -1])
    def test_monomial_needs_room(self, prec):
        with pytest.raises(PrecisionError):
            monomial(1, 0, prec)

    def test_leading_zeros_stripped(self):
        s = from_coeffs([0, 0, 3, 1], -1, 8)
        assert s.min_exp == 1 and s.valuation() == 1

    def test_zero_below_prec(self):
        z = from_coeffs([0, 0], 0, 5)
        assert z.is_zero() and z.valuation() is None and z[3] == 0

    def test_exact_trailing_zeros_dropped(self):
        assert from_coeffs([1, 2, 0, 0]).coeffs == (1, 2)

    def test_prec_below_min_exp_rejected(self):
        with pytest.raises(PrecisionError):
            LaurentSeries(5, (1,), 3)


class TestArithmeticExamples:
    def test_add_cancels(self):
        s = add(from_coeffs([1, -1]), from_coeffs([0, 1]))
        assert s == one()

    def test_add_laurent(self):
        s = add(monomial(1, -1), one())
        assert s.min_exp == -1 and s.coeffs == (1, 1)

    def test_add_telescoping(self):
        s = from_coeffs([1, -1]) + from_coeffs([0, 1, -1])
        assert s == from_coeffs([1, 0, -1])

    def test_add_precision_is_min(self):
        assert add(one(5), one(9)).prec == 5

    def test_mul_geometric(self):
        geo = from_coeffs([1] * 10, 0, 10)
        assert known(mul(from_coeffs([1, -1]), geo), 0, 10) == [1] + [0] * 9

    def test_mul_cancel_exponents(self):
        assert mul(monomial(1, -1), monomial(1, 1)) == one()

    def test_mul_q_q2(self):
        assert mul(from_coeffs([1, -1]), from_coeffs([1, 0, -1])) == from_coeffs([1, -1, -1, 1])

    def test_mul_precision_contract(self):
        s = from_coeffs([1, 2], 0, 6)
        t = from_coeffs([1], -2, 3)
        # min(6 + (-2), 3 + 0)
        assert mul(s, t).prec == 3

    def test_scale_and_shift(self):
        s = from_coeffs([1, 2], 0, 4)
        assert known(3 * s, 0, 4) == [3, 6, 0, 0]
        t = shift(s, -2)
        assert t.min_exp == -2 and t.prec == 2


class TestInversion:
    def test_geometric(self):
        s = invert(from_coeffs([1, -1]), 8)
        assert known(s, 0, 8) == [1] * 8

    def test_laurent_unit(self):
        s = invert(from_coeffs([1, 1], -1), 6)
        assert s.min_exp == 1
        assert known(s, 1, 6) == [1, -1, 1, -1, 1]

    def test_euler_product_gives_partitions(self):
        s = invert(poch_infinite(Q, 1, 10))
        assert known(s, 0, 10) == partition_counts_dp(9)

    def test_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            invert(zero(5))

    def test_non_unit_raises(self):
        with pytest.raises(NonUnitError):
            invert(from_coeffs([2, 1], 0, 5))

    def test_exact_needs_prec(self):
        with pytest.raises(PrecisionError):
            invert(from_coeffs([1, -1]))

    def test_div_binomial_matches_invert(self):
        s = div_binomial(one(12), -1, 3)
        assert s == invert(from_coeffs([1, 0, 0, -1], 0, 12))

    def test_div_binomial_constant_edge_cases(self):
        with pytest.raises(ZeroDivisionError):
            div_binomial(one(5), -1, 0)
        with pytest.raises(NonUnitError):
            div_binomial(one(5), 1, 0)


class TestCoefficientAt:
    def test_partition_coefficient(self):
        assert coefficient_at(invert(poch_infinite(Q, 1, 10)), 4) == 5

    def test_negative_exponent(self):
        assert coefficient_at(from_coeffs([1, 1], -1), -1) == 1

    def test_above_precision_raises(self):
        with pytest.raises(PrecisionError):
            coefficient_at(from_coeffs([1, -1], 0, 4), 5)

    def test_below_min_exp_is_zero(self):
        assert coefficient_at(from_coeffs([1], 3, 6), 0) == 0


class TestEqualUpTo:
    def test_pass(self):
        r = equal_up_to(one(10), one(10), 0, 10)
        assert r.passed and r.first_mismatch is None and r.window == (0, 10)

    def test_fail_reports_first_exponent(self):
        r = equal_up_to(one(10), from_coeffs([1] + [0] * 8 + [1], 0, 10), 0, 10)
        assert not r.passed and r.first_mismatch == (9, 0, 1)

    def test_window_past_precision_raises(self):
        with pytest.raises(PrecisionError):
            equal_up_to(one(5), one(10), 0, 8)

    def test_report_invariant(self):
        with pytest.raises(ValueError):
            VerificationReport((0, 1), "fail")
        with pytest.raises(ValueError):
            VerificationReport((0, 1), "pass", (0, 1, 2))

    def test_json_shape(self):
        r = equal_up_to(one(3), from_coeffs([1, 5], 0, 3), 0, 3)
        assert r.to_json() == {
            "identity": None,
            "params": {},
            "window": [0, 3],
            "status": "fail",
            "first_mismatch": {"exponent": 1, "lhs": "0", "rhs": "5"},
        }


def naive_product(s, t):
    out = {}
    for i, a in enumerate(s.coeffs):
        for j, b in enumerate(t.coeffs):
            e = s.min_exp + i + t.min_exp + j
            out[e] = out.get(e, 0) + a * b
    return out


def overlap(*ss):
    lo = min(s.min_exp for s in ss)
    hi = min(s.prec for s in ss if s.prec is not None)
    return lo, hi


class TestRingProperties:
    @given(truncated_series(), truncated_series())
    def test_commutative(self, s, t):
        assert mul(s, t) == mul(t, s)
        assert add(s, t) == add(t, s)

    @given(truncated_series(), truncated_series(), truncated_series())
    def test_associative(self, s, t, u):
        left, right = mul(mul(s, t), u), mul(s, mul(t, u))
        lo, hi = overlap(left, right)
        assert equal_up_to(left, right, lo, hi)

    @given(truncated_series(), truncated_series(), truncated_series())
    def test_distributive(self, s, t, u):
        left = mul(s, add(t, u))
        right = add(mul(s, t), mul(s, u))
        lo, hi = overlap(left, right)
        assert equal_up_to(left, right, lo, hi)

    @given(truncated_series(), truncated_series())
    def test_product_is_sound(self, s, t):
        p = mul(s, t)
        full = naive_product(s, t)
        for e in range(min(p.min_exp, s.min_exp + t.min_exp), p.prec):
            assert p[e] == full.get(e, 0)

    @given(truncated_series(), truncated_series())
    def test_sub_then_add(self, s, t):
        r = add(sub(s, t), t)
        lo, hi = overlap(r, s)
        assert equal_up_to(r, s, lo, hi)

    @given(unit_series())
    def test_inverse_times_self(self, s):
        r = mul(s, invert(s))
        lo, hi = overlap(r, one(r.prec))
        assert equal_up_to(r, one(r.prec), min(lo, 0), hi)

    @given(unit_series())
    def test_double_inverse(self, s):
        r = invert(invert(s))
        assert r.prec == s.prec
        assert equal_up_to(r, s, s.min_exp, s.prec)

    @given(truncated_series(), unit_series())
    def test_division_round_trip(self, s, t):
        r = mul(div(s, t), t)
        hi = min(r.prec, s.prec)
        assert equal_up_to(r, s, min(r.min_exp, s.min_exp), hi)

    @given(exact_polys(), st.sampled_from([1, -1]), st.integers(-4, 6))
    def test_binomial_fast_path(self, p, c, e):
        b = from_coeffs([1], 0) + from_coeffs([c], e)
        if b.is_zero():
            return
        assert mul_binomial(p, c, e) == mul(p, b)

    @given(truncated_series(), st.integers(-5, 5))
    @settings(max_examples=50)
    def test_truncate_is_consistent(self, s, drop):
        hi = s.prec - abs(drop)
        if hi < s.min_exp:
            return
        t = truncate(s, hi)
        assert t.prec == hi and known(t, s.min_exp, hi) == known(s, s.min_exp, hi)

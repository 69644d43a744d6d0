import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dmoments import special
from dmoments.errors import ConvergenceError, DomainError
from dmoments.special import KummerParams, gamma, gamma_ratio, inject_gamma_fault, kummer_1f1, kummer_1f1_derivative, ln_gamma

mpmath.mp.dps = 40


def mp_lngamma(x):
    return float(mpmath.loggamma(mpmath.mpf(x)))


class TestLnGamma:
    def test_known_values(self):
        assert ln_gamma(1.0) == 0.0
        assert ln_gamma(2.0) == 0.0
        assert ln_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-14)
        assert ln_gamma(11.0) == pytest.approx(15.104412573075516, rel=1e-14)

    @pytest.mark.parametrize("m", range(2, 171))
    def test_factorials(self, m):
        assert ln_gamma(m + 1) == pytest.approx(math.log(math.factorial(m)), rel=1e-13)

    @pytest.mark.parametrize("m", range(0, 100))
    def test_half_integers(self, m):
        exact = math.log(math.factorial(2 * m)) - math.log(4 ** m * math.factorial(m)) + 0.5 * math.log(math.pi)
        assert ln_gamma(m + 0.5) == pytest.approx(exact, rel=1e-13, abs=1e-15)

    @given(st.floats(min_value=0.5, max_value=1e6))
    def test_against_mpmath(self, x):
        ref = mp_lngamma(x)
        assert ln_gamma(x) == pytest.approx(ref, rel=1e-13, abs=1e-15)

    @given(st.floats(min_value=1e-6, max_value=0.5))
    def test_small_arguments(self, x):
        assert ln_gamma(x) == pytest.approx(mp_lngamma(x), rel=1e-13)

    @given(st.floats(min_value=0.5, max_value=100))
    def test_recurrence(self, x):
        assert ln_gamma(x + 1) - ln_gamma(x) == pytest.approx(math.log(x), rel=1e-12, abs=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5, math.nan, math.inf])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            ln_gamma(x)


class TestGammaRatio:
    def test_examples(self):
        assert gamma_ratio(1.5, 1) == pytest.approx(0.8862269255, rel=1e-10)
        assert gamma_ratio(3.5, 3) == pytest.approx(float(mpmath.gamma(3.5) / 2), rel=1e-13)
        assert gamma_ratio(3.5, 3) == pytest.approx(1.6616755, rel=1e-7)

    @given(st.floats(min_value=1e-3, max_value=1e6))
    def test_identity(self, x):
        assert gamma_ratio(x, x) == 1.0

    def test_large_arguments_do_not_overflow(self):
        r = gamma_ratio(1e6 + 0.5, 1e6)
        assert r == pytest.approx(math.sqrt(1e6), rel=1e-6)

    def test_domain_propagates(self):
        with pytest.raises(DomainError):
            gamma_ratio(-1.0, 2.0)

    def test_gamma_small_integers(self):
        for m in range(1, 15):
            assert gamma(m) == pytest.approx(math.factorial(m - 1), rel=1e-13)


def test_fault_injection_scales_gamma_and_restores():
    before = gamma(4.0)
    with inject_gamma_fault(1e-3):
        assert gamma(4.0) == pytest.approx(6.0 * 1.001, rel=1e-12)
    assert gamma(4.0) == before


class TestKummer:
    def test_examples(self):
        assert kummer_1f1(0, 2, 7.3) == 1.0
        assert kummer_1f1(-1, 1, 0.4) == pytest.approx(0.6, rel=1e-15)
        assert kummer_1f1(-2, 2, 1.0) == pytest.approx(1 / 6, rel=1e-15)

    def test_at_zero(self):
        assert kummer_1f1(-7, 3, 0.0) == 1.0
        assert kummer_1f1(0.3, 1.7, 0.0) == 1.0

    @pytest.mark.parametrize("n", range(0, 31, 5))
    @pytest.mark.parametrize("b", range(1, 13))
    @pytest.mark.parametrize("x", [0.0, 0.3, 2.0, 9.5, 21.0, 33.3, 50.0])
    def test_paths_agree(self, n, b, x):
        p = kummer_1f1(-n, b, x, method="polynomial")
        s = kummer_1f1(-n, b, x, method="series")
        assert s == pytest.approx(p, rel=1e-12, abs=1e-300)

    @given(st.integers(0, 30), st.integers(1, 12), st.floats(0, 50))
    def test_polynomial_against_mpmath(self, n, b, x):
        ref = float(mpmath.hyp1f1(-n, b, x))
        assert kummer_1f1(-n, b, x) == pytest.approx(ref, rel=1e-12, abs=1e-300)

    @given(st.floats(-20, 20), st.floats(0.2, 30), st.floats(0, 40))
    def test_series_against_mpmath(self, a, b, x):
        ref = mpmath.hyp1f1(a, b, x)
        got = kummer_1f1(a, b, x)
        assert got == pytest.approx(float(ref), rel=1e-11, abs=1e-12 * float(mpmath.hyp1f1(abs(a), b, x)))

    def test_large_cancellation(self):
        assert kummer_1f1(-30, 11, 50.0) == pytest.approx(float(mpmath.hyp1f1(-30, 11, 50)), rel=1e-13)

    @given(st.floats(-5, 5), st.floats(0.5, 10), st.floats(0.1, 10))
    def test_derivative_identity(self, a, b, x):
        h = 1e-5 * max(1.0, x)
        fd = (kummer_1f1(a, b, x + h) - kummer_1f1(a, b, x - h)) / (2 * h)
        exact = kummer_1f1_derivative(a, b, x)
        scale = max(abs(exact), abs(kummer_1f1(a, b, x)) * 1e-3, 1e-12)
        assert abs(fd - exact) <= 1e-6 * scale

    @pytest.mark.parametrize("b", [0, -1, -4, -2.0])
    def test_pole_in_b(self, b):
        with pytest.raises(DomainError):
            kummer_1f1(0.5, b, 1.0)

    def test_negative_x_rejected(self):
        with pytest.raises(DomainError):
            KummerParams(1.0, 2.0, -1.0)

    def test_polynomial_method_requires_integer_a(self):
        with pytest.raises(DomainError):
            kummer_1f1(0.5, 2, 1.0, method="polynomial")

    def test_series_cap(self, monkeypatch):
        monkeypatch.setattr(special, "SERIES_MAX_TERMS", 5)
        with pytest.raises(ConvergenceError):
            kummer_1f1(0.5, 1.5, 40.0, method="series")

    def test_is_polynomial(self):
        assert KummerParams(-3, 2, 1.0).is_polynomial
        assert not KummerParams(-3.5, 2, 1.0).is_polynomial

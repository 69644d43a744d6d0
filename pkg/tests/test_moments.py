import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dmoments.constants import LAMBDA_C_CM, MU_B, magnetic_energy_scale_eV
from dmoments.errors import InvalidInputError, RegimeError
from dmoments.landau import QuantumNumbers, build_state
from dmoments.moments import (
    CROSSOVER,
    HIGH_KINETIC,
    LOW_KINETIC,
    RegimeThresholds,
    b_max,
    classify_regime,
    edm_asymptotic_high,
    edm_asymptotic_low,
    edm_closed,
    edm_second_difference,
    edm_value,
    mdm_closed,
    mdm_finite_field,
    numeric_argmax_field,
)

quantum = st.builds(QuantumNumbers, st.integers(0, 15), st.integers(0, 15))
ARGMAX_STATES = [QuantumNumbers(0, 0), QuantumNumbers(1, 0), QuantumNumbers(0, 2), QuantumNumbers(3, 1)]


def direct_edm(qn, B, eps):
    # the textbook expression evaluated literally
    x = eps / magnetic_energy_scale_eV(B)
    g = math.gamma(2 * qn.n + qn.k + 1.5) / math.gamma(2 * qn.n + qn.k + 1)
    return LAMBDA_C_CM / (2 * math.pi) * (qn.k + 1) * x * g / ((qn.k + 1) ** 2 + (2 * qn.n + qn.k + 1) * x * x)


class TestClosedForm:
    def test_cesium_point(self):
        r = edm_closed(QuantumNumbers(0, 0), 1e-7, 2.6e5)
        assert r.value == pytest.approx(7.2057e-20, rel=1e-4)
        assert r.p2 == 1j * r.value
        assert r.unit == "e*cm" and r.regime == HIGH_KINETIC

    def test_planck_scale(self):
        r = edm_closed(QuantumNumbers(0, 0), 1e53, 2.6e5)
        assert 1e-34 <= r.value <= 1e-33
        assert r.value == pytest.approx(4.117e-34, rel=1e-3)
        assert r.regime == LOW_KINETIC

    @given(quantum, st.floats(1e-9, 1e12), st.floats(1e-6, 1e10))
    def test_against_direct_expression(self, qn, B, eps):
        assert edm_value(qn, B, eps) == pytest.approx(direct_edm(qn, B, eps), rel=1e-12)

    def test_extreme_ratio_no_overflow(self):
        # x ~ 1e199, so x^2 alone would overflow
        qn = QuantumNumbers(0, 0)
        x = 1e100 / magnetic_energy_scale_eV(1e-200)
        expected = LAMBDA_C_CM / (2 * math.pi) * math.gamma(1.5) / x
        assert edm_value(qn, 1e-200, 1e100) == pytest.approx(expected, rel=1e-14)

    def test_vanishes_at_infinite_scale(self):
        assert edm_value(QuantumNumbers(0, 0), 1e250, 1.0) < 1e-130

    @pytest.mark.parametrize("B, eps", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, math.nan)])
    def test_invalid(self, B, eps):
        with pytest.raises(InvalidInputError):
            edm_closed(QuantumNumbers(0, 0), B, eps)


class TestRegimes:
    def test_examples(self):
        assert classify_regime(2.6e5, 4e-7) == HIGH_KINETIC
        assert classify_regime(magnetic_energy_scale_eV(3.0), 3.0) == CROSSOVER
        assert classify_regime(2.6e5, 1e53) == LOW_KINETIC

    def test_thresholds_validated(self):
        with pytest.raises(InvalidInputError):
            RegimeThresholds(0.5, 0.1)

    @pytest.mark.parametrize("qn", ARGMAX_STATES)
    @pytest.mark.parametrize("B", [1e-7, 1.0, 1e6])
    def test_scaling_laws(self, qn, B):
        scale = magnetic_energy_scale_eV(B)
        high, low = 1e3 * scale, 1e-3 * scale
        assert edm_value(qn, 4 * B, high) / edm_value(qn, B, high) == pytest.approx(2.0, rel=5e-3)
        assert edm_value(qn, 4 * B, low) / edm_value(qn, B, low) == pytest.approx(0.5, rel=5e-3)

    @given(quantum, st.floats(1e4, 1e8))
    def test_high_asymptote_converges(self, qn, ratio):
        B = 1.0
        eps = ratio * magnetic_energy_scale_eV(B)
        asym = edm_asymptotic_high(qn, B, eps).value
        assert asym == pytest.approx(edm_value(qn, B, eps), rel=50 * (qn.k + 1) ** 2 / ratio ** 2)

    @given(quantum, st.floats(1e-8, 1e-4))
    def test_low_asymptote_converges(self, qn, ratio):
        B = 1.0
        eps = ratio * magnetic_energy_scale_eV(B)
        asym = edm_asymptotic_low(qn, B, eps).value
        assert asym == pytest.approx(edm_value(qn, B, eps), rel=50 * ratio ** 2 * qn.two_delta)

    def test_low_asymptote_linear_in_epsilon(self):
        qn = QuantumNumbers(1, 1)
        a = edm_asymptotic_low(qn, 1.0, 1e-3).value
        b = edm_asymptotic_low(qn, 1.0, 2e-3).value
        assert b == pytest.approx(2 * a, rel=1e-14)

    def test_out_of_regime(self):
        with pytest.raises(RegimeError):
            edm_asymptotic_high(QuantumNumbers(0, 0), 1.0, 1.0)
        with pytest.raises(RegimeError):
            edm_asymptotic_low(QuantumNumbers(0, 0), 1.0, 1e3)


class TestMaximum:
    def test_ground_state_example(self):
        B = b_max(QuantumNumbers(0, 0), 2.6e5)
        assert magnetic_energy_scale_eV(B) == pytest.approx(2.6e5, rel=1e-14)
        assert B == pytest.approx(5.71e8, rel=1e-2)

    @pytest.mark.parametrize("qn", ARGMAX_STATES)
    @pytest.mark.parametrize("eps", [1.0, 2.6e5, 1e10])
    def test_argmax(self, qn, eps):
        expected = b_max(qn, eps)
        found = numeric_argmax_field(qn, eps, expected / 1e3, expected * 1e3)
        assert found == pytest.approx(expected, rel=1e-6)
        assert edm_second_difference(qn, expected, eps) < 0

    @given(quantum, st.floats(1e-3, 1e12))
    def test_condition(self, qn, eps):
        scale = magnetic_energy_scale_eV(b_max(qn, eps))
        assert scale ** 2 == pytest.approx(eps ** 2 * qn.two_delta / (qn.k + 1) ** 2, rel=1e-13)

    def test_invalid(self):
        with pytest.raises(InvalidInputError):
            b_max(QuantumNumbers(0, 0), 0.0)
        with pytest.raises(InvalidInputError):
            numeric_argmax_field(QuantumNumbers(0, 0), 1.0, 2.0, 1.0)


class TestMagnetic:
    def test_bohr_magneton(self):
        assert mdm_closed() == pytest.approx(9.2740e-24, rel=1e-5)
        assert mdm_closed() == MU_B

    def test_finite_field_weak_limit(self):
        r = mdm_finite_field(QuantumNumbers(0, 0), 1e-10)
        assert r.value == pytest.approx(MU_B, rel=1e-12)
        assert r.unit == "J/T"

    def test_finite_field_strong(self):
        s = build_state(QuantumNumbers(0, 0), 1e12)
        A = s.weight
        assert mdm_finite_field(QuantumNumbers(0, 0), 1e12).value == pytest.approx(MU_B * (A + 2) / (A + 1), rel=1e-14)

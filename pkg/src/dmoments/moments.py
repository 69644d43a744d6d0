"""
Closed-form dipole moments of a Landau electron.

With x = eps / S (kinetic energy over the Landau scale), a = (k+1)^2 and
b = 2n + k + 1, the electric dipole moment is

    p1 = (lambda_C / 2 pi) * (k+1) * x * G / (a + b x^2),
    G  = Gamma(2n + k + 3/2) / Gamma(2n + k + 1),

in units of e, with p2 = i p1.  It rises as sqrt(B0) while x >> 1, falls
as 1/sqrt(B0) once x << 1, and peaks where x^2 = a / b.

The two asymptotic forms below keep the 1/(2 pi) and G factors so that
they converge to the closed form; the commonly quoted reduced forms
e lambda_C S/eps and e lambda_C eps/S omit both.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import LAMBDA_C_CM, MU_B, field_from_energy_scale, magnetic_energy_scale_eV
from .densities import magnetization_ratio_closed
from .errors import InvalidInputError, RegimeError
from .landau import QuantumNumbers, build_state
from .special import gamma_ratio

HIGH_KINETIC = "high_kinetic"
LOW_KINETIC = "low_kinetic"
CROSSOVER = "crossover"

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RegimeThresholds:
    high_ratio: float = 10.0
    low_ratio: float = 0.1

    def __post_init__(self):
        if not (self.high_ratio > 1.0 > self.low_ratio > 0.0):
            raise InvalidInputError("thresholds must satisfy high_ratio > 1 > low_ratio > 0")


DEFAULT_THRESHOLDS = RegimeThresholds()


@dataclass(frozen=True)
class MomentResult:
    """A dipole moment with its provenance.

    ``value`` is in e*cm for electric moments and J/T for magnetic ones
    (see ``unit``).  For electric moments ``p2`` holds the second component,
    i * value.
    """

    value: float
    unit: str
    method: str
    regime: str
    qn: QuantumNumbers
    B0: float
    epsilon: float
    p2: complex | None = None


def _check_inputs(B0: float, epsilon: float) -> None:
    if not (math.isfinite(B0) and B0 > 0):
        raise InvalidInputError(f"magnetic field must be positive, got {B0!r}")
    if not (math.isfinite(epsilon) and epsilon > 0):
        raise InvalidInputError(f"kinetic energy must be positive, got {epsilon!r}")


def classify_regime(epsilon: float, B0: float, thresholds: RegimeThresholds = DEFAULT_THRESHOLDS) -> str:
    _check_inputs(B0, epsilon)
    ratio = epsilon / magnetic_energy_scale_eV(B0)
    if ratio >= thresholds.high_ratio:
        return HIGH_KINETIC
    if ratio <= thresholds.low_ratio:
        return LOW_KINETIC
    return CROSSOVER


def _gamma_factor(qn: QuantumNumbers) -> float:
    return gamma_ratio(qn.two_delta + 0.5, qn.two_delta)


def edm_value(qn: QuantumNumbers, B0: float, epsilon: float) -> float:
    """|p1| in e*cm; the bare number behind :func:`edm_closed`."""
    _check_inputs(B0, epsilon)
    x = epsilon / magnetic_energy_scale_eV(B0)
    a = (qn.k + 1) ** 2
    b = qn.two_delta
    if x > 1.0:
        shape = (1.0 / x) / (a / (x * x) + b)
    else:
        shape = x / (a + b * x * x)
    return LAMBDA_C_CM / (2.0 * math.pi) * (qn.k + 1) * _gamma_factor(qn) * shape


def _edm_result(value, method, qn, B0, epsilon, thresholds):
    return MomentResult(
        value=value, unit="e*cm", method=method,
        regime=classify_regime(epsilon, B0, thresholds),
        qn=qn, B0=B0, epsilon=epsilon, p2=1j * value,
    )


def edm_closed(
    qn: QuantumNumbers, B0: float, epsilon: float, thresholds: RegimeThresholds = DEFAULT_THRESHOLDS
) -> MomentResult:
    """Electric dipole moment of state (n, k) at field B0 (T) and kinetic energy epsilon (eV)."""
    return _edm_result(edm_value(qn, B0, epsilon), "closed_form", qn, B0, epsilon, thresholds)


def edm_asymptotic_high(
    qn: QuantumNumbers, B0: float, epsilon: float, thresholds: RegimeThresholds = DEFAULT_THRESHOLDS
) -> MomentResult:
    """Leading term for eps >> S: grows as sqrt(B0)."""
    _check_inputs(B0, epsilon)
    x = epsilon / magnetic_energy_scale_eV(B0)
    if x < thresholds.high_ratio:
        raise RegimeError(f"eps/scale = {x:.3g} is below the high-kinetic threshold {thresholds.high_ratio}")
    value = LAMBDA_C_CM / (2.0 * math.pi) * (qn.k + 1) * _gamma_factor(qn) / (qn.two_delta * x)
    return _edm_result(value, "asymptotic_high", qn, B0, epsilon, thresholds)


def edm_asymptotic_low(
    qn: QuantumNumbers, B0: float, epsilon: float, thresholds: RegimeThresholds = DEFAULT_THRESHOLDS
) -> MomentResult:
    """Leading term for eps << S: falls as 1/sqrt(B0)."""
    _check_inputs(B0, epsilon)
    x = epsilon / magnetic_energy_scale_eV(B0)
    if x > thresholds.low_ratio:
        raise RegimeError(f"eps/scale = {x:.3g} is above the low-kinetic threshold {thresholds.low_ratio}")
    value = LAMBDA_C_CM / (2.0 * math.pi) * _gamma_factor(qn) * x / (qn.k + 1)
    return _edm_result(value, "asymptotic_low", qn, B0, epsilon, thresholds)


def mdm_closed() -> float:
    """The Bohr magneton e hbar / 2 m_e, J/T."""
    return MU_B


def mdm_finite_field(
    qn: QuantumNumbers, B0: float, epsilon: float | None = None,
    thresholds: RegimeThresholds = DEFAULT_THRESHOLDS,
) -> MomentResult:
    """Magnetic moment at finite field, mu_B (A + 2d(2d+1)) / (A + 2d).

    ``epsilon=None`` uses the state's own kinetic energy.
    """
    state = build_state(qn, B0, epsilon=epsilon)
    return MomentResult(
        value=MU_B * magnetization_ratio_closed(state), unit="J/T", method="closed_form",
        regime=classify_regime(state.epsilon, B0, thresholds),
        qn=qn, B0=B0, epsilon=state.epsilon,
    )


def b_max(qn: QuantumNumbers, epsilon: float) -> float:
    """Field (T) at which the electric dipole moment peaks, S^2 = eps^2 (2n+k+1)/(k+1)^2."""
    if not (math.isfinite(epsilon) and epsilon > 0):
        raise InvalidInputError(f"kinetic energy must be positive, got {epsilon!r}")
    return field_from_energy_scale(epsilon * math.sqrt(qn.two_delta) / (qn.k + 1))


def numeric_argmax_field(qn: QuantumNumbers, epsilon: float, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Golden-section search for the field maximising the dipole moment on [lo, hi].

    Works in ln(B) and stops when the bracket is narrower than ``tol``.
    """
    if not 0 < lo < hi:
        raise InvalidInputError("need 0 < lo < hi")
    a, b = math.log(lo), math.log(hi)

    def f(t):
        return edm_value(qn, math.exp(t), epsilon)

    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return math.exp(0.5 * (a + b))


def edm_second_difference(qn: QuantumNumbers, B0: float, epsilon: float, rel_step: float = 1e-3) -> float:
    """Central second difference of p1(B) at B0, e*cm / T^2."""
    h = rel_step * B0
    return (edm_value(qn, B0 + h, epsilon) - 2.0 * edm_value(qn, B0, epsilon) + edm_value(qn, B0 - h, epsilon)) / (h * h)

"""
Self-check suite behind ``dmoments verify``.

Every group compares a closed form against something computed another
way: exact references, quadrature, ODE integration or a numeric search.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import MU_B, magnetic_energy_scale_eV
from .densities import magnetization_quadrature, magnetization_ratio_closed, polarization_quadrature
from .landau import (
    QuantumNumbers,
    build_state,
    integrate_radial_ode,
    natural_state,
    norm_integral,
    radial_residual,
    trajectory_error,
)
from .moments import b_max, edm_closed, edm_second_difference, edm_value, numeric_argmax_field
from .special import kummer_1f1, ln_gamma

GRID_FIELDS = (1e-7, 1.0, 1e10)
ORACLE_FIELDS = (1e-7, 1e-2, 1.0, 1e8)
ORACLE_N = (0, 1, 3)
ORACLE_K = (0, 1, 4)
ARGMAX_STATES = ((0, 0), (1, 0), (0, 2), (3, 1))
KUMMER_X = (0.0, 0.1, 1.0, 3.7, 10.0, 25.0, 38.5, 50.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _grid_states(max_level: int = 20):
    for B in GRID_FIELDS:
        for n in range(max_level + 1):
            for k in range(max_level + 1 - n):
                yield build_state(QuantumNumbers(n, k), B)


def check_special_functions() -> tuple[bool, str]:
    worst_poly = 0.0
    for n in range(31):
        for b in range(1, 13):
            for x in KUMMER_X:
                p = kummer_1f1(-n, b, x, method="polynomial")
                s = kummer_1f1(-n, b, x, method="series")
                worst_poly = max(worst_poly, abs(p - s) / max(abs(p), 1e-300))
    worst_gamma = abs(ln_gamma(1.0)) + abs(ln_gamma(2.0))
    for m in range(2, 60):
        # factorials and Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!), from exact integers
        fact = math.log(math.factorial(m))
        half = math.log(math.factorial(2 * m)) - math.log(4 ** m * math.factorial(m)) + 0.5 * math.log(math.pi)
        worst_gamma = max(worst_gamma, abs(ln_gamma(m + 1) / fact - 1.0), abs(ln_gamma(m + 0.5) / half - 1.0))
    ok = worst_poly <= 1e-12 and worst_gamma <= 1e-12
    return ok, f"1F1 paths max rel diff {worst_poly:.2e}; ln_gamma max rel err {worst_gamma:.2e}"


def check_spectrum() -> tuple[bool, str]:
    worst_e = worst_d = 0.0
    for s in _grid_states():
        gap = s.scale ** 2 * s.qn.level
        worst_e = max(worst_e, abs(s.E ** 2 - s.m_e_c2 ** 2 - gap) / s.E ** 2)
        delta_alt = (s.epsilon * (s.E + s.m_e_c2) - 0.5 * (s.qn.k + 1) * s.scale ** 2) / s.scale ** 2
        worst_d = max(worst_d, abs(delta_alt - s.delta) / s.delta)
    return worst_e <= 1e-12 and worst_d <= 1e-12, f"spectrum residual {worst_e:.2e}; delta mismatch {worst_d:.2e}"


def check_normalization() -> tuple[bool, str]:
    worst = max(abs(norm_integral(s) - 1.0) for s in _grid_states())
    return worst <= 1e-10, f"max |norm - 1| = {worst:.2e}"


def check_radial_residuals() -> tuple[bool, str]:
    worst = 0.0
    for s in _grid_states():
        for rho in (0.1, 1.0, 5.0, 20.0):
            worst = max(worst, *(abs(r) for r in radial_residual(s, rho)))
    return worst < 1e-9, f"max relative residual {worst:.2e}"


def check_ode() -> tuple[bool, str]:
    worst = 0.0
    for s in (natural_state(QuantumNumbers(0, 0)), build_state(QuantumNumbers(0, 0), 1.0),
              build_state(QuantumNumbers(2, 1), 1.0)):
        traj = integrate_radial_ode(s, 30.0, 1e-3)
        worst = max(worst, *trajectory_error(s, traj, stride=10))
    s = natural_state(QuantumNumbers(0, 0))
    detuned = integrate_radial_ode(s, 50.0, 1e-3, detune=0.01)
    mag = detuned.normalized_magnitude(s)
    growth = math.inf if detuned.diverged else mag[-1] / mag[np.argmin(np.abs(detuned.rho - 5.0))]
    ok = worst < 1e-6 and growth > 1e3
    return ok, f"RK4 vs closed form {worst:.2e}; detuned growth 5->50 {growth:.2e}"


def check_polarization_oracle() -> tuple[bool, str]:
    worst = 0.0
    worst_full = 0.0
    for n in ORACLE_N:
        for k in ORACLE_K:
            for B in ORACLE_FIELDS:
                s = build_state(QuantumNumbers(n, k), B)
                quad = polarization_quadrature(s)
                closed = edm_closed(s.qn, B, s.epsilon).value
                worst = max(worst, abs(quad - closed) / closed)
                worst_full = max(worst_full, abs(polarization_quadrature(s, convention="full_circle")) / quad)
    ok = worst <= 1e-8 and worst_full <= 1e-14
    return ok, f"quadrature vs closed form {worst:.2e}; full-circle / deficit {worst_full:.2e}"


def check_regime_laws() -> tuple[bool, str]:
    worst = 0.0
    for n, k in ARGMAX_STATES:
        qn = QuantumNumbers(n, k)
        B = 1.0
        scale = magnetic_energy_scale_eV(B)
        for ratio, target in ((1e3, 2.0), (1e-3, 0.5)):
            eps = ratio * scale
            got = edm_value(qn, 4 * B, eps) / edm_value(qn, B, eps)
            worst = max(worst, abs(got / target - 1.0))
    return worst <= 5e-3, f"max deviation of p(4B)/p(B) from 2 or 1/2: {worst:.2e}"


def check_bmax() -> tuple[bool, str]:
    worst = 0.0
    curvature_ok = True
    for n, k in ARGMAX_STATES:
        qn = QuantumNumbers(n, k)
        eps = 2.6e5
        expected = b_max(qn, eps)
        found = numeric_argmax_field(qn, eps, expected / 100, expected * 100)
        worst = max(worst, abs(found / expected - 1.0))
        curvature_ok &= edm_second_difference(qn, expected, eps) < 0
    return worst <= 1e-6 and curvature_ok, f"argmax vs b_max {worst:.2e}; curvature negative: {curvature_ok}"


def check_bohr_magneton() -> tuple[bool, str]:
    s = build_state(QuantumNumbers(0, 0), 1e-10)
    limit = abs(magnetization_quadrature(s) / MU_B - 1.0)
    worst = 0.0
    for n, k in ((0, 0), (1, 2), (3, 0)):
        for B in (1e-10, 1.0, 1e9, 1e10):
            s = build_state(QuantumNumbers(n, k), B)
            worst = max(worst, abs(magnetization_quadrature(s) / MU_B / magnetization_ratio_closed(s) - 1.0))
    return limit <= 1e-6 and worst <= 1e-10, f"weak-field m/mu_B - 1 = {limit:.2e}; finite-field ratio err {worst:.2e}"


CHECKS: tuple[tuple[str, Callable[[], tuple[bool, str]]], ...] = (
    ("special functions", check_special_functions),
    ("spectrum identities", check_spectrum),
    ("normalization", check_normalization),
    ("radial residuals", check_radial_residuals),
    ("ODE cross-check", check_ode),
    ("closed form vs quadrature", check_polarization_oracle),
    ("asymptotic regime laws", check_regime_laws),
    ("maximum field", check_bmax),
    ("Bohr magneton limit", check_bohr_magneton),
)


def run_checks() -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        start = time.perf_counter()
        try:
            passed, detail = check()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(passed), detail, time.perf_counter() - start))
    return results

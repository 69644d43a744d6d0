"""
Special-function kernels: log-gamma, gamma ratios and Kummer's 1F1.

ln_gamma
    Stirling's series with ten Bernoulli terms for x >= 8, downward
    recurrence into [1.5, 2.5) below that, and the Taylor series of
    ln Gamma(1+z) in zeta values on |z| <= 1/2.  The Taylor branch keeps
    full relative accuracy around the two zeros at x = 1 and x = 2, where
    a Lanczos sum followed by a log would lose it.

kummer_1f1
    For a non-positive integer first argument the series is a polynomial;
    its terms are generated by the usual term ratio in exact rational
    arithmetic and the sum is rounded once.  Other arguments are summed as
    a Taylor series in 60-digit decimal arithmetic.  Both routes therefore
    survive the heavy cancellation of alternating terms at large x (double
    precision loses ~1e-2 relative at a=-30, x=50).
"""
from __future__ import annotations

import contextlib
import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286061
_HALF_LN_2PI = 0.91893853320467274178

# B_2 .. B_20
_BERNOULLI = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330),
)
_STIRLING = tuple(float(b / ((2 * j) * (2 * j - 1))) for j, b in enumerate(_BERNOULLI, start=1))
_STIRLING_MIN = 8.0

SERIES_RTOL = 1e-15
SERIES_MAX_TERMS = 10_000
_SERIES_DIGITS = 60

# Test hook: multiplies every Gamma value by (1 + rel); see inject_gamma_fault.
_fault_log_scale = 0.0


def _zeta(s: int, cutoff: int = 20) -> float:
    """Riemann zeta at integer s >= 2 by Euler-Maclaurin summation."""
    terms = [m ** -float(s) for m in range(cutoff - 1, 0, -1)]
    n = float(cutoff)
    terms.append(n ** (1 - s) / (s - 1))
    terms.append(0.5 * n ** -s)
    rising = float(s)
    for j, b in enumerate(_BERNOULLI[:6], start=1):
        terms.append(float(b) / math.factorial(2 * j) * rising * n ** (-s - 2 * j + 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return math.fsum(terms)


_ZETA = {s: _zeta(s) for s in range(2, 80)}


def _ln_gamma_1p(z: float) -> float:
    # ln Gamma(1+z) = -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k,  |z| <= 1/2
    total = -EULER_GAMMA * z
    power = -z  # (-1)^k z^k, starting at k = 1
    for s in range(2, 80):
        power *= -z
        term = _ZETA[s] * power / s
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
    return total


def _ln_gamma_stirling(x: float) -> float:
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for coef in reversed(_STIRLING):
        corr = corr * inv2 + coef
    return (x - 0.5) * math.log(x) - x + _HALF_LN_2PI + corr * inv


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for real x > 0.

    Relative error is below 1e-13 on [0.5, 1e6]; ln_gamma(1) and
    ln_gamma(2) are exactly zero.
    """
    x = float(x)
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"ln_gamma needs a finite x > 0, got {x!r}")
    if x >= _STIRLING_MIN:
        value = _ln_gamma_stirling(x)
    elif x < 0.5:
        value = _ln_gamma_1p(x) - math.log(x)
    elif x < 1.5:
        value = _ln_gamma_1p(x - 1.0)
    elif x < 2.5:
        z = x - 2.0
        value = math.log1p(z) + _ln_gamma_1p(z)
    else:
        shift = math.floor(x - 1.5)
        base = x - shift
        prod = 1.0
        for j in range(shift):
            prod *= base + j
        value = math.log(prod) + math.log1p(base - 2.0) + _ln_gamma_1p(base - 2.0)
    return value + _fault_log_scale


def gamma(x: float) -> float:
    """Gamma(x) for x > 0, via :func:`ln_gamma`."""
    return math.exp(ln_gamma(x))


def gamma_ratio(num: float, den: float) -> float:
    """Gamma(num)/Gamma(den) evaluated in log space."""
    return math.exp(ln_gamma(num) - ln_gamma(den))


@contextlib.contextmanager
def inject_gamma_fault(rel: float = 1e-3) -> Iterator[None]:
    """Scale every Gamma value by (1 + rel) for the duration of the block.

    Test-only: lets the verification suite prove it notices a broken kernel.
    """
    global _fault_log_scale
    saved = _fault_log_scale
    _fault_log_scale = math.log1p(rel)
    try:
        yield
    finally:
        _fault_log_scale = saved


@dataclass(frozen=True)
class KummerParams:
    """Arguments of 1F1(a; b; x), restricted to real x >= 0."""

    a: float
    b: float
    x: float

    def __post_init__(self):
        for name in ("a", "b", "x"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"1F1 argument {name} must be finite")
        if self.b <= 0 and float(self.b).is_integer():
            raise DomainError(f"1F1 has a pole at b = {self.b!r}")
        if self.x < 0:
            raise DomainError(f"1F1 is only provided for x >= 0, got {self.x!r}")

    @property
    def is_polynomial(self) -> bool:
        return self.a <= 0 and float(self.a).is_integer()


def _kummer_polynomial(p: KummerParams) -> float:
    a, b, x = Fraction(p.a), Fraction(p.b), Fraction(p.x)
    degree = -int(p.a)
    term = Fraction(1)
    total = Fraction(1)
    for j in range(degree):
        term = term * (a + j) * x / ((b + j) * (j + 1))
        total += term
    return float(total)


def _kummer_series(p: KummerParams) -> float:
    # Past j_safe every term ratio is below one, so a small term there
    # really is the start of a decreasing tail.
    j_safe = max(-p.a, 0.0) + max(-p.b, 0.0) + p.x * max(1.0, abs(p.a / p.b)) + 1.0
    with decimal.localcontext() as ctx:
        ctx.prec = _SERIES_DIGITS
        a, b, x = decimal.Decimal(p.a), decimal.Decimal(p.b), decimal.Decimal(p.x)
        tol = decimal.Decimal(SERIES_RTOL)
        term = decimal.Decimal(1)
        total = decimal.Decimal(1)
        for j in range(SERIES_MAX_TERMS):
            term = term * (a + j) * x / ((b + j) * (j + 1))
            total += term
            if term == 0 or (j + 1 >= j_safe and abs(term) <= tol * abs(total)):
                return float(total)
    raise ConvergenceError(
        f"1F1({p.a}, {p.b}, {p.x}) did not converge in {SERIES_MAX_TERMS} terms"
    )


def kummer_1f1(a: float, b: float, x: float, *, method: str = "auto") -> float:
    """Confluent hypergeometric function 1F1(a; b; x) for x >= 0.

    ``method`` is ``"auto"``, ``"polynomial"`` (requires a = -n) or
    ``"series"`` (forces the general Taylor route, also for a = -n).
    """
    p = KummerParams(float(a), float(b), float(x))
    if method == "auto":
        method = "polynomial" if p.is_polynomial else "series"
    if method == "polynomial":
        if not p.is_polynomial:
            raise DomainError(f"polynomial route needs a non-positive integer a, got {p.a!r}")
        return _kummer_polynomial(p)
    if method == "series":
        return _kummer_series(p)
    raise ValueError(f"unknown method {method!r}")


def kummer_1f1_derivative(a: float, b: float, x: float) -> float:
    """d/dx 1F1(a; b; x) = (a/b) 1F1(a+1; b+1; x)."""
    if a == 0:
        return 0.0
    return a / b * kummer_1f1(a + 1, b + 1, x)

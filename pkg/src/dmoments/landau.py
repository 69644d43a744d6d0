"""
Relativistic Landau states of the 2+1 dimensional Dirac equation in a
constant field, symmetric gauge.

Conventions
-----------
All energies are in eV.  ``scale`` is sqrt(2 hbar c^2 e B0) (the relativistic
Landau scale, sqrt(2eB0) in natural units) and the radial variable is
rho = e B0 r^2 / 2.  With S = scale, m = m_e c^2 and eps = E - m the coupled
radial system reads

    F1' - (k/(2 rho) + 1/2) F1 + (E + m)/S * F2 / sqrt(rho) = 0
    F2' + ((k+1)/(2 rho) + 1/2) F2 - (E - m)/S * F1 / sqrt(rho) = 0

with chi = exp(i k theta) F1, phi = exp(i (k+1) theta) F2.  Its solution
regular at the origin is

    F1 = N1 rho^(k/2)     exp(-rho/2) 1F1(-n; k+1; rho)
    F2 = N2 rho^((k+1)/2) exp(-rho/2) 1F1(-n; k+2; rho)

with N1/N2 = (k+1) S / eps and E^2 = m^2 + S^2 (n+k+1).  At large rho the
two components behave as rho^(delta-1/2) and rho^delta, delta = n+(k+1)/2;
the asymptotic spinor keeps only those powers and is what the moment
formulas are built on.

Normalisation constants are dimensionless: the plane measure is
d^2x = d rho d theta / (e B0), and ``N2_sq`` is the coefficient that makes
the asymptotic spinor integrate to one against d rho d theta.  The physical
constant is e B0 * N2_sq.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import M_E_C2_EV, magnetic_energy_scale_eV
from .errors import DomainError, InvalidInputError
from .quadrature import QuadratureSettings, integrate_radial
from .special import kummer_1f1, kummer_1f1_derivative, ln_gamma


@dataclass(frozen=True)
class QuantumNumbers:
    """Principal number n and angular-momentum number k, both >= 0.

    Negative k would make (k+1) vanish or flip sign in every moment formula
    and is not supported.
    """

    n: int
    k: int

    def __post_init__(self):
        for name in ("n", "k"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
                raise InvalidInputError(f"quantum number {name} must be an integer >= 0, got {value!r}")

    @property
    def level(self) -> int:
        """n + k + 1, the only combination the energy depends on."""
        return self.n + self.k + 1

    @property
    def two_delta(self) -> int:
        return 2 * self.n + self.k + 1


@dataclass(frozen=True)
class LandauState:
    """A resolved eigenstate and everything derived from it.

    ``on_shell`` is False when ``epsilon`` was supplied by the caller
    instead of following from the spectrum; E is then m + epsilon.
    """

    qn: QuantumNumbers
    B0: float
    m_e_c2: float
    scale: float
    E: float
    epsilon: float
    delta: float
    N1_over_N2: float
    N2_sq: float
    on_shell: bool = field(default=True)

    @property
    def weight(self) -> float:
        """A = (k+1)^2 S^2 / eps^2 = (N1/N2)^2."""
        return self.N1_over_N2 ** 2

    @property
    def N2(self) -> float:
        return math.sqrt(self.N2_sq)

    @property
    def N1(self) -> float:
        return self.N1_over_N2 * self.N2

    @property
    def kinetic_ratio(self) -> float:
        """eps / S."""
        return self.epsilon / self.scale


@dataclass(frozen=True)
class Spinor2:
    chi: complex
    phi: complex


def _spectrum(qn: QuantumNumbers, scale: float, mass: float) -> tuple[float, float]:
    gap = scale * scale * qn.level
    energy = math.sqrt(mass * mass + gap)
    # E - m without cancellation: at 1e-7 T eps/m is ~1e-17.
    kinetic = gap / (energy + mass)
    return energy, kinetic


def energy(qn: QuantumNumbers, B0: float, m_e_c2: float = M_E_C2_EV) -> float:
    """Positive energy eigenvalue (eV).  B0 = 0 is allowed and gives m_e c^2."""
    return _spectrum(qn, magnetic_energy_scale_eV(B0), m_e_c2)[0]


def kinetic_energy(qn: QuantumNumbers, B0: float, m_e_c2: float = M_E_C2_EV) -> float:
    """E - m_e c^2 (eV), computed without subtracting nearly equal numbers."""
    return _spectrum(qn, magnetic_energy_scale_eV(B0), m_e_c2)[1]


def _make_state(qn, B0, scale, mass, epsilon):
    if not scale > 0:
        raise InvalidInputError(f"a Landau state needs a positive field, got scale {scale!r}")
    E, eps = _spectrum(qn, scale, mass)
    on_shell = epsilon is None
    if not on_shell:
        eps = float(epsilon)
        if not (eps > 0 and math.isfinite(eps)):
            raise InvalidInputError(f"kinetic energy must be positive and finite, got {epsilon!r}")
        E = mass + eps
    two_delta = qn.two_delta
    ratio = (qn.k + 1) * scale / eps
    weight = ratio * ratio
    n2_sq = 1.0 / (2.0 * math.pi * math.exp(ln_gamma(two_delta)) * (weight + two_delta))
    return LandauState(
        qn=qn, B0=B0, m_e_c2=mass, scale=scale, E=E, epsilon=eps,
        delta=0.5 * two_delta, N1_over_N2=ratio, N2_sq=n2_sq, on_shell=on_shell,
    )


def build_state(
    qn: QuantumNumbers,
    B0: float,
    m_e_c2: float = M_E_C2_EV,
    *,
    epsilon: float | None = None,
) -> LandauState:
    """Build the Landau state (n, k) in a field of B0 tesla.

    Passing ``epsilon`` (eV) evaluates the same wavefunction shape at an
    externally chosen kinetic energy, which is how the moment formulas are
    applied to atomic data.
    """
    if not (math.isfinite(B0) and B0 > 0):
        raise InvalidInputError(f"magnetic field must be positive, got {B0!r}")
    return _make_state(qn, float(B0), magnetic_energy_scale_eV(B0), float(m_e_c2), epsilon)


def natural_state(
    qn: QuantumNumbers,
    two_eB: float = 1.0,
    mass: float = 1.0,
    *,
    epsilon: float | None = None,
) -> LandauState:
    """Test hook: the state in natural units hbar = c = e = 1.

    ``B0`` then holds e*B0 = two_eB/2 and the scale is sqrt(two_eB).
    """
    return _make_state(qn, 0.5 * two_eB, math.sqrt(two_eB), float(mass), epsilon)


def _phase(state: LandauState, theta, t):
    return np.exp(1j * (state.qn.k * theta - state.E * t))


def spinor_exact(state: LandauState, rho: float, theta: float = 0.0, t: float = 0.0) -> Spinor2:
    """Full regular solution at (rho, theta); t is in units of hbar/eV."""
    if rho < 0:
        raise DomainError(f"rho must be >= 0, got {rho!r}")
    F1, F2 = radial_functions(state, rho)
    phase = _phase(state, theta, t)
    return Spinor2(complex(phase * F1), complex(phase * np.exp(1j * theta) * F2))


def spinor_asymptotic(state: LandauState, rho, theta=0.0, t=0.0) -> Spinor2:
    """Large-rho form of the spinor; accepts numpy arrays for rho and theta."""
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0):
        raise DomainError("rho must be >= 0")
    if state.delta < 0.5 and np.any(rho == 0):
        raise DomainError("asymptotic spinor diverges at rho = 0 for delta < 1/2")
    envelope = state.N2 * np.exp(-0.5 * rho) * _phase(state, theta, t)
    chi = envelope * state.N1_over_N2 * rho ** (state.delta - 0.5)
    phi = envelope * np.exp(1j * np.asarray(theta)) * rho ** state.delta
    if chi.ndim == 0:
        return Spinor2(complex(chi), complex(phi))
    return Spinor2(chi, phi)


def radial_functions(state: LandauState, rho: float) -> tuple[float, float]:
    """Closed-form (F1, F2) at rho, normalised with the state's N1, N2."""
    n, k = state.qn.n, state.qn.k
    rho = float(rho)
    decay = math.exp(-0.5 * rho)
    F1 = state.N1 * rho ** (0.5 * k) * decay * kummer_1f1(-n, k + 1, rho)
    F2 = state.N2 * rho ** (0.5 * (k + 1)) * decay * kummer_1f1(-n, k + 2, rho)
    return F1, F2


def _couplings(state: LandauState, detune: float) -> tuple[float, float]:
    """(E+m)/S and (E-m)/S with E scaled by (1 + detune)."""
    up = (state.E * (1.0 + detune) + state.m_e_c2) / state.scale
    down = (state.epsilon + detune * state.E) / state.scale
    return up, down


def norm_integral(state: LandauState, settings: QuadratureSettings = QuadratureSettings()) -> float:
    """Integral of |chi|^2 + |phi|^2 of the asymptotic spinor over the plane.

    Equals one by construction of N2_sq; the radial part is done by
    quadrature and the (theta-independent) angular part contributes 2 pi.
    """

    def density(rho):
        s = spinor_asymptotic(state, rho)
        return np.abs(s.chi) ** 2 + np.abs(s.phi) ** 2

    radial = integrate_radial(
        density, settings.upper_limit(state.delta), settings.rel_tol, settings.max_refinements
    )
    return 2.0 * math.pi * radial


def radial_residual(state: LandauState, rho: float, *, detune: float = 0.0) -> tuple[float, float]:
    """Relative residuals of the two radial equations at rho.

    Each residual is divided by the largest of the three terms in its
    equation, so an exact solution gives round-off sized numbers whatever
    the normalisation.  ``detune`` rescales E by (1 + detune) in the
    couplings while keeping the closed-form functions.
    """
    if not rho > 0:
        raise DomainError(f"rho must be > 0, got {rho!r}")
    n, k = state.qn.n, state.qn.k
    up, down = _couplings(state, detune)
    sq = math.sqrt(rho)
    decay = math.exp(-0.5 * rho)
    m1 = kummer_1f1(-n, k + 1, rho)
    m2 = kummer_1f1(-n, k + 2, rho)
    dm1 = kummer_1f1_derivative(-n, k + 1, rho)
    dm2 = kummer_1f1_derivative(-n, k + 2, rho)
    p1 = rho ** (0.5 * k)
    p2 = rho ** (0.5 * (k + 1))
    F1 = state.N1 * p1 * decay * m1
    F2 = state.N2 * p2 * decay * m2
    dF1 = state.N1 * p1 * decay * ((0.5 * k / rho - 0.5) * m1 + dm1)
    dF2 = state.N2 * p2 * decay * ((0.5 * (k + 1) / rho - 0.5) * m2 + dm2)

    terms1 = (dF1, -(0.5 * k / rho + 0.5) * F1, up * F2 / sq)
    terms2 = (dF2, (0.5 * (k + 1) / rho + 0.5) * F2, -down * F1 / sq)
    return tuple(math.fsum(ts) / max(abs(t) for t in ts) for ts in (terms1, terms2))


@dataclass(frozen=True)
class RadialTrajectory:
    rho: np.ndarray
    F1: np.ndarray
    F2: np.ndarray
    diverged: bool

    def normalized_magnitude(self, state: LandauState) -> np.ndarray:
        """|F| relative to the bound-state envelope rho^delta exp(-rho/2).

        Stays O(1) along a bound state and grows like exp(rho) along the
        non-normalisable branch.
        """
        rho = self.rho
        env = state.N2 * np.exp(-0.5 * rho)
        a = self.F1 / (env * state.N1_over_N2 * rho ** (state.delta - 0.5))
        b = self.F2 / (env * rho ** state.delta)
        return np.hypot(a, b)


def integrate_radial_ode(
    state: LandauState,
    rho_max: float = 30.0,
    step: float = 1e-3,
    *,
    detune: float = 0.0,
    rho0: float = 1e-6,
) -> RadialTrajectory:
    """Classical RK4 integration of the radial system from rho0 to rho_max.

    The independent variable is ln(rho) with fixed ``step``: the 1/rho
    coefficients make the system stiff near rho0 in rho itself.  Initial
    values come from the closed form at rho0.  Overflow stops the run and
    sets ``diverged`` rather than raising.
    """
    if not (rho_max > rho0 > 0 and step > 0):
        raise InvalidInputError("need rho_max > rho0 > 0 and step > 0")
    k = state.qn.k
    up, down = _couplings(state, detune)
    a1 = 0.5 * k
    a2 = 0.5 * (k + 1)

    def rhs(t, y1, y2):
        rho = math.exp(t)
        sq = math.sqrt(rho)
        return ((a1 + 0.5 * rho) * y1 - up * sq * y2,
                -(a2 + 0.5 * rho) * y2 + down * sq * y1)

    t0 = math.log(rho0)
    span = math.log(rho_max) - t0
    nsteps = max(1, round(span / step))
    h = span / nsteps
    y1, y2 = radial_functions(state, rho0)
    ts = [t0]
    out1 = [y1]
    out2 = [y2]
    diverged = False
    for i in range(nsteps):
        t = t0 + i * h
        k11, k12 = rhs(t, y1, y2)
        k21, k22 = rhs(t + 0.5 * h, y1 + 0.5 * h * k11, y2 + 0.5 * h * k12)
        k31, k32 = rhs(t + 0.5 * h, y1 + 0.5 * h * k21, y2 + 0.5 * h * k22)
        k41, k42 = rhs(t + h, y1 + h * k31, y2 + h * k32)
        y1 += h / 6.0 * (k11 + 2.0 * k21 + 2.0 * k31 + k41)
        y2 += h / 6.0 * (k12 + 2.0 * k22 + 2.0 * k32 + k42)
        if not (abs(y1) < 1e300 and abs(y2) < 1e300):
            diverged = True
            break
        ts.append(t0 + (i + 1) * h)
        out1.append(y1)
        out2.append(y2)
    return RadialTrajectory(np.exp(np.array(ts)), np.array(out1), np.array(out2), diverged)


def trajectory_error(state: LandauState, traj: RadialTrajectory, stride: int = 1) -> tuple[float, float]:
    """max|numeric - closed| / max|closed| for F1 and F2 over the trajectory."""
    idx = np.arange(0, traj.rho.size, stride)
    closed = np.array([radial_functions(state, r) for r in traj.rho[idx]])
    errors = []
    for col, numeric in enumerate((traj.F1[idx], traj.F2[idx])):
        ref = closed[:, col]
        errors.append(float(np.max(np.abs(numeric - ref)) / np.max(np.abs(ref))))
    return errors[0], errors[1]

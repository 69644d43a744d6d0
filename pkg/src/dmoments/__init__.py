"""Electric and magnetic dipole moments of a relativistic electron in Landau levels."""

__version__ = "0.1.0"

from .constants import CODATA2018, LAMBDA_C_CM, MU_B, magnetic_energy_scale_eV
from .densities import densities, magnetization_quadrature, polarization_quadrature
from .errors import ConvergenceError, DomainError, InvalidInputError, QuadratureError, RegimeError
from .landau import LandauState, QuantumNumbers, build_state, energy, kinetic_energy, norm_integral
from .moments import (
    MomentResult,
    b_max,
    classify_regime,
    edm_asymptotic_high,
    edm_asymptotic_low,
    edm_closed,
    mdm_closed,
    mdm_finite_field,
)
from .special import gamma_ratio, kummer_1f1, ln_gamma

__all__ = [
    "CODATA2018", "LAMBDA_C_CM", "MU_B", "magnetic_energy_scale_eV",
    "densities", "magnetization_quadrature", "polarization_quadrature",
    "ConvergenceError", "DomainError", "InvalidInputError", "QuadratureError", "RegimeError",
    "LandauState", "QuantumNumbers", "build_state", "energy", "kinetic_energy", "norm_integral",
    "MomentResult", "b_max", "classify_regime", "edm_asymptotic_high", "edm_asymptotic_low",
    "edm_closed", "mdm_closed", "mdm_finite_field",
    "gamma_ratio", "kummer_1f1", "ln_gamma",
]

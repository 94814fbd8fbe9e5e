"""Klein-Gordon hydrogen energy levels with second-order corrections from
time-space noncommutativity, the 1S-2S transition shift, and the resulting
bound on theta."""

__version__ = "0.1.0"

from .constants import CODATA2018, EnergyQuantity, PhysicalConstants, convert
from .exceptions import (AccuracyError, ConfigurationError, CriticalCouplingError, DegeneracyError,
                         DivergentIntegralError, DomainError, NCKGError, PoleError, UnboundedError)
from .hydrogen import QuantumState, RadialBasis, a_of, basis, energy, nu_of, radial_value
from .matrix_elements import (RadialMoment, b_coeff, cos2_element, cos_element, cross_radial, f_closed,
                              f_numeric, radial_moment)
from .perturbation import (NCParameter, ShiftBreakdown, deformed_potential, first_order_shift, h1_element,
                           psi1_coefficients, second_order_shift, total_energy)
from .phenomenology import (TransitionReport, bound_theta, reproduction_report, transition_correction,
                            transition_report)

__all__ = [
    "AccuracyError", "CODATA2018", "ConfigurationError", "CriticalCouplingError", "DegeneracyError",
    "DivergentIntegralError", "DomainError", "EnergyQuantity", "NCKGError", "NCParameter", "PhysicalConstants",
    "PoleError", "QuantumState", "RadialBasis", "RadialMoment", "ShiftBreakdown", "TransitionReport",
    "UnboundedError", "a_of", "b_coeff", "basis", "bound_theta", "convert", "cos2_element", "cos_element",
    "cross_radial", "deformed_potential", "energy", "f_closed", "f_numeric", "first_order_shift",
    "h1_element", "nu_of", "psi1_coefficients", "radial_moment", "radial_value", "reproduction_report",
    "second_order_shift", "total_energy", "transition_correction", "transition_report",
]

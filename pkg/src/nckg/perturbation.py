"""Second-order energy shifts from time-space noncommutativity.

With theta^{0j} = theta * delta_{j3}, theta^{0j} x_j = theta r cos(theta_polar).
The perturbation entering the radial equation splits into

    order 1:  2 theta e^4 (E cos/r^3 + e^2 cos/r^4)
    order 2:  theta^2 e^6 (5E cos^2/r^5 - 4 e^2 cos^2/r^6 - E/r^5 + e^2/r^6)

Two evaluation modes are provided.

``literal``
    The published shift formula term by term: E-difference denominators,
    diagonal <r^-k> used for the l -> l +- 1 couplings, continued values of
    divergent moments, and the S-state specialisation without the B terms.

``corrected``
    The radial equation is an eigenvalue problem for E^2 in which the
    perturbation enters with the same sign as the Coulomb term 2 E alpha / r.
    Rayleigh-Schroedinger theory is applied to E^2 (perturbation -H),
    denominators become E_n^2 - E_k^2, cross-l radial integrals are computed
    between the actual neighbouring states, and delta E = delta(E^2) / (2E).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import CODATA2018, EnergyQuantity, PhysicalConstants, theta_from_mev2, theta_to_mev2
from .exceptions import ConfigurationError, DegeneracyError, DomainError
from .hydrogen import QuantumState, basis
from .matrix_elements import b_coeff, cos2_element, cos_element, cross_radial, f_closed

MODES = ("literal", "corrected")


@dataclass(frozen=True)
class NCParameter:
    """Time-space noncommutativity theta^{0j} = theta delta_{j3}, stored in MeV^-2."""

    theta: float
    axis: int = 3

    def __post_init__(self):
        if not self.theta >= 0.0:
            raise DomainError(f"theta must be non-negative, got {self.theta!r}")
        if self.axis != 3:
            raise ConfigurationError("only theta along the third axis is supported")

    @classmethod
    def from_value(cls, value: float, unit: str = "MeV-2") -> "NCParameter":
        return cls(theta_to_mev2(value, unit))

    def in_unit(self, unit: str) -> float:
        return theta_from_mev2(self.theta, unit)

    def contract(self, r, cos_theta):
        """theta^{0j} x_j."""
        return self.theta * np.asarray(r) * np.asarray(cos_theta)


def _theta(theta) -> float:
    if isinstance(theta, NCParameter):
        return theta.theta
    return NCParameter(float(theta)).theta


def _check_mode(mode):
    if mode not in MODES:
        raise ConfigurationError(f"mode must be one of {MODES}, got {mode!r}")


@dataclass(frozen=True)
class PerturbationTerm:
    # term = coefficient * angular(cos) / r**radial_power
    radial_power: int
    angular: str
    coefficient: float

    def evaluate(self, r, cos_theta):
        c = np.asarray(cos_theta, dtype=float)
        ang = {"1": np.ones_like(c), "cos": c, "cos2": c * c}[self.angular]
        return self.coefficient * ang / np.asarray(r, dtype=float) ** self.radial_power


@dataclass(frozen=True)
class PerturbationOperator:
    order: int
    terms: tuple

    def evaluate(self, r, cos_theta):
        return sum(term.evaluate(r, cos_theta) for term in self.terms)


def order1_operator(E: float, theta, constants: PhysicalConstants = CODATA2018) -> PerturbationOperator:
    t, e2 = _theta(theta), constants.e2
    return PerturbationOperator(1, (
        PerturbationTerm(3, "cos", 2.0 * t * e2 * e2 * E),
        PerturbationTerm(4, "cos", 2.0 * t * e2 * e2 * e2),
    ))


def order2_operator(E: float, theta, constants: PhysicalConstants = CODATA2018) -> PerturbationOperator:
    t, e2 = _theta(theta), constants.e2
    e6 = e2 * e2 * e2
    return PerturbationOperator(2, (
        PerturbationTerm(5, "cos2", 5.0 * t * t * e6 * E),
        PerturbationTerm(6, "cos2", -4.0 * t * t * e6 * e2),
        PerturbationTerm(5, "1", -t * t * e6 * E),
        PerturbationTerm(6, "1", t * t * e6 * e2),
    ))


def perturbation_operator(E: float, theta, constants: PhysicalConstants = CODATA2018):
    """Full perturbation as written in the radial equation, from theta^{0j} x_j directly."""
    t = NCParameter(_theta(theta))
    e = constants.e

    def h(r, cos_theta):
        r = np.asarray(r, dtype=float)
        tx = t.contract(r, cos_theta)
        return (2 * E * e**4 / r**4 * tx + 2 * e**6 / r**5 * tx + 5 * E * e**6 / r**5 * (tx / r) ** 2
                - E * e**6 / r**5 * t.theta**2 - 4 * e**8 / r**6 * (tx / r) ** 2 + e**8 / r**6 * t.theta**2)
    return h


def deformed_potential(r, cos_theta, theta, constants: PhysicalConstants = CODATA2018):
    """Deformed Coulomb potential a_0 truncated after theta^2."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("deformed_potential requires r > 0")
    t = NCParameter(_theta(theta))
    e = constants.e
    tx = t.contract(r, cos_theta)
    out = -e / r - e**3 / r**4 * tx + e**5 / (2 * r**5) * (t.theta**2 - 5 * (tx / r) ** 2)
    return out if out.ndim else float(out)


def _radial_pair(k, bra, ket, mode, constants, continued):
    """<bra| r^-k |ket> radial part under the given mode; records continuations."""
    if mode == "literal":
        moment = f_closed(k, ket.n_r, ket.l, constants)
        if not moment.convergent:
            continued.add(f"f({k}) at n_r={ket.n_r}, l={ket.l}")
        return moment.value
    value, convergent = cross_radial(k, (bra.n_r, bra.l), (ket.n_r, ket.l), constants, allow_continuation=True)
    if not convergent:
        continued.add(f"<n_r={bra.n_r},l={bra.l}|r^-{k}|n_r={ket.n_r},l={ket.l}>")
    return float(value)


def _h1(bra, ket, theta, mode, constants, continued):
    ang = cos_element(bra, ket)
    if ang == 0.0:
        return 0.0
    if mode == "literal" and bra.n_r != ket.n_r:
        raise DomainError("literal mode only couples states with the same n_r")
    E = basis(ket.n_r, ket.l, constants).E
    e2 = constants.e2
    radial = E * _radial_pair(3, bra, ket, mode, constants, continued) + e2 * _radial_pair(4, bra, ket, mode, constants, continued)
    return 2.0 * _theta(theta) * e2 * e2 * ang * radial


def h1_element(bra: QuantumState, ket: QuantumState, theta, mode: str = "literal",
               constants: PhysicalConstants = CODATA2018) -> float:
    """<bra| H^(1) |ket> with the energy of ``ket`` in the operator."""
    _check_mode(mode)
    return _h1(bra, ket, theta, mode, constants, set())


def first_order_shift(state: QuantumState, theta, constants: PhysicalConstants = CODATA2018) -> float:
    """<psi0| H^(1) |psi0>, identically zero because cos(theta) has no diagonal element."""
    return h1_element(state, state, theta, "literal", constants)


def _neighbours(state):
    out = []
    if state.l >= 1 and abs(state.m) <= state.l - 1:
        out.append(state.with_l(state.l - 1))
    out.append(state.with_l(state.l + 1))
    return out


def psi1_coefficients(state: QuantumState, theta, mode: str = "literal",
                      constants: PhysicalConstants = CODATA2018) -> dict:
    """First-order admixture amplitudes keyed by neighbour l (l-1 absent for S states).

    Amplitudes are O(theta). Literal mode follows the published expression
    (E differences, diagonal moments); corrected mode uses the E^2 problem.
    """
    _check_mode(mode)
    t = _theta(theta)
    b0 = basis(state.n_r, state.l, constants)
    e2 = constants.e2
    continued = set()
    out = {}
    for nb in _neighbours(state):
        bn = basis(nb.n_r, nb.l, constants)
        if mode == "literal":
            denom = b0.E - bn.E
            if denom == 0.0:
                raise DegeneracyError(f"E({state.n_r},{state.l}) equals E({nb.n_r},{nb.l})")
            b = b_coeff(state.l, state.m) if nb.l < state.l else b_coeff(state.l + 1, state.m)
            radial = b0.E * _radial_pair(3, nb, state, mode, constants, continued) + e2 * _radial_pair(4, nb, state, mode, constants, continued)
            out[nb.l] = t * e2 * e2 * b * radial / denom
        else:
            denom = b0.E ** 2 - bn.E ** 2
            if denom == 0.0:
                raise DegeneracyError(f"E({state.n_r},{state.l}) equals E({nb.n_r},{nb.l})")
            out[nb.l] = -_h1(nb, state, t, mode, constants, continued) / denom
    return out


@dataclass(frozen=True)
class ShiftBreakdown:
    state: QuantumState
    theta: float
    mode: str
    first_order: float
    mixing: float
    direct: float
    total: float
    # per-neighbour pieces of ``mixing`` as (neighbour l, value)
    mixing_terms: tuple = ()
    continued: tuple = ()
    s_state_specialization: bool = False
    unit: str = "MeV"

    def scaled_by_theta2(self) -> "ShiftBreakdown":
        """Same breakdown per unit theta^2 (theta in MeV^-2)."""
        t2 = self.theta * self.theta
        if t2 == 0.0:
            raise DomainError("cannot normalise a theta = 0 breakdown")
        return ShiftBreakdown(self.state, 1.0, self.mode, self.first_order / t2, self.mixing / t2,
                              self.direct / t2, self.total / t2,
                              tuple((l, v / t2) for l, v in self.mixing_terms), self.continued,
                              self.s_state_specialization, self.unit)


def _direct_bracket(state, mode, constants, continued, with_b_terms=True):
    b0 = basis(state.n_r, state.l, constants)
    e2 = constants.e2
    f5 = _radial_pair(5, state, state, "literal", constants, continued)
    f6 = _radial_pair(6, state, state, "literal", constants, continued)
    out = -b0.E * f5 + e2 * f6
    if with_b_terms:
        out += cos2_element(state, state) * (5.0 * b0.E * f5 - 4.0 * e2 * f6)
    return out


def second_order_shift(state: QuantumState, theta, mode: str = "literal",
                       constants: PhysicalConstants = CODATA2018,
                       s_state_specialization: bool = True) -> ShiftBreakdown:
    """Energy shift through theta^2 for ``state``.

    In literal mode with ``s_state_specialization`` (the default) an l = 0
    state keeps only -E f(5) + e^2 f(6); pass False to apply the general
    formula, B_1^0 terms included.
    """
    _check_mode(mode)
    t = _theta(theta)
    b0 = basis(state.n_r, state.l, constants)
    e2 = constants.e2
    a3 = e2 * e2 * e2
    continued = set()
    terms = []
    first = first_order_shift(state, t, constants)

    if mode == "literal":
        specialised = state.l == 0 and s_state_specialization
        if specialised:
            direct = t * t * a3 * _direct_bracket(state, mode, constants, continued, with_b_terms=False)
        else:
            direct = t * t * a3 * _direct_bracket(state, mode, constants, continued)
            f3 = _radial_pair(3, state, state, mode, constants, continued)
            f4 = _radial_pair(4, state, state, mode, constants, continued)
            radial_sq = (b0.E * f3 + e2 * f4) ** 2
            for nb in _neighbours(state):
                bn = basis(nb.n_r, nb.l, constants)
                denom = b0.E - bn.E
                if denom == 0.0:
                    raise DegeneracyError(f"E({state.n_r},{state.l}) equals E({nb.n_r},{nb.l})")
                b = b_coeff(state.l, state.m) if nb.l < state.l else b_coeff(state.l + 1, state.m)
                terms.append((nb.l, t * t * a3 * 8.0 * e2 * (b * b / denom) * radial_sq))
        unit = "MeV^2 (radial-equation units, read as MeV)"
    else:
        specialised = False
        two_e = 2.0 * b0.E
        for nb in _neighbours(state):
            bn = basis(nb.n_r, nb.l, constants)
            denom = b0.E ** 2 - bn.E ** 2
            if denom == 0.0:
                raise DegeneracyError(f"E({state.n_r},{state.l}) equals E({nb.n_r},{nb.l})")
            v = _h1(nb, state, t, mode, constants, continued)
            terms.append((nb.l, v * v / denom / two_e))
        direct = -t * t * a3 * _direct_bracket(state, mode, constants, continued) / two_e
        unit = "MeV"

    mixing = sum(v for _, v in terms)
    return ShiftBreakdown(
        state=state, theta=t, mode=mode, first_order=first, mixing=mixing, direct=direct,
        total=mixing + direct, mixing_terms=tuple(terms), continued=tuple(sorted(continued)),
        s_state_specialization=specialised, unit=unit,
    )


def total_energy(state: QuantumState, theta, mode: str = "literal",
                 constants: PhysicalConstants = CODATA2018) -> EnergyQuantity:
    """E_{n_r l} + Delta E^nc in MeV."""
    shift = second_order_shift(state, theta, mode, constants)
    return EnergyQuantity(basis(state.n_r, state.l, constants).E + shift.total, "MeV")


def shift_value(state, theta, mode="literal", constants=CODATA2018) -> float:
    return second_order_shift(state, theta, mode, constants).total

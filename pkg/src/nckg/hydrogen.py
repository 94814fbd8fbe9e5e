"""Unperturbed Klein-Gordon Coulomb basis.

States are labelled by the radial quantum number ``n_r`` (number of nodes),
so the principal number is ``N = n_r + l + 1``; 1S is (0, 0), 2S is (1, 0)
and 2P is (0, 1).

Radial functions are normalised in the plain measure, ``int R^2 dr = 1``,
with x = 2 a r:

    R(r) = sqrt(a / (n_r + nu + 1)) * sqrt(n_r! / Gamma(n_r + 2 nu + 2))
           * x**(nu + 1) * exp(-x / 2) * L_{n_r}^{2 nu + 1}(x)
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import math
import re

import numpy as np

from .constants import CODATA2018, EnergyQuantity, PhysicalConstants
from .exceptions import ConfigurationError, CriticalCouplingError, DomainError
from .special import laguerre

L_LETTERS = "SPDFGHIK"


@dataclass(frozen=True, order=True)
class QuantumState:
    n_r: int
    l: int
    m: int = 0

    def __post_init__(self):
        for name in ("n_r", "l", "m"):
            if int(getattr(self, name)) != getattr(self, name):
                raise DomainError(f"{name} must be an integer")
        if self.n_r < 0 or self.l < 0:
            raise DomainError(f"n_r and l must be non-negative, got n_r={self.n_r}, l={self.l}")
        if abs(self.m) > self.l:
            raise DomainError(f"|m| must not exceed l, got l={self.l}, m={self.m}")

    @property
    def principal(self) -> int:
        return self.n_r + self.l + 1

    @property
    def label(self) -> str:
        return f"{self.principal}{L_LETTERS[self.l]}" if self.l < len(L_LETTERS) else f"N{self.principal}l{self.l}"

    @classmethod
    def from_label(cls, label: str, m: int = 0) -> "QuantumState":
        """Parse a spectroscopic label such as ``"2S"`` or ``"3d"``."""
        match = re.fullmatch(r"\s*(\d+)\s*([A-Za-z])\s*", label)
        if not match:
            raise ConfigurationError(f"cannot parse state label {label!r}")
        principal = int(match.group(1))
        letter = match.group(2).upper()
        if letter not in L_LETTERS:
            raise ConfigurationError(f"unknown orbital letter in {label!r}")
        l = L_LETTERS.index(letter)
        n_r = principal - l - 1
        if n_r < 0:
            raise ConfigurationError(f"{label!r}: l={l} is not allowed for N={principal}")
        return cls(n_r, l, m)

    def with_l(self, l: int) -> "QuantumState":
        return QuantumState(self.n_r, l, self.m)


@dataclass(frozen=True)
class RadialBasis:
    """Derived quantities for one (n_r, l) level."""

    n_r: int
    l: int
    nu: float
    E: float
    a: float
    # E - m_e, evaluated without cancellation
    binding: float
    log_norm: float
    constants: PhysicalConstants

    def x_of_r(self, r):
        return 2.0 * self.a * np.asarray(r, dtype=float)

    @property
    def laguerre_order(self) -> float:
        return 2.0 * self.nu + 1.0

    @property
    def effective_n(self) -> float:
        """n_r + nu + 1, the relativistic analogue of the principal number."""
        return self.n_r + self.nu + 1.0


def nu_of(l: int, alpha: float) -> float:
    """Effective order nu = -1/2 + sqrt((l + 1/2)^2 - alpha^2)."""
    half = l + 0.5
    if not alpha < half:
        raise CriticalCouplingError(f"alpha={alpha!r} >= l + 1/2 = {half}: nu would be complex")
    root = math.sqrt(half * half - alpha * alpha)
    # l - alpha^2 / (root + l + 1/2) avoids the cancellation in root - 1/2 for S states
    return l - alpha * alpha / (root + half)


def _energy_formula(n_r: int, l: int, constants: PhysicalConstants) -> float:
    alpha, m = constants.alpha, constants.m_e
    half_l = l + 0.5
    if not alpha < half_l:
        raise CriticalCouplingError(f"alpha={alpha!r} >= l + 1/2 = {half_l}: nu would be complex")
    s = math.sqrt(half_l * half_l - alpha * alpha)
    half_n = n_r + 0.5
    return m * (half_n + s) / math.sqrt(half_n * half_n + half_l * half_l + 2.0 * half_n * s)


@lru_cache(maxsize=4096)
def basis(n_r: int, l: int, constants: PhysicalConstants = CODATA2018) -> RadialBasis:
    if n_r < 0 or l < 0:
        raise DomainError(f"invalid level n_r={n_r}, l={l}")
    alpha, m = constants.alpha, constants.m_e
    nu = nu_of(l, alpha)
    E = _energy_formula(n_r, l, constants)
    n_eff = n_r + nu + 1.0
    hyp = math.hypot(n_eff, alpha)
    # sqrt(m^2 - E^2) and E - m rewritten with E = m n_eff / hyp
    a = m * alpha / hyp
    binding = -m * alpha * alpha / (hyp * (hyp + n_eff))
    log_norm = 0.5 * (math.log(a) - math.log(n_eff) + math.lgamma(n_r + 1) - math.lgamma(n_r + 2.0 * nu + 2.0)) if a > 0 else -math.inf
    return RadialBasis(n_r=n_r, l=l, nu=nu, E=E, a=a, binding=binding, log_norm=log_norm, constants=constants)


def energy(n_r: int, l: int, constants: PhysicalConstants = CODATA2018) -> EnergyQuantity:
    """Unperturbed level E_{n_r, l} in MeV."""
    return EnergyQuantity(basis(n_r, l, constants).E, "MeV")


def a_of(n_r: int, l: int, constants: PhysicalConstants = CODATA2018) -> float:
    """Decay parameter a = sqrt(m_e^2 - E^2) in MeV."""
    return basis(n_r, l, constants).a


def radial_value(state, r, constants: PhysicalConstants = CODATA2018):
    """R_{n_r l}(r) for r > 0 (r in MeV^-1). Accepts scalar or array ``r``."""
    b = basis(state.n_r, state.l, constants)
    ra = np.asarray(r, dtype=float)
    if np.any(ra <= 0.0):
        raise DomainError("radial_value requires r > 0")
    if b.a == 0.0:
        raise DomainError("no bound state at alpha = 0")
    x = 2.0 * b.a * ra
    log_env = b.log_norm + (b.nu + 1.0) * np.log(x) - 0.5 * x
    out = np.exp(log_env) * laguerre(b.n_r, b.laguerre_order, x)
    return out if ra.ndim else float(out)

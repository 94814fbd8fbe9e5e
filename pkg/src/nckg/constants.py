"""Physical constants and energy-unit conversions (natural units, hbar = c = 1).

Every other module takes its alpha and electron mass from a
:class:`PhysicalConstants` instance; :data:`CODATA2018` is the default.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
import math

from .exceptions import ConfigurationError

# CODATA 2018 recommended values
ALPHA_CODATA2018 = 7.2973525693e-3
ELECTRON_MASS_MEV_CODATA2018 = 0.51099895000
# h in eV s (exact since the 2019 SI redefinition)
PLANCK_EV_S = 4.135667696e-15

ENERGY_UNITS = ("MeV", "GeV", "eV", "Hz")
THETA_UNITS = ("MeV-2", "GeV-2")


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable constant set.

    ``alpha`` doubles as ``e**2`` (Gaussian natural units), so the charge
    ``e`` is ``sqrt(alpha)``.
    """

    alpha: float = ALPHA_CODATA2018
    m_e: float = ELECTRON_MASS_MEV_CODATA2018
    mev_per_hz: float = PLANCK_EV_S * 1e-6
    label: str = "CODATA 2018"

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise ConfigurationError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        if not self.m_e > 0.0:
            raise ConfigurationError(f"m_e must be positive, got {self.m_e!r}")
        if not self.mev_per_hz > 0.0:
            raise ConfigurationError(f"mev_per_hz must be positive, got {self.mev_per_hz!r}")

    @property
    def e2(self) -> float:
        return self.alpha

    @property
    def e(self) -> float:
        return math.sqrt(self.alpha)

    def with_alpha(self, alpha: float) -> "PhysicalConstants":
        return replace(self, alpha=alpha, label=f"{self.label}, alpha={alpha!r}")

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "alpha": self.alpha,
            "m_e_MeV": self.m_e,
            "MeV_per_Hz": self.mev_per_hz,
            "Hz_per_MeV": 1.0 / self.mev_per_hz,
        }


CODATA2018 = PhysicalConstants()


def _mev_factor(unit: str, constants: PhysicalConstants) -> float:
    if unit == "MeV":
        return 1.0
    if unit == "GeV":
        return 1e3
    if unit == "eV":
        return 1e-6
    if unit == "Hz":
        return constants.mev_per_hz
    raise ConfigurationError(f"unsupported energy unit {unit!r}; expected one of {ENERGY_UNITS}")


@dataclass(frozen=True)
class EnergyQuantity:
    value: float
    unit: str = "MeV"
    # multiplicative factors applied so far, as (from, to, factor)
    trail: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.unit not in ENERGY_UNITS:
            raise ConfigurationError(f"unsupported energy unit {self.unit!r}; expected one of {ENERGY_UNITS}")

    def to(self, unit: str, constants: PhysicalConstants = CODATA2018) -> "EnergyQuantity":
        return convert(self, unit, constants)

    def __float__(self):
        return float(self.value)


def conversion_factor(source: str, target: str, constants: PhysicalConstants = CODATA2018) -> float:
    """Factor f such that ``value[target] = f * value[source]``."""
    if source == target:
        _mev_factor(source, constants)
        return 1.0
    return _mev_factor(source, constants) / _mev_factor(target, constants)


def convert(q: EnergyQuantity, target_unit: str, constants: PhysicalConstants = CODATA2018) -> EnergyQuantity:
    """Rescale ``q`` into ``target_unit``; the factor is appended to ``q.trail``.

    >>> convert(EnergyQuantity(1.0, "GeV"), "MeV").value
    1000.0
    """
    factor = conversion_factor(q.unit, target_unit, constants)
    return EnergyQuantity(q.value * factor, target_unit, q.trail + ((q.unit, target_unit, factor),))


def theta_to_mev2(value: float, unit: str) -> float:
    """Convert a noncommutativity parameter (inverse energy squared) to MeV^-2."""
    if unit == "MeV-2":
        return float(value)
    if unit == "GeV-2":
        # 1 GeV^-2 = (1e3 MeV)^-2
        return float(value) * 1e-6
    raise ConfigurationError(f"unsupported theta unit {unit!r}; expected one of {THETA_UNITS}")


def theta_from_mev2(value: float, unit: str) -> float:
    if unit == "MeV-2":
        return float(value)
    if unit == "GeV-2":
        return float(value) * 1e6
    raise ConfigurationError(f"unsupported theta unit {unit!r}; expected one of {THETA_UNITS}")

"""Angular and radial matrix elements.

Angular side: B_l^m coefficients and the cos / cos^2 selection rules between
spherical harmonics. Radial side: f(k) = <r^-k> for k = 3..6 from the
closed forms, from quadrature, and cross-level integrals between states of
different l (different nu and a).

S and P states make some of these integrals diverge at r = 0. The closed
forms and the Gamma series still return finite numbers there (the analytic
continuation in nu); such values are marked ``convergent=False`` and callers
have to ask for them explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from .constants import CODATA2018, PhysicalConstants
from .exceptions import DivergentIntegralError, DomainError, PoleError
from .hydrogen import QuantumState, basis
from .special import integrate_halfline, laguerre, laguerre_coefficients

MOMENT_ORDERS = (3, 4, 5, 6)


def b_coeff(l: int, m: int) -> float:
    """B_l^m = sqrt((l+m)(l-m) / ((2l+1)(2l-1))), with B_0^m = 0."""
    if abs(m) > l:
        raise DomainError(f"|m| must not exceed l, got l={l}, m={m}")
    if l == 0:
        return 0.0
    return math.sqrt((l + m) * (l - m) / ((2 * l + 1) * (2 * l - 1)))


def cos_element(bra: QuantumState, ket: QuantumState) -> float:
    """<l m| cos(theta) |l' m'>: nonzero only for l = l' +- 1 and m = m'."""
    if bra.m != ket.m:
        return 0.0
    if bra.l == ket.l + 1:
        return b_coeff(ket.l + 1, ket.m)
    if bra.l == ket.l - 1:
        return b_coeff(ket.l, ket.m)
    return 0.0


def cos2_element(bra: QuantumState, ket: QuantumState) -> float:
    """<l m| cos^2(theta) |l' m'>: nonzero only for l - l' in {0, +-2} and m = m'."""
    if bra.m != ket.m:
        return 0.0
    lp, m = ket.l, ket.m
    if bra.l == lp + 2:
        return b_coeff(lp + 1, m) * b_coeff(lp + 2, m)
    if bra.l == lp - 2:
        return b_coeff(lp, m) * b_coeff(lp - 1, m)
    if bra.l == lp:
        return b_coeff(lp + 1, m) ** 2 + b_coeff(lp, m) ** 2
    return 0.0


def angular_quadrature(bra: QuantumState, ket: QuantumState, power: int, n_theta: int = 48, n_phi: int = 24) -> float:
    """Oracle: \\int conj(Y_bra) cos^power Y_ket dOmega by 2D product quadrature.

    Gauss-Legendre in cos(theta) and the periodic trapezoid rule in phi; both
    are exact for the polynomial/trigonometric integrands at l <= 10.
    """
    from scipy.special import sph_harm_y

    u, wu = np.polynomial.legendre.leggauss(n_theta)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    polar = np.arccos(u)[:, None]
    yb = sph_harm_y(bra.l, bra.m, polar, phi[None, :])
    yk = sph_harm_y(ket.l, ket.m, polar, phi[None, :])
    integrand = np.conj(yb) * yk * (u[:, None] ** power)
    value = np.sum(wu[:, None] * integrand) * (2.0 * np.pi / n_phi)
    return float(value.real)


@dataclass(frozen=True)
class RadialMoment:
    k: int
    n_r: int
    l: int
    value: float
    convergent: bool
    method: str
    note: str = ""


def _moment_convergent(k, nu):
    return 2.0 * nu + 2.0 - k > -1.0


def _check_k(k):
    if k not in MOMENT_ORDERS:
        raise DomainError(f"moment order must be one of {MOMENT_ORDERS}, got {k!r}")


def _require_poles_clear(factors):
    for name, value in factors:
        if value == 0.0:
            raise PoleError(f"closed form has a zero denominator factor {name}", factor=name)


@lru_cache(maxsize=4096)
def f_closed(k: int, n_r: int, l: int, constants: PhysicalConstants = CODATA2018) -> RadialMoment:
    """Closed-form <r^-k> for k in 3..6."""
    _check_k(k)
    b = basis(n_r, l, constants)
    nu, a, n = b.nu, b.a, n_r
    N = n + nu + 1.0
    if k == 3:
        _require_poles_clear((("nu", nu), ("2nu+1", 2 * nu + 1)))
        value = 2 * a**3 / (nu * (2 * nu + 1) * N) * (1 + n / (nu + 1))
    elif k == 4:
        _require_poles_clear((("2nu-1", 2 * nu - 1), ("nu", nu), ("2nu+1", 2 * nu + 1)))
        value = 4 * a**4 / ((2 * nu - 1) * nu * (2 * nu + 1) * N) * (
            1 + 3 * n / (nu + 1) + 3 * n * (n - 1) / ((nu + 1) * (2 * nu + 3))
        )
    elif k == 5:
        _require_poles_clear((("2nu-1", 2 * nu - 1), ("nu-1", nu - 1), ("nu", nu), ("2nu+1", 2 * nu + 1)))
        value = 4 * a**5 / ((2 * nu - 1) * (nu - 1) * nu * (2 * nu + 1) * N) * (
            1
            + 6 * n / (nu + 1)
            + 15 * n * (n - 1) / ((nu + 1) * (2 * nu + 3))
            + 5 * n * (n - 1) * (n - 2) / ((nu + 1) * (2 * nu + 3) * (nu + 2))
        )
    else:
        _require_poles_clear(
            (("2nu-3", 2 * nu - 3), ("2nu-1", 2 * nu - 1), ("nu-1", nu - 1), ("nu", nu), ("2nu+1", 2 * nu + 1))
        )
        value = 8 * a**6 / ((2 * nu - 3) * (2 * nu - 1) * (nu - 1) * nu * (2 * nu + 1) * N) * (
            1
            + 10 * n / (nu + 1)
            + 45 * n * (n - 1) / ((nu + 1) * (2 * nu + 3))
            + 35 * n * (n - 1) * (n - 2) / ((nu + 1) * (2 * nu + 3) * (nu + 2))
            + 35 * n * (n - 1) * (n - 2) * (n - 3) / (2 * (nu + 1) * (2 * nu + 3) * (nu + 2) * (2 * nu + 5))
        )
    convergent = _moment_convergent(k, nu)
    note = "" if convergent else "analytic continuation of divergent integral"
    return RadialMoment(k, n_r, l, value, convergent, "closed", note)


def radial_moment(k: int, n_r: int, l: int, constants: PhysicalConstants = CODATA2018,
                  allow_continuation: bool = False) -> float:
    """Value of f(k); divergent cases raise unless ``allow_continuation``."""
    moment = f_closed(k, n_r, l, constants)
    if not moment.convergent and not allow_continuation:
        raise DivergentIntegralError(
            f"<r^-{k}> diverges for n_r={n_r}, l={l} (nu={basis(n_r, l, constants).nu!r}); "
            "pass allow_continuation=True for the continued value"
        )
    return moment.value


def f_numeric(k: int, n_r: int, l: int, constants: PhysicalConstants = CODATA2018) -> RadialMoment:
    """<r^-k> from the defining integral by generalized Gauss-Laguerre quadrature."""
    _check_k(k)
    b = basis(n_r, l, constants)
    s = 2.0 * b.nu + 2.0 - k
    if not s > -1.0:
        raise DivergentIntegralError(f"<r^-{k}> diverges at the origin for n_r={n_r}, l={l}: exponent {s!r} <= -1")
    order = b.laguerre_order
    log_pref = ((k - 1) * math.log(2.0) + k * math.log(b.a) + math.lgamma(n_r + 1)
                - math.log(b.effective_n) - math.lgamma(n_r + 2.0 * b.nu + 2.0))
    integral = integrate_halfline(lambda x: laguerre(n_r, order, x) ** 2, s)
    return RadialMoment(k, n_r, l, math.exp(log_pref) * integral, True, "quadrature")


def _cross_setup(k, bra, ket, constants):
    b1 = basis(bra[0], bra[1], constants)
    b2 = basis(ket[0], ket[1], constants)
    big_a = b1.a + b2.a
    s = b1.nu + b2.nu + 2.0 - k
    log_pref = (b1.log_norm + b2.log_norm + (b1.nu + 1.0) * math.log(2.0 * b1.a)
                + (b2.nu + 1.0) * math.log(2.0 * b2.a) - (s + 1.0) * math.log(big_a))
    return b1, b2, big_a, s, log_pref


def cross_radial_series(k: int, bra: tuple, ket: tuple, constants: PhysicalConstants = CODATA2018) -> float:
    """\\int R_bra R_ket r^-k dr as a finite Gamma series.

    Exact wherever the integral converges and equal to its analytic
    continuation elsewhere. ``bra`` and ``ket`` are (n_r, l) pairs.
    """
    b1, b2, big_a, s, log_pref = _cross_setup(k, bra, ket, constants)
    c1 = laguerre_coefficients(b1.n_r, b1.laguerre_order) * (2.0 * b1.a / big_a) ** np.arange(b1.n_r + 1)
    c2 = laguerre_coefficients(b2.n_r, b2.laguerre_order) * (2.0 * b2.a / big_a) ** np.arange(b2.n_r + 1)
    poly = np.convolve(c1, c2)
    total = 0.0
    for j, c in enumerate(poly):
        arg = s + 1.0 + j
        if arg <= 0.0 and arg == math.floor(arg):
            raise PoleError(f"Gamma({arg}) pole in continued radial integral", factor=f"Gamma(s+{j + 1})")
        total += c * math.gamma(arg)
    return float(math.exp(log_pref) * total)


@lru_cache(maxsize=4096)
def cross_radial(k: int, bra: tuple, ket: tuple, constants: PhysicalConstants = CODATA2018,
                 allow_continuation: bool = False) -> tuple:
    """(value, convergent) for \\int R_bra R_ket r^-k dr between arbitrary levels.

    Convergent integrals go through quadrature. Divergent ones raise unless
    ``allow_continuation``, in which case the Gamma-series continuation is
    returned with ``convergent=False``.
    """
    b1, b2, big_a, s, log_pref = _cross_setup(k, bra, ket, constants)
    if s > -1.0:
        def g(t):
            return (laguerre(b1.n_r, b1.laguerre_order, 2.0 * b1.a * t / big_a)
                    * laguerre(b2.n_r, b2.laguerre_order, 2.0 * b2.a * t / big_a))
        return math.exp(log_pref) * integrate_halfline(g, s), True
    if not allow_continuation:
        raise DivergentIntegralError(
            f"radial integral r^-{k} between {bra} and {ket} diverges at the origin (exponent {s!r})"
        )
    return cross_radial_series(k, bra, ket, constants), False

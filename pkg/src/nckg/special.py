"""Special functions for the relativistic radial integrals.

Associated Laguerre polynomials of real order, terminating confluent
hypergeometric series, the closed-form integral of a squared terminating
series against ``x**(nu-1) exp(-x)``, and generalized Gauss-Laguerre
quadrature on the half line.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import math

import numpy as np
from scipy.special import roots_genlaguerre

from .exceptions import AccuracyError, DivergentIntegralError, DomainError

QUADRATURE_ORDERS = (40, 80, 160, 320)
QUADRATURE_RTOL = 1e-11


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1)."""
    out = 1.0
    for j in range(n):
        out *= x + j
    return out


def _check_laguerre_args(n, nu_order):
    if int(n) != n or n < 0:
        raise DomainError(f"Laguerre degree must be a non-negative integer, got {n!r}")
    if not nu_order > -1.0:
        raise DomainError(f"Laguerre order must exceed -1, got {nu_order!r}")


def laguerre(n: int, nu_order: float, x):
    """L_n^{nu_order}(x) by the upward three-term recurrence.

    ``x`` may be a scalar or an array; the result has the same shape.
    """
    _check_laguerre_args(n, nu_order)
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0.0):
        raise DomainError("Laguerre argument must be non-negative")
    p_prev = np.ones_like(xa)
    if n == 0:
        return p_prev if xa.ndim else float(p_prev)
    p = nu_order + 1.0 - xa
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1 + nu_order - xa) * p - (k + nu_order) * p_prev) / (k + 1)
    return p if xa.ndim else float(p)


def laguerre_coefficients(n: int, nu_order: float) -> np.ndarray:
    """Power-series coefficients of L_n^{nu_order}, lowest degree first."""
    _check_laguerre_args(n, nu_order)
    c = np.empty(n + 1)
    c[0] = math.exp(math.lgamma(n + nu_order + 1) - math.lgamma(n + 1) - math.lgamma(nu_order + 1))
    for j in range(n):
        c[j + 1] = -c[j] * (n - j) / ((nu_order + j + 1) * (j + 1))
    return c


def hyp_terminating(n: int, gamma_param: float, x: float) -> float:
    """F(-n; gamma; x), the terminating confluent hypergeometric series.

    The n+1 terms are summed in exact rational arithmetic on the binary
    values of ``gamma_param`` and ``x``, so the only rounding is the final
    conversion to float.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if not gamma_param > 0.0:
        raise DomainError(f"gamma must be positive, got {gamma_param!r}")
    g = Fraction(gamma_param)
    xf = Fraction(float(x))
    term = Fraction(1)
    total = Fraction(1)
    for j in range(int(n)):
        term = term * (j - n) * xf / ((g + j) * (j + 1))
        total += term
    return float(total)


def integral_F_squared(n: int, gamma_param: float, nu_exp: float) -> float:
    r"""Closed form of \int_0^\infty x^{nu-1} e^{-x} F(-n; gamma; x)^2 dx.

    n! Gamma(nu) / (gamma)_n times the finite brace sum whose j-th term is

        n!/(n-j)! * prod_{i=-j}^{j-1} (gamma - nu + i) / ((j!)^2 (gamma)_j)
    """
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if not gamma_param > 0.0:
        raise DomainError(f"gamma must be positive, got {gamma_param!r}")
    if not nu_exp > 0.0:
        raise DivergentIntegralError(f"integral diverges at x=0 for nu={nu_exp!r} <= 0")
    d = gamma_param - nu_exp
    term = 1.0
    braces = 1.0
    for j in range(int(n)):
        term *= (n - j) * (d - j - 1) * (d + j) / ((j + 1) ** 2 * (gamma_param + j))
        braces += term
    log_pref = math.lgamma(n + 1) + math.lgamma(nu_exp) + math.lgamma(gamma_param) - math.lgamma(gamma_param + n)
    return math.exp(log_pref) * braces


@lru_cache(maxsize=256)
def _rule(order: int, s: float):
    x, w = roots_genlaguerre(order, s)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def quadrature_rule(order: int, s: float = 0.0):
    """Nodes and weights integrating x**s * exp(-x) * p(x) exactly for deg p < 2*order."""
    if not s > -1.0:
        raise DivergentIntegralError(f"weight exponent must exceed -1, got {s!r}")
    return _rule(int(order), float(s))


def integrate_halfline(g, s: float = 0.0, orders=QUADRATURE_ORDERS, rtol: float = QUADRATURE_RTOL,
                       atol: float = 0.0) -> float:
    """\\int_0^inf x^s e^{-x} g(x) dx with order escalation.

    ``g`` must accept a numpy array of nodes. Returns the first estimate
    that agrees with its predecessor to ``rtol``; raises
    :class:`AccuracyError` carrying the last two estimates otherwise.
    """
    if not s > -1.0:
        raise DivergentIntegralError(f"weight exponent must exceed -1, got {s!r}")
    previous = None
    previous_pair = (None, None)
    for order in orders:
        x, w = quadrature_rule(order, s)
        current = float(np.dot(w, g(x)))
        if previous is not None and abs(current - previous) <= max(rtol * abs(current), atol):
            return current
        previous_pair = (previous, current)
        previous = current
    raise AccuracyError(
        f"half-line quadrature did not converge to rtol={rtol} by order {orders[-1]}",
        estimates=previous_pair,
    )

from fractions import Fraction
import math

import mpmath
import numpy as np
import pytest

from nckg.exceptions import AccuracyError, DivergentIntegralError, DomainError
from nckg.special import (hyp_terminating, integral_F_squared, integrate_halfline, laguerre,
                          laguerre_coefficients, ln_gamma, quadrature_rule)


def test_ln_gamma_identities():
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)


def test_ln_gamma_recursion_oracle():
    # Gamma(7.3) = 6.3 * 5.3 * 4.3 * 3.3 * 2.3 * 1.3 * Gamma(1.3)
    log_expected = math.log(math.gamma(1.3)) + sum(math.log(1.3 + j) for j in range(6))
    assert ln_gamma(7.3) == pytest.approx(log_expected, rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0])
def test_ln_gamma_domain(x):
    with pytest.raises(DomainError):
        ln_gamma(x)


def test_laguerre_low_degrees():
    assert laguerre(0, 3.7, 12.0) == 1.0
    assert laguerre(1, 0.5, 2.0) == -0.5
    x = np.linspace(0, 10, 7)
    np.testing.assert_array_equal(laguerre(1, 1.37, x), 2.37 - x)


def test_laguerre_matches_hypergeometric_form():
    n, order, x = 5, 1.37, 3.1
    ratio = math.gamma(n + 1) * math.gamma(order + 1) / math.gamma(n + order + 1)
    assert laguerre(n, order, x) * ratio == pytest.approx(hyp_terminating(n, order + 1, x), rel=1e-13)


def test_laguerre_against_mpmath():
    for n in (3, 8, 15):
        for x in (0.3, 7.0, 33.0):
            assert laguerre(n, 0.5, x) == pytest.approx(float(mpmath.laguerre(n, 0.5, x)), rel=1e-11)


def test_laguerre_domain():
    with pytest.raises(DomainError):
        laguerre(2, -1.0, 1.0)
    with pytest.raises(DomainError):
        laguerre(-1, 0.5, 1.0)
    with pytest.raises(DomainError):
        laguerre(2, 0.5, -1.0)


def test_laguerre_coefficients_reproduce_recurrence():
    c = laguerre_coefficients(6, 2.3)
    x = np.linspace(0, 20, 11)
    np.testing.assert_allclose(np.polynomial.polynomial.polyval(x, c), laguerre(6, 2.3, x), rtol=1e-11, atol=1e-9)


def test_hyp_terminating_small_n():
    assert hyp_terminating(0, 2.5, 9.0) == 1.0
    assert hyp_terminating(1, 2.5, 1.0) == pytest.approx(1 - 1 / 2.5, rel=1e-16)


def test_hyp_terminating_coefficient_oracle():
    n, g, x = 3, 2.4, 1.7
    coeffs = []
    for j in range(n + 1):
        num = Fraction(1)
        for i in range(j):
            num *= Fraction(-n + i) / ((Fraction(g) + i) * (i + 1))
        coeffs.append(num)
    horner = Fraction(0)
    for c in reversed(coeffs):
        horner = horner * Fraction(x) + c
    assert hyp_terminating(n, g, x) == float(horner)


def test_hyp_terminating_domain():
    with pytest.raises(DomainError):
        hyp_terminating(2, 0.0, 1.0)


def test_integral_F_squared_n0_is_gamma():
    assert integral_F_squared(0, 3.3, 2.7) == pytest.approx(math.gamma(2.7), rel=1e-14)


def test_integral_F_squared_n1_by_hand():
    # F(-1; 3; x) = 1 - x/3; int x e^-x (1 - x/3)^2 = 1 - 4/3 + 6/9 = 1/3
    assert integral_F_squared(1, 3.0, 2.0) == pytest.approx(1.0 / 3.0, rel=1e-15)


def _mp_integral(n, g, nu):
    def f(x):
        return x ** (nu - 1) * mpmath.exp(-x) * mpmath.hyp1f1(-n, g, x) ** 2
    return float(mpmath.quad(f, [0, 1, 10, mpmath.inf]))


@pytest.mark.parametrize("n,g,nu", [(2, 4.8, 3.2), (4, 1.5, 0.5), (6, 6.0, 2.1)])
def test_integral_F_squared_quadrature_oracle(n, g, nu):
    mpmath.mp.dps = 30
    assert integral_F_squared(n, g, nu) == pytest.approx(_mp_integral(n, g, nu), rel=1e-10)


def test_integral_F_squared_divergent():
    with pytest.raises(DivergentIntegralError):
        integral_F_squared(2, 2.0, 0.0)


def test_integrate_halfline_basics():
    assert integrate_halfline(lambda x: np.ones_like(x), 0.0) == pytest.approx(1.0, rel=1e-14)
    assert integrate_halfline(lambda x: np.ones_like(x), 2.5) == pytest.approx(math.gamma(3.5), rel=1e-13)


def test_integrate_halfline_matches_closed_form():
    # L_2^{1.8} = Gamma(4.8) / (2! Gamma(2.8)) F(-2; 2.8; x)
    ratio = math.gamma(4.8) / (2.0 * math.gamma(2.8))
    quad = integrate_halfline(lambda x: laguerre(2, 1.8, x) ** 2, 2.8)
    assert quad == pytest.approx(ratio ** 2 * integral_F_squared(2, 2.8, 3.8), rel=1e-12)


def test_integrate_halfline_non_polynomial():
    # int_0^inf x^0.5 e^-x / (1 + x) dx, smooth integrand
    expected = float(mpmath.quad(lambda x: mpmath.sqrt(x) * mpmath.exp(-x) / (1 + x), [0, mpmath.inf]))
    assert integrate_halfline(lambda x: 1.0 / (1.0 + x), 0.5, rtol=1e-7) == pytest.approx(expected, rel=1e-7)


def test_integrate_halfline_errors():
    with pytest.raises(DivergentIntegralError):
        integrate_halfline(lambda x: x, -1.0)
    with pytest.raises(AccuracyError) as info:
        integrate_halfline(lambda x: np.cos(40 * x), 0.0, orders=(4, 5))
    assert len(info.value.estimates) == 2


@pytest.mark.parametrize("order,s", [(10, 0.0), (40, 0.0), (40, -0.4), (40, 2.3)])
def test_quadrature_monomial_exactness(order, s):
    x, w = quadrature_rule(order, s)
    for k in range(2 * order):
        exact = math.exp(math.lgamma(k + s + 1))
        assert np.dot(w, x ** k) == pytest.approx(exact, rel=1e-12), k

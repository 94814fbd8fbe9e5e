import math

import mpmath
import numpy as np
import pytest

from nckg.constants import CODATA2018
from nckg.exceptions import ConfigurationError, CriticalCouplingError, DomainError
from nckg.hydrogen import QuantumState, a_of, basis, energy, nu_of, radial_value
from nckg.selfcheck import radial_overlap

ALPHA = CODATA2018.alpha
M = CODATA2018.m_e
SMALL = CODATA2018.with_alpha(1e-4)


def test_nu_examples():
    assert nu_of(3, 0.0) == 3.0
    mpmath.mp.dps = 40
    a = mpmath.mpf(ALPHA)
    exact0 = -mpmath.mpf(1) / 2 + mpmath.sqrt(mpmath.mpf(1) / 4 - a * a)
    assert nu_of(0, ALPHA) == pytest.approx(float(exact0), rel=1e-15)
    exact1 = -mpmath.mpf(1) / 2 + mpmath.sqrt(mpmath.mpf(9) / 4 - a * a)
    assert nu_of(1, ALPHA) == pytest.approx(float(exact1), rel=1e-15)


def test_critical_coupling():
    with pytest.raises(CriticalCouplingError):
        nu_of(0, 0.5)
    with pytest.raises(DomainError):
        basis(0, 0, CODATA2018.with_alpha(0.6))


def test_ground_state_closed_forms():
    b = basis(0, 0)
    s = math.sqrt(0.25 - ALPHA**2)
    expected_E = M * (0.5 + s) / math.sqrt(0.25 + 0.25 + 2 * 0.5 * s)
    assert b.E == pytest.approx(expected_E, rel=1e-15)
    assert b.a == pytest.approx(math.sqrt(M**2 - expected_E**2), rel=1e-6)
    assert b.a == pytest.approx(M * ALPHA / math.hypot(b.nu + 1, ALPHA), rel=1e-15)
    assert b.binding == pytest.approx(b.E - M, rel=1e-7)
    assert energy(0, 0).unit == "MeV"
    assert a_of(0, 0) == b.a


def test_free_limit():
    b = basis(2, 1, CODATA2018.with_alpha(0.0))
    assert b.E == M
    assert b.a == 0.0
    assert b.nu == 1.0
    with pytest.raises(DomainError):
        radial_value(QuantumState(2, 1), 1.0, CODATA2018.with_alpha(0.0))


@pytest.mark.parametrize("n_r,l", [(0, 0), (1, 0), (0, 1), (2, 1), (3, 2)])
def test_nonrelativistic_limit(n_r, l):
    N = n_r + l + 1
    b = basis(n_r, l, SMALL)
    assert b.binding == pytest.approx(-M * 1e-8 / (2 * N * N), rel=1e-7)
    assert b.a == pytest.approx(M * 1e-4 / N, rel=1e-7)


def test_binding_increases_with_level():
    for l in range(3):
        energies = [basis(n, l).E for n in range(6)]
        assert all(x < y for x, y in zip(energies, energies[1:]))
    assert all(basis(0, l).E < M for l in range(4))


def test_fine_structure_splitting():
    # 2S and 2P split at relative order alpha^2 of the binding, ratio -> 2 alpha^2 / 3
    ratio = abs(basis(0, 1).E - basis(1, 0).E) / abs(basis(1, 0).E - M)
    assert ratio == pytest.approx(2 * ALPHA**2 / 3, rel=1e-3)
    assert basis(1, 0).E < basis(0, 1).E


@pytest.mark.parametrize("n_r,l", [(0, 0), (1, 0), (3, 0), (2, 1), (5, 2), (4, 3)])
def test_node_count(n_r, l):
    st = QuantumState(n_r, l)
    r = np.geomspace(1e-4, 50 * (n_r + l + 1), 2000) / basis(n_r, l).a
    values = radial_value(st, r)
    assert np.count_nonzero(np.diff(np.sign(values)) != 0) == n_r


@pytest.mark.parametrize("n_r,l", [(0, 0), (1, 0), (0, 1), (3, 2)])
def test_normalization(n_r, l):
    assert radial_overlap(n_r, n_r, l) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("l", [0, 1, 2])
def test_klein_gordon_orthogonality(l):
    # The conserved inner product of the Coulomb problem is weighted by E + E' - 2 V
    e0, e1 = basis(0, l).E, basis(1, l).E
    w = lambda r: e0 + e1 + 2 * ALPHA / r
    scale = e0 + e1
    assert abs(radial_overlap(0, 1, l, weight=w)) / scale < 1e-9


def test_plain_overlap_is_order_alpha_squared():
    # Consequence of the weighted identity: (E+E') <R|R'> = -2 alpha <R|1/r|R'>
    e0, e1 = basis(0, 0).E, basis(1, 0).E
    plain = radial_overlap(0, 1, 0)
    inv_r = radial_overlap(0, 1, 0, weight=lambda r: 1.0 / r)
    assert plain == pytest.approx(-2 * ALPHA * inv_r / (e0 + e1), rel=1e-6)
    assert 1e-6 < abs(plain) < 1e-4


def test_radial_value_domain():
    with pytest.raises(DomainError):
        radial_value(QuantumState(0, 0), 0.0)
    assert isinstance(radial_value(QuantumState(0, 0), 100.0), float)


def test_labels():
    assert QuantumState(0, 0).label == "1S"
    assert QuantumState(1, 0).label == "2S"
    assert QuantumState(0, 1).label == "2P"
    assert QuantumState.from_label("3d", 2) == QuantumState(0, 2, 2)
    assert QuantumState.from_label(" 4F ").principal == 4
    for bad in ("1P", "2X", "S2", ""):
        with pytest.raises(ConfigurationError):
            QuantumState.from_label(bad)


def test_state_validation():
    with pytest.raises(DomainError):
        QuantumState(0, 1, 2)
    with pytest.raises(DomainError):
        QuantumState(-1, 0)

import json

import pytest

from nckg.constants import CODATA2018, EnergyQuantity, convert
from nckg.exceptions import DomainError, UnboundedError
from nckg.hydrogen import QuantumState
from nckg.phenomenology import (ONE_S, PUBLISHED_FREQUENCY_HZ, TWO_S, bound_theta, reproduction_report,
                                transition_coefficient, transition_correction, transition_report)


@pytest.mark.parametrize("mode", ["literal", "corrected"])
def test_zero_theta_and_same_state(mode):
    assert transition_correction(ONE_S, TWO_S, 0.0, mode).value == 0.0
    assert transition_correction(TWO_S, TWO_S, 5.0, mode).value == 0.0


@pytest.mark.parametrize("mode", ["literal", "corrected"])
def test_swap_invariance(mode):
    assert transition_coefficient(ONE_S, TWO_S, mode) == transition_coefficient(TWO_S, ONE_S, mode)


def test_precision_scaling():
    b1 = bound_theta(ONE_S, TWO_S, 34.0)
    b4 = bound_theta(ONE_S, TWO_S, 136.0)
    assert b4 == pytest.approx(2 * b1, rel=1e-14)


def test_precision_units_agree():
    mev = convert(EnergyQuantity(34.0, "Hz"), "MeV").value
    assert bound_theta(ONE_S, TWO_S, EnergyQuantity(mev, "MeV")) == pytest.approx(bound_theta(ONE_S, TWO_S, 34.0), rel=1e-14)


@pytest.mark.parametrize("mode", ["literal", "corrected"])
def test_bound_saturates_precision(mode):
    rep = transition_report(ONE_S, TWO_S, 34.0, mode)
    at_bound = transition_correction(ONE_S, TWO_S, rep.theta_bound_mev2, mode).value
    assert at_bound == pytest.approx(rep.precision_mev, rel=1e-12)
    assert rep.bound_scale_gev ** -2 == pytest.approx(rep.theta_bound_gev2, rel=1e-14)
    assert len(rep.unit_trail) == 4
    assert rep.unit_trail[-1]["output"] == rep.theta_bound_gev2


def test_unbounded_and_bad_precision():
    with pytest.raises(UnboundedError):
        transition_report(ONE_S, ONE_S)
    with pytest.raises(DomainError):
        transition_report(ONE_S, TWO_S, 0.0)


def test_other_transitions():
    p = QuantumState(0, 1)
    assert bound_theta(ONE_S, p, 34.0, "corrected") > 0


def test_report_contents():
    rep = reproduction_report()
    assert rep["experiment"]["frequency_Hz"] == PUBLISHED_FREQUENCY_HZ == 2446061102474851
    assert rep["experiment"]["uncertainty_Hz"] == 34
    assert set(rep["modes"]) == {"literal", "corrected"}
    for mode in ("literal", "corrected"):
        shifts = rep["modes"][mode]["shifts_per_theta2"]
        assert set(shifts) == {"1S", "2S"}
        assert shifts["1S"]["continued_moments"]
    assert "general_formula_variant" in rep["modes"]["literal"]
    ratio = rep["comparison"]["ratio_corrected_over_literal"]["transition_coefficient"]
    lit = rep["modes"]["literal"]["transition"]["coefficient"]
    cor = rep["modes"]["corrected"]["transition"]["coefficient"]
    assert ratio == pytest.approx(cor / lit, rel=1e-15)
    flags = {a["flag"] for a in rep["anomalies"]}
    assert {"divergent_moments_continued", "experimental_frequency_digits", "dimensional_mismatch"} <= flags


def test_report_single_mode():
    rep = reproduction_report(("corrected",))
    assert set(rep["modes"]) == {"corrected"}
    assert "comparison" not in rep or not rep["comparison"]


def test_report_json_deterministic():
    one = json.dumps(reproduction_report(), sort_keys=True)
    two = json.dumps(reproduction_report(), sort_keys=True)
    assert one == two

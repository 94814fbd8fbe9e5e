"""1S-2S transition correction, theta bound and the reproduction report."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
import math

from .constants import CODATA2018, EnergyQuantity, PhysicalConstants, convert
from .exceptions import DomainError, UnboundedError
from .hydrogen import QuantumState, basis
from .matrix_elements import f_closed
from .perturbation import MODES, _check_mode, _theta, second_order_shift

# Published 1S-2S frequency and its uncertainty, used verbatim
PUBLISHED_FREQUENCY_HZ = 2446061102474851
PUBLISHED_UNCERTAINTY_HZ = 34
# Same digits with "2466" leading, as measured in 2000 (same +-34 Hz)
REFERENCE_FREQUENCY_HZ = 2466061102474851
# "636,737 theta^2 (MeV)^3" under both decimal-separator readings
PUBLISHED_COEFFICIENT_TEXT = "636,737 theta^2 (Mev)^3"
PUBLISHED_COEFFICIENT_READINGS = {"decimal_comma": 636.737, "thousands_separator": 636737.0}
PUBLISHED_BOUND_SCALE_GEV = 8.0
PUBLISHED_BOUND_GEV2 = PUBLISHED_BOUND_SCALE_GEV ** -2

ONE_S = QuantumState(0, 0, 0)
TWO_S = QuantumState(1, 0, 0)


def transition_correction(a: QuantumState, b: QuantumState, theta, mode: str = "literal",
                          constants: PhysicalConstants = CODATA2018) -> EnergyQuantity:
    """|Delta E(a) - Delta E(b)| in MeV at the given theta."""
    _check_mode(mode)
    t = _theta(theta)
    if a == b:
        return EnergyQuantity(0.0, "MeV")
    da = second_order_shift(a, t, mode, constants).total
    db = second_order_shift(b, t, mode, constants).total
    return EnergyQuantity(abs(da - db), "MeV")


def transition_coefficient(a: QuantumState, b: QuantumState, mode: str = "literal",
                           constants: PhysicalConstants = CODATA2018) -> float:
    """Transition correction per unit theta^2, theta in MeV^-2 (MeV per MeV^-4)."""
    return transition_correction(a, b, 1.0, mode, constants).value


def _precision(precision, constants):
    """(precision in Hz, precision in MeV)."""
    q = precision if isinstance(precision, EnergyQuantity) else EnergyQuantity(float(precision), "Hz")
    if not q.value > 0.0:
        raise DomainError(f"precision must be positive, got {q.value!r}")
    return convert(q, "Hz", constants).value, convert(q, "MeV", constants).value


@dataclass(frozen=True)
class TransitionReport:
    state_a: str
    state_b: str
    mode: str
    coefficient: float
    coefficient_unit: str
    experimental_precision_hz: float
    precision_mev: float
    theta_bound_mev2: float
    theta_bound_gev2: float
    # theta_bound = (bound_scale_gev GeV)^-2
    bound_scale_gev: float
    constants_used: dict
    unit_trail: tuple = field(default=())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["unit_trail"] = [dict(step) for step in self.unit_trail]
        return d


def transition_report(a: QuantumState, b: QuantumState, precision=PUBLISHED_UNCERTAINTY_HZ, mode: str = "literal",
                      constants: PhysicalConstants = CODATA2018) -> TransitionReport:
    coef = transition_coefficient(a, b, mode, constants)
    if coef == 0.0:
        raise UnboundedError(f"transition {a.label}-{b.label} has a zero theta^2 coefficient")
    hz, prec_mev = _precision(precision, constants)
    theta_mev2 = math.sqrt(prec_mev / coef)
    theta_gev2 = theta_mev2 * 1e6
    unit = "MeV^2 per MeV^-4 (read as MeV per MeV^-4)" if mode == "literal" else "MeV per MeV^-4"
    trail = (
        {"step": "precision Hz -> MeV", "from": "Hz", "to": "MeV", "factor": constants.mev_per_hz,
         "input": hz, "output": prec_mev},
        {"step": "theta_max^2 = precision / coefficient", "from": "MeV", "to": "MeV^-4",
         "factor": 1.0 / coef, "input": prec_mev, "output": prec_mev / coef},
        {"step": "square root", "from": "MeV^-4", "to": "MeV^-2", "factor": None,
         "input": prec_mev / coef, "output": theta_mev2},
        {"step": "MeV^-2 -> GeV^-2", "from": "MeV^-2", "to": "GeV^-2", "factor": 1e6,
         "input": theta_mev2, "output": theta_gev2},
    )
    return TransitionReport(
        state_a=a.label, state_b=b.label, mode=mode, coefficient=coef, coefficient_unit=unit,
        experimental_precision_hz=hz, precision_mev=prec_mev, theta_bound_mev2=theta_mev2,
        theta_bound_gev2=theta_gev2, bound_scale_gev=1.0 / math.sqrt(theta_gev2),
        constants_used=constants.as_dict(), unit_trail=trail,
    )


def bound_theta(a: QuantumState, b: QuantumState, precision=PUBLISHED_UNCERTAINTY_HZ, mode: str = "literal",
                constants: PhysicalConstants = CODATA2018) -> float:
    """Largest theta (GeV^-2) whose transition correction stays within ``precision``."""
    return transition_report(a, b, precision, mode, constants).theta_bound_gev2


def _shift_dict(state, mode, constants, s_state_specialization=True):
    br = second_order_shift(state, 1.0, mode, constants, s_state_specialization)
    return {
        "state": state.label,
        "n_r": state.n_r,
        "l": state.l,
        "m": state.m,
        "E_MeV": basis(state.n_r, state.l, constants).E,
        "first_order": br.first_order,
        "mixing": br.mixing,
        "direct": br.direct,
        "total": br.total,
        "unit": br.unit + " per MeV^-4",
        "s_state_specialization": br.s_state_specialization,
        "continued_moments": list(br.continued),
    }


def _moments(state, constants):
    out = []
    for k in (3, 4, 5, 6):
        mom = f_closed(k, state.n_r, state.l, constants)
        out.append({
            "state": state.label, "k": k, "value_MeV^k": mom.value, "convergent": mom.convergent,
            "status": "convergent integral" if mom.convergent else "analytic continuation of divergent integral",
        })
    return out


def _discrepancy(per_mode, constants):
    hz_to_mev = constants.mev_per_hz
    prec_mev = PUBLISHED_UNCERTAINTY_HZ * hz_to_mev
    theta_published_mev2 = PUBLISHED_BOUND_GEV2 * 1e-6
    published_internal = {}
    for name, reading in PUBLISHED_COEFFICIENT_READINGS.items():
        theta_mev = math.sqrt(prec_mev / reading) * 1e6
        # coefficient in GeV with theta in GeV^-2
        theta_gev = math.sqrt(prec_mev * 1e-3 / reading)
        implied_mev = reading * theta_published_mev2 ** 2
        published_internal[name] = {
            "coefficient": reading,
            "bound_gev2_if_theta_in_MeV-2_and_energy_in_MeV": theta_mev,
            "bound_gev2_if_theta_in_GeV-2_and_energy_in_GeV": theta_gev,
            "ratio_to_published_bound_MeV_reading": theta_mev / PUBLISHED_BOUND_GEV2,
            "ratio_to_published_bound_GeV_reading": theta_gev / PUBLISHED_BOUND_GEV2,
            "implied_precision_Hz_at_published_bound": implied_mev / hz_to_mev,
        }
    ours = {}
    for mode, data in per_mode.items():
        tr = data["transition"]
        ours[mode] = {
            "coefficient": tr["coefficient"],
            "ratio_to_reading": {n: tr["coefficient"] / r for n, r in PUBLISHED_COEFFICIENT_READINGS.items()},
            "bound_gev2": tr["theta_bound_gev2"],
            "bound_ratio_to_published": tr["theta_bound_gev2"] / PUBLISHED_BOUND_GEV2,
            "coefficient_within_factor_2": {
                n: 0.5 <= tr["coefficient"] / r <= 2.0 for n, r in PUBLISHED_COEFFICIENT_READINGS.items()
            },
            "bound_within_factor_4": 0.25 <= tr["theta_bound_gev2"] / PUBLISHED_BOUND_GEV2 <= 4.0,
        }
    return {
        "dimensional_analysis": [
            "Every term of the radial equation carries MeV^2, so the literal shift theta^2 alpha^3 (-E f5 + e^2 f6) is in MeV^2, not MeV.",
            "With theta in MeV^-2, an energy shift c * theta^2 in MeV needs c in MeV^5; the printed unit (MeV)^3 fits neither.",
            "Corrected mode divides delta(E^2) by 2E and is an energy in MeV.",
        ],
        "published_internal_consistency": published_internal,
        "this_work": ours,
        "conclusion": (
            "Neither reading of the printed coefficient reproduces the printed bound from the 34 Hz precision "
            "under any of the unit conventions above, and the coefficient computed from the closed forms differs "
            "from both readings by many orders of magnitude; the headline numbers are reported, not reproduced."
        ),
    }


def reproduction_report(modes=MODES, precision_hz: float = PUBLISHED_UNCERTAINTY_HZ,
                        constants: PhysicalConstants = CODATA2018) -> dict:
    """Structured, deterministic summary of the 1S-2S analysis for each mode."""
    modes = tuple(modes)
    for mode in modes:
        _check_mode(mode)
    per_mode = {}
    for mode in modes:
        entry = {
            "shifts_per_theta2": {s.label: _shift_dict(s, mode, constants) for s in (ONE_S, TWO_S)},
            "transition": transition_report(ONE_S, TWO_S, precision_hz, mode, constants).to_dict(),
        }
        if mode == "literal":
            entry["general_formula_variant"] = {
                s.label: _shift_dict(s, mode, constants, s_state_specialization=False) for s in (ONE_S, TWO_S)
            }
            general = abs(entry["general_formula_variant"]["1S"]["total"] - entry["general_formula_variant"]["2S"]["total"])
            entry["general_formula_variant"]["transition_coefficient"] = general
        per_mode[mode] = entry

    comparison = {}
    if "literal" in per_mode and "corrected" in per_mode:
        lit, cor = per_mode["literal"], per_mode["corrected"]
        comparison = {
            "ratio_corrected_over_literal": {
                "1S": cor["shifts_per_theta2"]["1S"]["total"] / lit["shifts_per_theta2"]["1S"]["total"],
                "2S": cor["shifts_per_theta2"]["2S"]["total"] / lit["shifts_per_theta2"]["2S"]["total"],
                "transition_coefficient": cor["transition"]["coefficient"] / lit["transition"]["coefficient"],
                "theta_bound": cor["transition"]["theta_bound_gev2"] / lit["transition"]["theta_bound_gev2"],
            }
        }

    anomalies = [
        {"flag": "divergent_moments_continued",
         "detail": "f(3)..f(6) diverge at r=0 for S states (2 nu + 2 - k <= -1); closed forms give their analytic continuation in nu."},
        {"flag": "s_state_b_terms_dropped",
         "detail": "The published 1S/2S shifts omit (B_1^0)^2 [5 E f(5) - 4 e^2 f(6)] and the l -> l+1 mixing term that the general formula contains; both variants are reported."},
        {"flag": "psi1_order",
         "detail": "The first-order admixture is printed with theta^2; H^(1) is O(theta), so amplitudes are computed as O(theta)."},
        {"flag": "dimensional_mismatch",
         "detail": "Literal shifts carry MeV^2 and the printed coefficient unit is (MeV)^3; corrected mode divides by 2E."},
        {"flag": "state_labels",
         "detail": "E_10 and E_20 are read with the radial quantum number: 1S=(n_r=0,l=0), 2S=(n_r=1,l=0)."},
        {"flag": "experimental_frequency_digits",
         "detail": f"Printed {PUBLISHED_FREQUENCY_HZ} Hz; the same digits with a leading 2466 ({REFERENCE_FREQUENCY_HZ} Hz) match the 2000 measurement with the same 34 Hz uncertainty. Only the uncertainty enters the bound."},
        {"flag": "no_reduced_mass", "detail": "Electron mass used throughout; no reduced-mass correction."},
    ]

    report = {
        "constants": constants.as_dict(),
        "experiment": {
            "frequency_Hz": PUBLISHED_FREQUENCY_HZ,
            "uncertainty_Hz": PUBLISHED_UNCERTAINTY_HZ,
            "precision_used_Hz": precision_hz,
            "quoted": f"{PUBLISHED_FREQUENCY_HZ} +- {PUBLISHED_UNCERTAINTY_HZ} Hz",
        },
        "published_values": {
            "coefficient_text": PUBLISHED_COEFFICIENT_TEXT,
            "coefficient_readings": dict(PUBLISHED_COEFFICIENT_READINGS),
            "theta_bound": "(8 GeV)^-2",
            "theta_bound_gev2": PUBLISHED_BOUND_GEV2,
        },
        "moments": _moments(ONE_S, constants) + _moments(TWO_S, constants),
        "modes": per_mode,
        "comparison": comparison,
        "anomalies": anomalies,
        "discrepancy_analysis": _discrepancy(per_mode, constants),
    }
    return report


def _fmt(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def render_report_text(report: dict) -> str:
    """Human-readable rendering of :func:`reproduction_report` output."""
    lines = ["1S-2S noncommutativity reproduction report", ""]
    c = report["constants"]
    lines.append(f"constants ({c['label']}): alpha={_fmt(c['alpha'])}  m_e={_fmt(c['m_e_MeV'])} MeV  "
                 f"h={_fmt(c['MeV_per_Hz'])} MeV/Hz")
    ex = report["experiment"]
    lines.append(f"experiment: {ex['quoted']}  (precision used: {ex['precision_used_Hz']} Hz)")
    lines.append("")
    lines.append("radial moments <r^-k>:")
    for m in report["moments"]:
        lines.append(f"  {m['state']} k={m['k']}: {_fmt(m['value_MeV^k'])} MeV^{m['k']}  [{m['status']}]")
    for mode, data in report["modes"].items():
        lines.append("")
        lines.append(f"mode = {mode}")
        for label, s in data["shifts_per_theta2"].items():
            lines.append(f"  Delta E({label}) / theta^2 = {_fmt(s['total'])}  "
                         f"(mixing {_fmt(s['mixing'])}, direct {_fmt(s['direct'])}) [{s['unit']}]")
        if "general_formula_variant" in data:
            g = data["general_formula_variant"]
            lines.append(f"  general formula at l=0: 1S {_fmt(g['1S']['total'])}, 2S {_fmt(g['2S']['total'])}, "
                         f"transition {_fmt(g['transition_coefficient'])}")
        tr = data["transition"]
        lines.append(f"  transition coefficient = {_fmt(tr['coefficient'])} [{tr['coefficient_unit']}]")
        lines.append(f"  theta bound = {_fmt(tr['theta_bound_gev2'])} GeV^-2 = ({_fmt(tr['bound_scale_gev'])} GeV)^-2")
        for step in tr["unit_trail"]:
            lines.append(f"    {step['step']}: {_fmt(step['input'])} {step['from']} -> {_fmt(step['output'])} {step['to']}"
                         + (f" (x {_fmt(step['factor'])})" if step["factor"] is not None else ""))
    if report["comparison"]:
        lines.append("")
        lines.append("corrected / literal:")
        for k, v in report["comparison"]["ratio_corrected_over_literal"].items():
            lines.append(f"  {k}: {_fmt(v)}")
    lines.append("")
    lines.append("anomalies:")
    for a in report["anomalies"]:
        lines.append(f"  [{a['flag']}] {a['detail']}")
    lines.append("")
    lines.append("discrepancy analysis:")
    d = report["discrepancy_analysis"]
    for s in d["dimensional_analysis"]:
        lines.append(f"  - {s}")
    for name, v in d["published_internal_consistency"].items():
        lines.append(f"  printed coefficient read as {_fmt(v['coefficient'])} ({name}): bound "
                     f"{_fmt(v['bound_gev2_if_theta_in_MeV-2_and_energy_in_MeV'])} GeV^-2 (MeV units) or "
                     f"{_fmt(v['bound_gev2_if_theta_in_GeV-2_and_energy_in_GeV'])} GeV^-2 (GeV units) vs "
                     f"{_fmt(PUBLISHED_BOUND_GEV2)}; implied precision at printed bound "
                     f"{_fmt(v['implied_precision_Hz_at_published_bound'])} Hz")
    for mode, v in d["this_work"].items():
        lines.append(f"  {mode}: coefficient / 636.737 = {_fmt(v['ratio_to_reading']['decimal_comma'])}, "
                     f"/ 636737 = {_fmt(v['ratio_to_reading']['thousands_separator'])}, "
                     f"bound / (8 GeV)^-2 = {_fmt(v['bound_ratio_to_published'])}")
    lines.append(f"  {d['conclusion']}")
    return "\n".join(lines) + "\n"

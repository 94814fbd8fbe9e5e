"""Command-line interface.

Usage:
    nckg spectrum --nr-max 1 --l-max 2 --theta 1e-6 --format csv
    nckg shift --state 2P --m 1 --theta 1 --theta-unit GeV-2
    nckg bound --precision-hz 34 --mode corrected --format json
    nckg report --format text
    nckg selfcheck

Exit codes: 0 success, 1 computation error (or failed selfcheck), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .constants import CODATA2018, THETA_UNITS
from .exceptions import ConfigurationError, NCKGError
from .hydrogen import QuantumState, basis
from .perturbation import MODES, NCParameter, second_order_shift
from .phenomenology import (PUBLISHED_UNCERTAINTY_HZ, render_report_text, reproduction_report, transition_report)
from .selfcheck import RUNTIME_BUDGET_S, run_all

EXIT_OK, EXIT_COMPUTATION, EXIT_USAGE = 0, 1, 2


def _num(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return "" if v is None else str(v)


def _num_text(v):
    return repr(v) if isinstance(v, float) else _num(v)


def _flatten(obj, prefix=""):
    """Nested dict/list -> list of (dotted key, scalar)."""
    out = []
    if isinstance(obj, dict):
        for k in obj:
            out.extend(_flatten(obj[k], f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            out.extend(_flatten(v, f"{prefix}[{i}]"))
    else:
        out.append((prefix, obj))
    return out


def _to_csv(doc):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = doc.get("rows")
    if rows:
        header = list(rows[0])
        writer.writerow(header)
        for row in rows:
            writer.writerow([_num(row[h]) for h in header])
    else:
        writer.writerow(["key", "value"])
        for key, value in _flatten({k: v for k, v in doc.items() if k != "config"}):
            writer.writerow([key, _num(value)])
    return buf.getvalue()


def _to_text(doc):
    lines = ["# " + " ".join(f"{k}={_num_text(v)}" for k, v in doc["config"].items())]
    if "report" in doc and isinstance(doc["report"], dict) and "modes" in doc["report"]:
        lines.append(render_report_text(doc["report"]).rstrip("\n"))
        return "\n".join(lines) + "\n"
    rows = doc.get("rows")
    if rows:
        header = list(rows[0])
        cells = [header] + [[_num_text(r[h]) for h in header] for r in rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
        for c in cells:
            lines.append("  ".join(s.rjust(w) for s, w in zip(c, widths)))
    else:
        for key, value in _flatten({k: v for k, v in doc.items() if k != "config"}):
            lines.append(f"{key}: {_num_text(value)}")
    return "\n".join(lines) + "\n"


def render(doc, fmt):
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _to_csv(doc)
    return _to_text(doc)


def _emit(doc, args):
    text = render(doc, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args):
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def _theta(args):
    if not args.theta >= 0.0:
        raise ConfigurationError("--theta must be non-negative")
    return NCParameter.from_value(args.theta, args.theta_unit)


def cmd_spectrum(args):
    if args.nr_max < 0 or args.l_max < 0:
        raise ConfigurationError("--nr-max and --l-max must be non-negative")
    theta = _theta(args)
    mode = args.mode or "literal"
    rows = []
    for n_r in range(args.nr_max + 1):
        for l in range(args.l_max + 1):
            E = basis(n_r, l, CODATA2018).E
            for m in range(l + 1):
                st = QuantumState(n_r, l, m)
                br = second_order_shift(st, theta, mode)
                rows.append({
                    "state": st.label, "n_r": n_r, "l": l, "m": m,
                    "E_MeV": E, "delta_E_MeV": br.total, "E_hat_MeV": E + br.total,
                })
    return {"config": _config(args), "constants": CODATA2018.as_dict(), "rows": rows}


def cmd_shift(args):
    st = QuantumState.from_label(args.state, args.m)
    mode = args.mode or "literal"
    br = second_order_shift(st, _theta(args), mode)
    rows = [{
        "state": st.label, "n_r": st.n_r, "l": st.l, "m": st.m, "mode": mode,
        "first_order": br.first_order, "mixing": br.mixing, "direct": br.direct, "total": br.total,
        "unit": br.unit, "continued": "; ".join(br.continued),
    }]
    return {"config": _config(args), "constants": CODATA2018.as_dict(), "rows": rows}


def cmd_bound(args):
    a = QuantumState.from_label(args.pair[0])
    b = QuantumState.from_label(args.pair[1])
    if not args.precision_hz > 0:
        raise ConfigurationError("--precision-hz must be positive")
    report = transition_report(a, b, args.precision_hz, args.mode or "literal")
    return {"config": _config(args), "constants": CODATA2018.as_dict(), "report": report.to_dict()}


def cmd_report(args):
    modes = (args.mode,) if args.mode else MODES
    report = reproduction_report(modes, args.precision_hz)
    return {"config": _config(args), "constants": CODATA2018.as_dict(), "report": report}


def cmd_selfcheck(args):
    t0 = time.perf_counter()
    results = run_all(args.tolerance)
    elapsed = time.perf_counter() - t0
    rows = [{
        "suite": r.name, "passed": r.passed, "worst": r.worst, "tolerance": r.tolerance,
        "checked": r.checked, "seconds": round(r.seconds, 3), "detail": r.detail,
    } for r in results]
    doc = {"config": _config(args), "constants": CODATA2018.as_dict(), "rows": rows,
           "summary": {"passed": all(r.passed for r in results), "seconds": round(elapsed, 3),
                       "budget_seconds": RUNTIME_BUDGET_S}}
    return doc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nckg",
        description="Klein-Gordon hydrogen levels with second-order time-space noncommutativity corrections.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--output", metavar="PATH", default=None, help="write to PATH instead of stdout")
    theta = argparse.ArgumentParser(add_help=False)
    theta.add_argument("--theta", type=float, default=0.0, help="noncommutativity parameter value")
    theta.add_argument("--theta-unit", choices=THETA_UNITS, default="MeV-2")
    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument("--mode", choices=MODES, default=None,
                      help="literal (published formulas) or corrected (E^2 eigenproblem); default literal, "
                           "report runs both")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, theta, mode], help="table of E, Delta E and E_hat")
    p.add_argument("--nr-max", type=int, default=1)
    p.add_argument("--l-max", type=int, default=1)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("shift", parents=[common, theta, mode], help="shift breakdown for one state")
    p.add_argument("--state", default="1S", help="spectroscopic label, e.g. 2S or 3D")
    p.add_argument("--m", type=int, default=0, help="magnetic quantum number")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("bound", parents=[common, mode], help="theta bound from a transition precision")
    p.add_argument("--pair", nargs=2, default=["1S", "2S"], metavar=("STATE_A", "STATE_B"))
    p.add_argument("--precision-hz", type=float, default=float(PUBLISHED_UNCERTAINTY_HZ))
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("report", parents=[common, mode], help="full 1S-2S reproduction report")
    p.add_argument("--precision-hz", type=float, default=float(PUBLISHED_UNCERTAINTY_HZ))
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("selfcheck", parents=[common], help="run the oracle suites")
    p.add_argument("--tolerance", type=float, default=None, help="override every suite tolerance")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except ConfigurationError as exc:
        print(f"nckg: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NCKGError as exc:
        print(f"nckg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    _emit(doc, args)
    if args.command == "selfcheck" and not doc["summary"]["passed"]:
        return EXIT_COMPUTATION
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

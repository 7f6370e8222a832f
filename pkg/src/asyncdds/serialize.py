"""JSON / CSV encodings shared by the CLI.

Rationals travel as ``p/q`` strings, floats as JSON numbers and complex
values as ``{"re": ..., "im": ...}``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .numeric import as_rat, rat_to_string
from .stepmat import SystemSpec


class ConfigError(ValueError):
    """Malformed or inconsistent configuration input."""


def scalar_to_json(x):
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return rat_to_string(x)
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return float(x)


def matrix_to_json(m):
    return [[scalar_to_json(x) for x in row] for row in m]


def spec_to_json(spec: SystemSpec) -> dict:
    out = {"mu": rat_to_string(spec.mu), "nu": rat_to_string(spec.nu), "P": matrix_to_json(spec.P)}
    if not spec.exact:
        out["parameter_mode"] = "float"
    return out


def _rat_field(data: dict, key: str, default=None) -> Fraction:
    if key not in data:
        if default is not None:
            return Fraction(default)
        raise ConfigError(f"missing key {key!r}")
    value = data[key]
    if isinstance(value, float):
        raise ConfigError(f"{key!r} must be a rational string, not a float")
    try:
        return as_rat(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad value for {key!r}: {exc}") from None


def spec_from_json(data: dict) -> SystemSpec:
    float_mode = data.get("parameter_mode", "exact") == "float"
    rows = data.get("P")
    if not (isinstance(rows, list) and len(rows) == 2 and all(isinstance(r, list) and len(r) == 2 for r in rows)):
        raise ConfigError("'P' must be a 2x2 list of lists")
    entries = []
    for row in rows:
        out = []
        for x in row:
            if isinstance(x, float):
                if not float_mode:
                    raise ConfigError("float entries in 'P' need \"parameter_mode\": \"float\"")
                out.append(x)
            else:
                try:
                    out.append(as_rat(x))
                except (TypeError, ValueError, ZeroDivisionError) as exc:
                    raise ConfigError(f"bad entry in 'P': {exc}") from None
        entries.append(out)
    try:
        return SystemSpec(_rat_field(data, "mu"), _rat_field(data, "nu"), entries)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


@dataclass(frozen=True)
class RunConfig:
    spec: SystemSpec
    x0: Fraction
    y0: Fraction
    horizon: Fraction
    output_format: str = "csv"
    plot_path: Optional[str] = None
    margin: float = 1e-9
    atol: float = 1e-9
    rtol: float = 1e-9


def _positive_float(data: dict, key: str, default: float) -> float:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)) or value < 0:
        raise ConfigError(f"{key!r} must be a nonnegative number")
    if key != "margin" and value == 0:
        raise ConfigError(f"{key!r} must be positive")
    return float(value)


def run_config_from_json(data: dict) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    spec = spec_from_json(data)
    horizon = _rat_field(data, "horizon", default=1)
    if horizon <= 0:
        raise ConfigError("'horizon' must be positive")
    fmt = data.get("output", "csv")
    if fmt not in ("csv", "json"):
        raise ConfigError("'output' must be 'csv' or 'json'")
    return RunConfig(
        spec=spec,
        x0=_rat_field(data, "x0", default=1),
        y0=_rat_field(data, "y0", default=0),
        horizon=horizon,
        output_format=fmt,
        plot_path=data.get("plot"),
        margin=_positive_float(data, "margin", 1e-9),
        atol=_positive_float(data, "atol", 1e-9),
        rtol=_positive_float(data, "rtol", 1e-9),
    )


def load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def trajectory_to_csv(traj) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "x", "y"])
    for s in traj.samples:
        writer.writerow([
            rat_to_string(s.t),
            "" if s.x is None else scalar_to_json(s.x),
            "" if s.y is None else scalar_to_json(s.y),
        ])
    return buf.getvalue()


def trajectory_to_json(traj) -> dict:
    return {
        "spec": spec_to_json(traj.spec),
        "horizon": rat_to_string(traj.horizon),
        "samples": [
            {
                "t": rat_to_string(s.t),
                "x": None if s.x is None else scalar_to_json(s.x),
                "y": None if s.y is None else scalar_to_json(s.y),
            }
            for s in traj.samples
        ],
    }


def operator_to_json(op, psi) -> dict:
    return {
        "from": rat_to_string(op.start),
        "to": rat_to_string(op.end),
        "factors": list(op.factors),
        "product": "·".join(reversed(op.factors)),
        "phi": matrix_to_json(op.phi),
        "psi": matrix_to_json(psi),
    }


def eigen_to_json(eig) -> dict:
    return {
        "lambda1": scalar_to_json(eig.lambda1),
        "lambda2": scalar_to_json(eig.lambda2),
        "trace": scalar_to_json(eig.trace),
        "det": scalar_to_json(eig.det),
        "discriminant": scalar_to_json(eig.discriminant),
    }


def stability_to_json(report) -> dict:
    return {
        "operator": matrix_to_json(report.operator),
        "period_T": rat_to_string(report.period_T),
        "eigen": eigen_to_json(report.eigen),
        "spectral_radius": report.spectral_radius,
        "verdict": report.verdict,
        "theorem": report.theorem,
    }


def equivalence_to_json(report) -> dict:
    return {
        "specA": spec_to_json(report.specA),
        "specB": spec_to_json(report.specB),
        "common_T": rat_to_string(report.common_T),
        "psiA": matrix_to_json(report.psiA),
        "psiB": matrix_to_json(report.psiB),
        "equivalent": report.equivalent,
        "residual": matrix_to_json(report.residual),
        "path": report.path,
    }


def interp_to_json(op) -> dict:
    return {
        "B": [[{"re": z.real, "im": z.imag} for z in row] for row in op.B],
        "tau": rat_to_string(op.tau),
        "T": rat_to_string(op.T),
        "k": op.k,
        "ell": op.ell,
        "source_psi": matrix_to_json(op.source_psi),
    }

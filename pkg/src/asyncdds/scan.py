"""Two-parameter stability sweeps."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .numeric import as_rat, rat_to_string
from .serialize import ConfigError, spec_from_json
from .spectral import classify_stability
from .stepmat import SystemSpec

PARAMS = ("alpha", "beta", "gamma", "delta", "mu", "nu")


@dataclass(frozen=True)
class Axis:
    param: str
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class ScanConfig:
    base: SystemSpec
    x: Axis
    y: Axis
    margin: float = 1e-9


def axis_from_json(data: dict) -> Axis:
    param = data.get("param")
    if param not in PARAMS:
        raise ConfigError(f"axis param must be one of {PARAMS}, got {param!r}")
    try:
        if "values" in data:
            values = tuple(as_rat(v) for v in data["values"])
        else:
            if param in ("mu", "nu"):
                raise ConfigError("sweeping a period needs an explicit 'values' list")
            lo, hi, steps = as_rat(data["lo"]), as_rat(data["hi"]), int(data["steps"])
            if steps < 2 or hi <= lo:
                raise ConfigError("need steps >= 2 and hi > lo")
            values = tuple(lo + (hi - lo) * i / (steps - 1) for i in range(steps))
    except KeyError as exc:
        raise ConfigError(f"axis missing key {exc}") from None
    except (TypeError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad axis: {exc}") from None
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"bad axis: {exc}") from None
    if len(values) < 2:
        raise ConfigError("an axis needs at least 2 values")
    if param in ("mu", "nu") and any(v <= 0 for v in values):
        raise ConfigError("period values must be positive")
    return Axis(param, values)


def scan_config_from_json(data: dict) -> ScanConfig:
    if not isinstance(data, dict):
        raise ConfigError("scan config must be a JSON object")
    try:
        base, x, y = data["base"], data["x"], data["y"]
    except KeyError as exc:
        raise ConfigError(f"scan config missing key {exc}") from None
    x_axis, y_axis = axis_from_json(x), axis_from_json(y)
    if x_axis.param == y_axis.param:
        raise ConfigError("the two swept parameters must differ")
    margin = data.get("margin", 1e-9)
    if isinstance(margin, bool) or not isinstance(margin, (int, float)) or margin < 0:
        raise ConfigError("'margin' must be a nonnegative number")
    return ScanConfig(spec_from_json(base), x_axis, y_axis, float(margin))


def _cell(args):
    spec, margin, i, j, xv, yv = args
    report = classify_stability(spec, margin)
    return {"i": i, "j": j, "x": xv, "y": yv, "spectral_radius": report.spectral_radius, "verdict": report.verdict}


def run_scan(config: ScanConfig, jobs: int = 1) -> list[dict]:
    """Classify every grid cell; rows come back x-major (x outer, y inner)."""
    tasks = []
    for i, xv in enumerate(config.x.values):
        for j, yv in enumerate(config.y.values):
            spec = config.base.with_(**{config.x.param: xv, config.y.param: yv})
            tasks.append((spec, config.margin, i, j, xv, yv))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_cell, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_cell(t) for t in tasks]


def scan_to_csv(config: ScanConfig, rows: list[dict]) -> str:
    lines = [f"{config.x.param},{config.y.param},spectral_radius,verdict"]
    for r in rows:
        lines.append(f"{rat_to_string(r['x'])},{rat_to_string(r['y'])},{r['spectral_radius']!r},{r['verdict']}")
    return "\n".join(lines) + "\n"

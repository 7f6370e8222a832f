"""Direct sample-and-hold recursion of the two coupled difference equations.

This module deliberately never touches the one-step matrices: it is the
brute-force reference that the 4-D representation is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Optional

from .numeric import as_rat
from .stepmat import SystemSpec
from .timescale import build_union_grid, lag


@dataclass(frozen=True)
class Sample:
    t: Fraction
    x: Optional[object]
    y: Optional[object]


@dataclass(frozen=True)
class Trajectory:
    spec: SystemSpec
    horizon: Fraction
    samples: tuple[Sample, ...]

    def x_values(self) -> dict:
        return {s.t: s.x for s in self.samples if s.x is not None}

    def y_values(self) -> dict:
        return {s.t: s.y for s in self.samples if s.y is not None}

    def held(self, t) -> tuple:
        """(x, y) as held at time t: each read at its own most recent update time."""
        t = as_rat(t)
        xs, ys = self._lookup
        return xs[lag(t, self.spec.mu)], ys[lag(t, self.spec.nu)]

    @cached_property
    def _lookup(self):
        return self.x_values(), self.y_values()


def interleave_schedule(spec: SystemSpec, horizon) -> list[tuple[Fraction, str]]:
    """Update events (time, 'x' | 'y') in chronological order, x first at shared times."""
    grid = build_union_grid(spec.mu, spec.nu, horizon)
    events = []
    for t in grid.points[1:]:
        if grid.in_mu(t):
            events.append((t, "x"))
        if grid.in_nu(t):
            events.append((t, "y"))
    return events


def simulate(spec: SystemSpec, x0, y0, horizon, *, order: str = "xy", audit: bool = False) -> Trajectory:
    """Run the scalar recursions up to ``horizon``.

    x(t+mu) = (1 + mu alpha) x(t) + mu beta y(lag(t, nu)) for t in T_mu, and the
    mirrored rule for y. Each equation captures the other's held value when its
    step starts; ``order`` only sets which update is written first at shared times.
    """
    if order not in ("xy", "yx"):
        raise ValueError("order must be 'xy' or 'yx'")
    horizon = as_rat(horizon)
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    mu, nu = spec.mu, spec.nu
    (a, b), (c, d) = spec.P
    x0 = as_rat(x0) if isinstance(x0, (int, str)) else x0
    y0 = as_rat(y0) if isinstance(y0, (int, str)) else y0

    grid = build_union_grid(mu, nu, horizon)
    xs = {Fraction(0): x0}
    ys = {Fraction(0): y0}
    # last sampled (value, sample time) of each sequence
    x_held = (x0, Fraction(0))
    y_held = (y0, Fraction(0))
    # read captured at the start of the step currently in flight
    x_read = y_read = None

    def finish_x(t):
        nonlocal x_held
        s = t - mu
        xs[t] = (1 + mu * a) * xs[s] + mu * b * x_read
        x_held = (xs[t], t)

    def finish_y(t):
        nonlocal y_held
        s = t - nu
        ys[t] = nu * c * y_read + (1 + nu * d) * ys[s]
        y_held = (ys[t], t)

    for t in grid.points:
        in_mu, in_nu = grid.in_mu(t), grid.in_nu(t)
        if t > 0:
            finishers = [(in_mu, finish_x), (in_nu, finish_y)]
            if order == "yx":
                finishers.reverse()
            for due, fn in finishers:
                if due:
                    fn(t)
        if in_mu:
            value, when = y_held
            if audit:
                assert when == lag(t, nu) and value == ys[lag(t, nu)], (t, when)
            x_read = value
        if in_nu:
            value, when = x_held
            if audit:
                assert when == lag(t, mu) and value == xs[lag(t, mu)], (t, when)
            y_read = value

    samples = tuple(Sample(t, xs.get(t), ys.get(t)) for t in grid.points)
    return Trajectory(spec, grid.horizon, samples)

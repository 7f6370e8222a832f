"""Periodic time scales, the lag operator and the union grid of two scales."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction

from .numeric import as_rat, is_integer, rat_floor_div


class GridError(ValueError):
    """A time point is not where an operation requires it to be."""


@dataclass(frozen=True)
class TimeScale:
    """The periodic one-sided scale {0, rho, 2 rho, ...}."""

    rho: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rho", as_rat(self.rho))
        if self.rho <= 0:
            raise ValueError("period must be positive")

    def __contains__(self, t) -> bool:
        t = as_rat(t)
        return t >= 0 and is_integer(t / self.rho)

    def lag(self, t) -> Fraction:
        return lag(t, self.rho)


def lag(t, rho) -> Fraction:
    """Largest element of the rho-scale not exceeding t."""
    t, rho = as_rat(t), as_rat(rho)
    if rho <= 0:
        raise ValueError("period must be positive")
    if t < 0:
        raise ValueError("lag is defined for t >= 0 only")
    return rho * rat_floor_div(t, rho)


def lcm_periods(mu, nu) -> tuple[Fraction, int, int]:
    """Least common multiple T of two rational periods, with k = T/mu and l = T/nu."""
    mu, nu = as_rat(mu), as_rat(nu)
    if mu <= 0 or nu <= 0:
        raise ValueError("periods must be positive")
    # lcm(a/b, c/d) = lcm(a, c) / gcd(b, d) for reduced fractions
    big_t = Fraction(
        math.lcm(mu.numerator, nu.numerator), math.gcd(mu.denominator, nu.denominator)
    )
    return big_t, int(big_t / mu), int(big_t / nu)


def lcm_many(*periods) -> Fraction:
    total = as_rat(periods[0])
    for p in periods[1:]:
        total, _, _ = lcm_periods(total, p)
    return total


@dataclass(frozen=True)
class UnionGrid:
    mu: Fraction
    nu: Fraction
    horizon: Fraction
    points: tuple[Fraction, ...]

    def in_mu(self, t) -> bool:
        return is_integer(as_rat(t) / self.mu)

    def in_nu(self, t) -> bool:
        return is_integer(as_rat(t) / self.nu)

    def __contains__(self, t) -> bool:
        t = as_rat(t)
        i = bisect.bisect_left(self.points, t)
        return i < len(self.points) and self.points[i] == t

    def index(self, t) -> int:
        t = as_rat(t)
        i = bisect.bisect_left(self.points, t)
        if i == len(self.points) or self.points[i] != t:
            raise GridError(f"{t} is not a point of the union grid")
        return i

    def __len__(self):
        return len(self.points)


def on_union(t, mu, nu) -> bool:
    t = as_rat(t)
    return t >= 0 and (is_integer(t / as_rat(mu)) or is_integer(t / as_rat(nu)))


def build_union_grid(mu, nu, horizon) -> UnionGrid:
    """Merge both scales on [0, horizon]; the horizon is rounded down onto the grid."""
    mu, nu, horizon = as_rat(mu), as_rat(nu), as_rat(horizon)
    if mu <= 0 or nu <= 0:
        raise ValueError("periods must be positive")
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    pts = {mu * i for i in range(rat_floor_div(horizon, mu) + 1)}
    pts.update(nu * i for i in range(rat_floor_div(horizon, nu) + 1))
    points = tuple(sorted(pts))
    return UnionGrid(mu, nu, points[-1], points)


def successor(t, grid: UnionGrid) -> Fraction:
    i = grid.index(t)
    if i + 1 >= len(grid.points):
        raise GridError(f"{t} is the last point of the grid; no successor")
    return grid.points[i + 1]


ADMISSIBLE = frozenset(
    q
    for q in (
        (i, j, k, l) for i in (0, 1) for j in (0, 1) for k in (0, 1) for l in (0, 1)
    )
    if (q[0] or q[2]) and (q[1] or q[3])
)


def classify_quadruple(t, grid: UnionGrid) -> tuple[int, int, int, int]:
    """Membership of t and of its successor in the mu- and nu-scales."""
    s = successor(t, grid)
    q = (int(grid.in_mu(t)), int(grid.in_mu(s)), int(grid.in_nu(t)), int(grid.in_nu(s)))
    if q not in ADMISSIBLE:
        raise GridError(f"inadmissible quadruple {q} at t={t}")
    return q

"""Evolution operator Phi(t, t0), solution operator Psi(t, t0) and their closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .numeric import (
    Matrix,
    as_rat,
    identity,
    is_integer,
    matmul,
    matpow,
    matsub,
)
from .stepmat import XY, SystemSpec, matrix_name, table_matrix
from .timescale import GridError, build_union_grid, classify_quadruple, on_union


@dataclass(frozen=True)
class EvolutionOp:
    start: Fraction
    end: Fraction
    phi: Matrix
    factors: tuple[str, ...]  # A_{ijkl} names, earliest factor first


@dataclass(frozen=True)
class SolutionOp:
    start: Fraction
    end: Fraction
    psi: Matrix


def extract_psi(phi: Matrix) -> Matrix:
    """Rows/cols of (u, v) from a 4x4 evolution matrix."""
    return tuple(tuple(phi[i][j] for j in XY) for i in XY)


def _one(spec: SystemSpec):
    return 1 + 0 * spec.alpha


def _check_endpoints(spec: SystemSpec, start, end):
    start, end = as_rat(start), as_rat(end)
    if start > end:
        raise GridError(f"start {start} is after end {end}")
    for t in (start, end):
        if not on_union(t, spec.mu, spec.nu):
            raise GridError(f"{t} is not on the union of T_{spec.mu} and T_{spec.nu}")
    return start, end


def iter_evolution(spec: SystemSpec, start, end) -> Iterator[tuple[Fraction, Matrix, str | None]]:
    """Yield (t, Phi(t, start), name of last factor) for every grid point t in [start, end]."""
    start, end = _check_endpoints(spec, start, end)
    one = _one(spec)
    phi = identity(4, one=one, zero=0 * one)
    yield start, phi, None
    if start == end:
        return
    grid = build_union_grid(spec.mu, spec.nu, end)
    for t in grid.points[grid.index(start):-1]:
        q = classify_quadruple(t, grid)
        phi = matmul(table_matrix(q, spec), phi)
        yield grid.points[grid.index(t) + 1], phi, matrix_name(q)


def evolution(spec: SystemSpec, start, end) -> EvolutionOp:
    """Ordered product A(t_{k-1}) ... A(t_0) over grid points in [start, end)."""
    start, end = as_rat(start), as_rat(end)
    phi, names = None, []
    for _, phi, name in iter_evolution(spec, start, end):
        if name is not None:
            names.append(name)
    return EvolutionOp(start, end, phi, tuple(names))


def solution_operator(spec: SystemSpec, start, end) -> SolutionOp:
    op = evolution(spec, start, end)
    return SolutionOp(op.start, op.end, extract_psi(op.phi))


def psi_sync_closed(spec: SystemSpec) -> Matrix:
    """I + mu P, the one-period operator of a synchronous system."""
    if spec.mu != spec.nu:
        raise ValueError("closed form requires mu == nu")
    mu = spec.mu
    (a, b), (c, d) = spec.P
    return ((1 + mu * a, mu * b), (mu * c, 1 + mu * d))


def psi_mu1_closed(spec: SystemSpec) -> Matrix:
    """One-period operator of a (mu, 1) system, mu a positive integer."""
    if spec.nu != 1 or not is_integer(spec.mu):
        raise ValueError("closed form requires nu == 1 and integer mu")
    mu = int(spec.mu)
    (a, b), (c, d) = spec.P
    geometric = sum((c * (1 + d) ** i for i in range(mu)), start=0 * c)
    return ((1 + mu * a, mu * b), (geometric, (1 + d) ** mu))


@dataclass(frozen=True)
class SemigroupCheck:
    holds: bool
    residual: Matrix


def semigroup_check(spec: SystemSpec, s, tau, t) -> SemigroupCheck:
    """Compare Psi(t, tau) Psi(tau, s) with Psi(t, s); exact for exact specs."""
    s, tau, t = as_rat(s), as_rat(tau), as_rat(t)
    if not s <= tau <= t:
        raise GridError("need s <= tau <= t")
    composed = matmul(
        solution_operator(spec, tau, t).psi, solution_operator(spec, s, tau).psi
    )
    residual = matsub(composed, solution_operator(spec, s, t).psi)
    return SemigroupCheck(all(x == 0 for row in residual for x in row), residual)


def psi_power_period(spec: SystemSpec, big_t, n: int) -> Matrix:
    """Psi(T, 0)**n, which equals Psi(nT, 0) when T is a common multiple of both periods."""
    return matpow(solution_operator(spec, 0, big_t).psi, n)

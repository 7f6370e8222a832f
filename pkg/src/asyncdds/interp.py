"""Interpolated dynamics on the fine scale T_tau via a complex matrix root."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .evolution import solution_operator
from .numeric import (
    Matrix,
    as_rat,
    cpx_nth_root_principal,
    is_integer,
    matpow,
    matvec,
)
from .simulate import simulate
from .spectral import eigen_2x2
from .stepmat import SystemSpec
from .timescale import build_union_grid, lcm_periods

# relative eigenvalue gap below which the confluent formula is used
NEAR_DEFECTIVE = 1e-8


class SingularOperatorError(ValueError):
    """A matrix root was requested for a singular operator."""


def _c(m: Matrix) -> Matrix:
    return tuple(tuple(complex(x) for x in row) for row in m)


def mat2_root(m: Matrix, p: int) -> Matrix:
    """Principal p-th root of a nonsingular 2x2 matrix, as complex entries.

    Distinct eigenvalues: f(M) = sum_i f(l_i) (M - l_j I) / (l_i - l_j).
    Repeated (or nearly repeated) eigenvalue l: f(M) = f(l) I + f'(l) (M - l I).
    f is the principal scalar root.
    """
    if p < 1:
        raise ValueError("root order must be a positive integer")
    (a, b), (c, d) = m
    if a * d - b * c == 0:
        raise SingularOperatorError("matrix root needs a nonsingular matrix")
    if p == 1:
        return _c(m)
    eig = eigen_2x2(m)
    l1, l2 = eig.lambda1, eig.lambda2
    mc = _c(m)
    scale = max(abs(l1), abs(l2))
    if abs(l1 - l2) < NEAR_DEFECTIVE * scale:
        lam = (l1 + l2) / 2
        f = cpx_nth_root_principal(lam, p)
        fprime = f / (p * lam)
        return tuple(
            tuple(
                (f if i == j else 0) + fprime * (mc[i][j] - (lam if i == j else 0))
                for j in range(2)
            )
            for i in range(2)
        )
    f1 = cpx_nth_root_principal(l1, p)
    f2 = cpx_nth_root_principal(l2, p)
    gap = l1 - l2
    return tuple(
        tuple(
            (f1 * (mc[i][j] - (l2 if i == j else 0)) - f2 * (mc[i][j] - (l1 if i == j else 0)))
            / gap
            for j in range(2)
        )
        for i in range(2)
    )


@dataclass(frozen=True)
class InterpOperator:
    B: Matrix
    tau: Fraction
    T: Fraction
    k: int
    ell: int
    source_psi: Matrix


def build_interp(spec: SystemSpec) -> InterpOperator:
    big_t, k, ell = lcm_periods(spec.mu, spec.nu)
    psi = solution_operator(spec, 0, big_t).psi
    tau = big_t / (k * ell)
    return InterpOperator(mat2_root(psi, k * ell), tau, big_t, k, ell, psi)


def interp_value(op: InterpOperator, t, s) -> Matrix:
    """Psi(t, s) = B**((t - s) / tau) on the fine scale."""
    t, s = as_rat(t), as_rat(s)
    if t < s:
        raise ValueError("need t >= s")
    steps = (t - s) / op.tau
    if not is_integer(steps) or not is_integer(s / op.tau):
        raise ValueError(f"t and s must lie on T_{op.tau}")
    return matpow(op.B, int(steps))


@dataclass(frozen=True)
class AgreementPoint:
    t: Fraction
    on_common: bool  # t is a multiple of T
    agrees: bool
    error: float


@dataclass(frozen=True)
class AgreementReport:
    points: tuple[AgreementPoint, ...]
    tolerance: float

    @property
    def common_agree(self) -> bool:
        return all(p.agrees for p in self.points if p.on_common)

    @property
    def off_common_mismatches(self) -> tuple[Fraction, ...]:
        return tuple(p.t for p in self.points if not p.on_common and not p.agrees)


def agreement_check(op: InterpOperator, spec: SystemSpec, x0, y0, horizon, tol: float = 1e-9) -> AgreementReport:
    """Compare interpolated (u, v) with the held true trajectory on the union grid.

    Agreement is required on multiples of T and merely recorded elsewhere.
    """
    traj = simulate(spec, x0, y0, horizon)
    z0 = (complex(x0), complex(y0))
    grid = build_union_grid(spec.mu, spec.nu, horizon)
    points = []
    for t in grid.points:
        u, v = matvec(interp_value(op, t, 0), z0)
        x, y = traj.held(t)
        err = max(abs(u - float(x)), abs(v - float(y)))
        scale = max(1.0, abs(float(x)), abs(float(y)))
        on_common = is_integer(t / op.T)
        points.append(AgreementPoint(t, on_common, err <= tol * scale, err))
    report = AgreementReport(tuple(points), tol)
    if not report.common_agree:
        bad = [p.t for p in points if p.on_common and not p.agrees]
        raise AssertionError(f"interpolation disagrees with trajectory on T_T at {bad}")
    return report


def root_residual(m: Matrix, p: int) -> float:
    """Infinity-norm residual of mat2_root(m, p)**p - m."""
    r = matpow(mat2_root(m, p), p)
    return max(
        sum(abs(r[i][j] - complex(m[i][j])) for j in range(2)) for i in range(2)
    )

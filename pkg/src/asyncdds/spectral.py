"""Eigenvalues of 2x2 operators, spectral radius and stability classification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .evolution import psi_mu1_closed, psi_sync_closed, solution_operator
from .numeric import Matrix, as_rat, is_integer, matvec
from .simulate import simulate
from .stepmat import SystemSpec
from .timescale import lcm_periods

STABLE = "asymptotically-stable"
UNSTABLE = "not-asymptotically-stable"
MARGINAL = "marginal"


@dataclass(frozen=True)
class EigenPair:
    lambda1: complex
    lambda2: complex
    trace: object
    det: object
    discriminant: object

    @property
    def spectral_radius(self) -> float:
        return abs(self.lambda1)


def eigen_2x2(m: Matrix) -> EigenPair:
    """Roots of l^2 - tr l + det, |lambda1| >= |lambda2|.

    Trace, determinant and discriminant stay exact for rational input; the
    roots need one square root. The larger root is formed without
    cancellation and the smaller one as det / lambda1.
    """
    (a, b), (c, d) = m
    tr = a + d
    det = a * d - b * c
    disc = tr * tr - 4 * det
    if disc >= 0:
        root = math.sqrt(disc)
        trf = float(tr)
        big = (trf + math.copysign(root, trf)) / 2
        small = float(det) / big if big != 0 else 0.0
        l1, l2 = complex(big), complex(small)
    else:
        re = float(tr) / 2
        im = math.sqrt(-disc) / 2
        l1, l2 = complex(re, im), complex(re, -im)
    return EigenPair(l1, l2, tr, det, disc)


def spectral_radius(m: Matrix) -> float:
    """Max eigenvalue modulus from trace and determinant alone."""
    (a, b), (c, d) = m
    tr = a + d
    det = a * d - b * c
    disc = tr * tr - 4 * det
    if disc >= 0:
        return (abs(float(tr)) + math.sqrt(disc)) / 2
    # complex pair: |l|^2 = det
    return math.sqrt(det)


def spectral_norm_2x2(m: Matrix) -> float:
    """Largest singular value, via the Gram matrix M^T M."""
    (a, b), (c, d) = m
    g11 = a * a + c * c
    g22 = b * b + d * d
    g12 = a * b + c * d
    tr = g11 + g22
    det = g11 * g22 - g12 * g12
    disc = tr * tr - 4 * det
    return math.sqrt((float(tr) + math.sqrt(max(float(disc), 0.0))) / 2)


def verdict_for(radius: float, margin: float) -> str:
    if abs(radius - 1) <= margin:
        return MARGINAL
    return STABLE if radius < 1 - margin else UNSTABLE


@dataclass(frozen=True)
class StabilityReport:
    operator: Matrix
    period_T: Fraction
    eigen: EigenPair
    spectral_radius: float
    verdict: str
    theorem: str  # "sync", "mu1" or "general": which route built the operator


def period_operator(spec: SystemSpec) -> tuple[Matrix, Fraction, str]:
    """Psi(T, 0) over one common period, using a closed form where one applies."""
    big_t, _, _ = lcm_periods(spec.mu, spec.nu)
    if spec.mu == spec.nu:
        return psi_sync_closed(spec), big_t, "sync"
    if spec.nu == 1 and is_integer(spec.mu):
        return psi_mu1_closed(spec), big_t, "mu1"
    return solution_operator(spec, 0, big_t).psi, big_t, "general"


def classify_stability(spec: SystemSpec, margin: float = 1e-9) -> StabilityReport:
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    psi, big_t, route = period_operator(spec)
    eig = eigen_2x2(psi)
    radius = spectral_radius(psi)
    return StabilityReport(psi, big_t, eig, radius, verdict_for(radius, margin), route)


def sync_eigen_shift_check(P: Matrix, mu) -> bool:
    """Evaluate both sides of: eigenvalues of I + mu P in the unit disc iff
    eigenvalues of P in the disc of radius 1/mu about -1/mu.

    Returns the common truth value; raises if the two sides disagree.
    """
    mu = as_rat(mu)
    if mu <= 0:
        raise ValueError("mu must be positive")
    (a, b), (c, d) = P
    shifted = ((1 + mu * a, mu * b), (mu * c, 1 + mu * d))
    left = spectral_radius(shifted) < 1
    eig = eigen_2x2(P)
    centre = -1 / float(mu)
    right = all(abs(lam - centre) < 1 / float(mu) for lam in (eig.lambda1, eig.lambda2))
    if left != right:
        raise AssertionError(f"shift criterion disagrees for P={P}, mu={mu}")
    return left


@dataclass(frozen=True)
class DecayBound:
    K: float
    L: float
    kappa: float
    verified: bool
    worst_ratio: float  # max over checked points of |z(t)| / bound(t)


def geometric_decay_bound(spec: SystemSpec, kappa: float, horizon) -> DecayBound:
    """Check |z(nT + s)| <= L K kappa**n |z(0)| along simulated trajectories.

    L is the largest spectral norm of Psi(s, 0) for grid points s in (0, T)
    (at least 1, covering s = 0). K is fitted as the smallest constant with
    |Psi(nT, 0)| <= K kappa**n, where Psi(nT, 0) is assembled from the two
    simulated unit-vector trajectories.
    """
    psi, big_t, _ = period_operator(spec)
    rho = spectral_radius(psi)
    if not (rho < kappa < 1):
        raise ValueError(f"kappa must satisfy rho={rho:.6g} < kappa < 1")
    horizon = as_rat(horizon)

    intra = [
        solution_operator(spec, 0, t).psi
        for t in _grid_interior(spec, big_t)
    ]
    L = max([1.0] + [spectral_norm_2x2(m) for m in intra])

    traj_x = simulate(spec, 1, 0, horizon)
    traj_y = simulate(spec, 0, 1, horizon)
    periods = int(horizon // big_t)
    K = 0.0
    for n in range(periods + 1):
        t = n * big_t
        cx, cy = traj_x.held(t), traj_y.held(t)
        psi_n = ((cx[0], cy[0]), (cx[1], cy[1]))
        K = max(K, spectral_norm_2x2(psi_n) / kappa**n)

    worst = 0.0
    starts = [(1, 0), (0, 1), (1, 1), (1, -1), (3, -2)]
    for t in (s.t for s in traj_x.samples):
        n = int(t // big_t)
        if n > periods:
            break
        cx, cy = traj_x.held(t), traj_y.held(t)
        factor = 1.0 if t % big_t == 0 else L
        bound = factor * K * kappa**n
        for z0 in starts:
            z = matvec(((cx[0], cy[0]), (cx[1], cy[1])), z0)
            ratio = math.hypot(float(z[0]), float(z[1])) / (math.hypot(*z0) * bound)
            worst = max(worst, ratio)
    return DecayBound(K, L, kappa, worst <= 1 + 1e-9, worst)


def _grid_interior(spec: SystemSpec, big_t):
    from .timescale import build_union_grid

    return [t for t in build_union_grid(spec.mu, spec.nu, big_t).points if 0 < t < big_t]

"""Dynamical equivalence of asynchronous systems and (mu, 1) parameter back-solving."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .evolution import solution_operator
from .numeric import Matrix, as_rat, is_integer, mat_allclose, matsub
from .stepmat import SystemSpec
from .timescale import lcm_many

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class EquivalenceReport:
    specA: SystemSpec
    specB: SystemSpec
    common_T: Fraction
    psiA: Matrix
    psiB: Matrix
    equivalent: bool
    residual: Matrix
    path: str  # "exact" or "float"


def check_equivalence(specA: SystemSpec, specB: SystemSpec, tol: float = FLOAT_TOL) -> EquivalenceReport:
    """Compare Psi(T, 0) of both systems over T = lcm of all four periods."""
    big_t = lcm_many(specA.mu, specA.nu, specB.mu, specB.nu)
    psi_a = solution_operator(specA, 0, big_t).psi
    psi_b = solution_operator(specB, 0, big_t).psi
    residual = matsub(psi_a, psi_b)
    if specA.exact and specB.exact:
        equal, path = all(x == 0 for row in residual for x in row), "exact"
    else:
        equal, path = mat_allclose(psi_a, psi_b, atol=tol, rtol=tol), "float"
    return EquivalenceReport(specA, specB, big_t, psi_a, psi_b, equal, residual, path)


class BacksolveError(ValueError):
    pass


def _iroot(k: int, n: int) -> int:
    """Floor of the integer n-th root of k >= 0 (Newton iteration)."""
    if k < 2:
        return k
    x = 1 << -(-k.bit_length() // n)
    while True:
        y = ((n - 1) * x + k // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def exact_root(r: Fraction, n: int) -> Fraction | None:
    """Positive rational n-th root of r > 0 if it exists."""
    num, den = _iroot(r.numerator, n), _iroot(r.denominator, n)
    if num**n != r.numerator or den**n != r.denominator:
        return None
    return Fraction(num, den)


def backsolve_mu1(target_psi: Matrix, mu_hat: int) -> SystemSpec:
    """Parameters of a (mu_hat, 1) system whose one-period operator is ``target_psi``.

    alpha and beta come out exact. delta = psi22**(1/mu_hat) - 1 using the
    positive real root (exact when rational, float otherwise) and gamma divides
    psi21 by the geometric sum of (1 + delta)**i.
    """
    if not isinstance(mu_hat, int) or mu_hat < 1:
        raise BacksolveError("mu_hat must be a positive integer")
    (p11, p12), (p21, p22) = tuple(tuple(as_rat(x) for x in row) for row in target_psi)
    if p22 <= 0:
        raise BacksolveError("psi22 must be positive for a real root")
    alpha = (p11 - 1) / mu_hat
    beta = p12 / mu_hat
    root = exact_root(p22, mu_hat)
    if root is None:
        root = float(p22) ** (1.0 / mu_hat)
    delta = root - 1
    geometric = sum(root**i for i in range(mu_hat))
    if geometric == 0:
        raise BacksolveError("vanishing geometric sum; gamma is undetermined")
    gamma = p21 / geometric if isinstance(geometric, Fraction) else float(p21) / geometric
    return SystemSpec(Fraction(mu_hat), Fraction(1), ((alpha, beta), (gamma, delta)))

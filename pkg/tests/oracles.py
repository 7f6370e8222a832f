"""Reference computations kept independent of the package code paths they check."""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction


def piecewise_step(q, mu, nu, alpha, beta, gamma, delta):
    """One-step matrix rebuilt from the case-by-case update rules for (u, u_, v, v_).

    t_mu/t_nu: t lies in T_mu/T_nu; s_mu/s_nu: the successor does.
    """
    t_mu, s_mu, t_nu, s_nu = (bool(b) for b in q)
    both = t_mu and t_nu

    def step(state):
        u, u_, v, v_ = state
        if not s_mu:
            u_new = u
        elif both:
            u_new = (1 + alpha * mu) * u + beta * mu * v
        else:
            u_new = (1 + alpha * mu) * u + beta * mu * v_
        u_lag_new = u if both or (not t_nu and s_nu) else u_
        if not s_nu:
            v_new = v
        elif both:
            v_new = (1 + delta * nu) * v + gamma * nu * u
        else:
            v_new = (1 + delta * nu) * v + gamma * nu * u_
        v_lag_new = v if both or (not t_mu and s_mu) else v_
        return (u_new, u_lag_new, v_new, v_lag_new)

    basis = [tuple(1 if i == j else 0 for i in range(4)) for j in range(4)]
    columns = [step(e) for e in basis]
    return tuple(tuple(columns[c][r] for c in range(4)) for r in range(4))


def lcm_by_enumeration(mu: Fraction, nu: Fraction, limit: int = 10_000):
    """Smallest k with k*mu an integer multiple of nu, found by counting up."""
    for k in range(1, limit):
        if (k * mu / nu).denominator == 1:
            return k * mu, k, int(k * mu / nu)
    raise RuntimeError("no common multiple found below limit")


def merged_grid(mu: Fraction, nu: Fraction, horizon: Fraction):
    """Walk both scales with two pointers and merge."""
    out = []
    i = j = 0
    while True:
        a, b = i * mu, j * nu
        nxt = min(a, b)
        if nxt > horizon:
            return out
        if not out or out[-1] != nxt:
            out.append(nxt)
        if a == nxt:
            i += 1
        if b == nxt:
            j += 1


def de_moivre_root(z: complex, p: int) -> complex:
    r = abs(z)
    theta = math.atan2(z.imag, z.real)
    if theta <= -math.pi:
        theta += 2 * math.pi
    return r ** (1 / p) * complex(math.cos(theta / p), math.sin(theta / p))


def quadratic_roots(tr: float, det: float):
    """Textbook formula, for cross-checking only."""
    disc = complex(tr * tr - 4 * det)
    s = cmath.sqrt(disc)
    return (tr + s) / 2, (tr - s) / 2


def random_rational(rng: random.Random, lo=-2, hi=2, max_den=6) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_P(rng: random.Random, lo=-2, hi=2, max_den=6):
    return tuple(tuple(random_rational(rng, lo, hi, max_den) for _ in range(2)) for _ in range(2))

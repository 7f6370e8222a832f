"""System parameters and the nine one-step matrices of the 4-D representation.

The augmented state is ordered ``(u, u_, v, v_)``: ``u``/``v`` carry x/y held
between their update times, ``u_``/``v_`` carry the sampled copies read by the
other equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric import Matrix, as_rat, mat_is_exact
from .timescale import ADMISSIBLE, UnionGrid, classify_quadruple

# positions of (x, y) inside the augmented state
U, U_LAG, V, V_LAG = 0, 1, 2, 3
XY = (U, V)


@dataclass(frozen=True)
class SystemSpec:
    """A (mu, nu)-asynchronous system with parameter matrix P = [[alpha, beta], [gamma, delta]].

    Periods are always exact rationals. Entries of P are exact rationals
    normally; floats are accepted for back-solved specs (see ``exact``).
    """

    mu: Fraction
    nu: Fraction
    P: Matrix

    def __post_init__(self):
        object.__setattr__(self, "mu", as_rat(self.mu))
        object.__setattr__(self, "nu", as_rat(self.nu))
        if self.mu <= 0 or self.nu <= 0:
            raise ValueError("periods must be positive")
        rows = tuple(tuple(_coerce_entry(x) for x in row) for row in self.P)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("P must be 2x2")
        object.__setattr__(self, "P", rows)

    @property
    def alpha(self):
        return self.P[0][0]

    @property
    def beta(self):
        return self.P[0][1]

    @property
    def gamma(self):
        return self.P[1][0]

    @property
    def delta(self):
        return self.P[1][1]

    @property
    def exact(self) -> bool:
        return mat_is_exact(self.P)

    def with_(self, **changes) -> "SystemSpec":
        """Copy with any of mu, nu, alpha, beta, gamma, delta replaced."""
        a, b, c, d = self.alpha, self.beta, self.gamma, self.delta
        a = changes.pop("alpha", a)
        b = changes.pop("beta", b)
        c = changes.pop("gamma", c)
        d = changes.pop("delta", d)
        mu = changes.pop("mu", self.mu)
        nu = changes.pop("nu", self.nu)
        if changes:
            raise TypeError(f"unknown fields {sorted(changes)}")
        return SystemSpec(mu, nu, ((a, b), (c, d)))


def _coerce_entry(x):
    if isinstance(x, (str, int)) and not isinstance(x, bool):
        return as_rat(x)
    return x


def _check(q):
    q = tuple(int(b) for b in q)
    if q not in ADMISSIBLE:
        raise ValueError(f"inadmissible quadruple {q}")
    return q


def table_matrix(q, spec: SystemSpec) -> Matrix:
    """One-step matrix A_{ijkl} for the quadruple q = (i, j, k, l)."""
    q = _check(q)
    mu, nu = spec.mu, spec.nu
    a, b, c, d = spec.alpha, spec.beta, spec.gamma, spec.delta
    one, zero = 1 + 0 * a, 0 * a
    ma, mb, nc, nd = mu * a, mu * b, nu * c, nu * d
    x_step = (1 + ma, zero, mb, zero)
    x_step_lag = (1 + ma, zero, zero, mb)
    y_step = (nc, zero, 1 + nd, zero)
    y_step_lag = (zero, nc, 1 + nd, zero)
    keep = [tuple(one if j == i else zero for j in range(4)) for i in range(4)]
    copy_u = (one, zero, zero, zero)
    copy_v = (zero, zero, one, zero)

    table = {
        (1, 1, 1, 1): (x_step, copy_u, y_step, copy_v),
        (1, 1, 1, 0): (x_step, copy_u, keep[V], copy_v),
        (1, 1, 0, 1): (x_step_lag, copy_u, y_step_lag, keep[V_LAG]),
        (1, 1, 0, 0): (x_step_lag, keep[U_LAG], keep[V], keep[V_LAG]),
        (1, 0, 1, 1): (keep[U], copy_u, y_step, copy_v),
        (1, 0, 0, 1): (keep[U], copy_u, y_step_lag, keep[V_LAG]),
        (0, 1, 1, 1): (x_step_lag, keep[U_LAG], y_step_lag, copy_v),
        (0, 1, 1, 0): (x_step_lag, keep[U_LAG], keep[V], copy_v),
        (0, 0, 1, 1): (keep[U], keep[U_LAG], y_step_lag, keep[V_LAG]),
    }
    return table[q]


def matrix_name(q) -> str:
    return "A_{" + "".join(str(b) for b in q) + "}"


def coefficient_at(t, grid: UnionGrid, spec: SystemSpec) -> Matrix:
    return table_matrix(classify_quadruple(t, grid), spec)

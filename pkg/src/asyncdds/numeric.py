"""Exact rational scalars, complex scalars and tiny dense-matrix helpers.

Rationals are :class:`fractions.Fraction` (always canonical, arbitrary
precision). Complex scalars are builtin :class:`complex`. Matrices are
tuples of row tuples so they are immutable and compare by value.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Sequence

Rat = Fraction
Cpx = complex

ATOL = 1e-9
RTOL = 1e-9

_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class ParseError(ValueError):
    """Raised when text cannot be read as a rational."""


def rat_from_string(s: str) -> Fraction:
    """Parse ``[-]p`` or ``[-]p/q`` into a canonical rational."""
    m = _RAT_RE.match(s.strip())
    if m is None:
        raise ParseError(f"not a rational literal: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def rat_to_string(r: Fraction) -> str:
    return str(Fraction(r))


def as_rat(value) -> Fraction:
    """Coerce int/str/Fraction to a rational; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return rat_from_string(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_floor_div(t, rho) -> int:
    t, rho = as_rat(t), as_rat(rho)
    if rho <= 0:
        raise ValueError("period must be positive")
    if t < 0:
        raise ValueError("time must be nonnegative")
    return t // rho


def is_integer(r: Fraction) -> bool:
    return Fraction(r).denominator == 1


def cpx(re_: float, im: float = 0.0) -> complex:
    z = complex(re_, im)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {z!r}")
    return z


def cpx_nth_root_principal(z: complex, p: int) -> complex:
    """Principal p-th root: modulus |z|^(1/p), argument Arg(z)/p with Arg in (-pi, pi]."""
    if p < 1:
        raise ValueError("root order must be a positive integer")
    z = complex(z)
    if z == 0:
        return 0j
    if z.imag == 0 and z.real > 0:
        return complex(z.real ** (1.0 / p), 0.0)
    r, phi = cmath.polar(z)
    # cmath.polar gives -pi for (-x, -0.0); keep the (-pi, pi] convention
    if phi == -math.pi:
        phi = math.pi
    return cmath.rect(r ** (1.0 / p), phi / p)


def isclose(a, b, atol: float = ATOL, rtol: float = RTOL) -> bool:
    return abs(a - b) <= atol + rtol * abs(b)


# -- matrices -----------------------------------------------------------------

Matrix = tuple  # tuple[tuple[scalar, ...], ...]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n: int, zero=Fraction(0)) -> Matrix:
    return tuple(tuple(zero for _ in range(n)) for _ in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), start=0 * row[0]) for col in cols)
        for row in a
    )


def matvec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v)), start=0 * row[0]) for row in a)


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matscale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def matpow(a: Matrix, n: int) -> Matrix:
    """a**n by binary exponentiation, n >= 0."""
    if n < 0:
        raise ValueError("negative matrix power")
    one = 1 + 0 * a[0][0]
    result = identity(len(a), one=one, zero=0 * one)
    base = a
    while n:
        if n & 1:
            result = matmul(result, base)
        n >>= 1
        if n:
            base = matmul(base, base)
    return result


def mat_to_float(a: Matrix) -> Matrix:
    return tuple(tuple(float(x) for x in row) for row in a)


def mat_is_exact(a: Matrix) -> bool:
    return all(isinstance(x, (int, Fraction)) for row in a for x in row)


def mat_max_abs(a: Matrix) -> float:
    """Infinity norm (max absolute row sum)."""
    return max(sum(abs(complex(x)) for x in row) for row in a)


def mat_allclose(a: Matrix, b: Matrix, atol: float = ATOL, rtol: float = RTOL) -> bool:
    return all(
        isclose(complex(x), complex(y), atol, rtol)
        for ra, rb in zip(a, b)
        for x, y in zip(ra, rb)
    )


def max_denominator_digits(a: Matrix) -> int:
    return max(
        (len(str(x.denominator)) for row in a for x in row if isinstance(x, Fraction)),
        default=1,
    )

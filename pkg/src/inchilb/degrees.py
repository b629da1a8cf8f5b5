"""Degrees and dimensions of the truncated quotients, via generating function.

For n >= mu_r - 1, deg I_n is the coefficient of t^(n - mu_r + 1) in
prod_j 1/(1 - b_j t); the sequence therefore starts at 1 (zero ideal) and
grows like max(b_j)^n.  Dimensions come in two branches: the full c*n below
the first interesting width, and n*(c-1) + mu_r - 1 from there on.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RepeatedColumnDegreesError
from .orbits import OrbitMonomial


def degree_sequence(orb: OrbitMonomial, nmax: int) -> list[int]:
    """deg I_n for n = mu_r - 1 .. nmax, exactly."""
    mu_last = orb.support[-1]
    if nmax < mu_last - 1:
        raise ValueError(f"nmax must be at least {mu_last - 1}")
    top = nmax - mu_last + 1
    coeffs = [1] + [0] * top
    for b in orb.column_degrees:
        for i in range(1, top + 1):
            coeffs[i] += b * coeffs[i - 1]
    return coeffs


def degree_closed_form(orb: OrbitMonomial, n: int) -> int:
    """Partial-fraction value sum_i b_i^(n-mu_r+r) / prod_{j != i} (b_i - b_j).

    Requires pairwise distinct column degrees; evaluated in exact rationals
    and the sum must clear to an integer.
    """
    b = orb.column_degrees
    mu_last = orb.support[-1]
    r = len(b)
    if len(set(b)) != r:
        raise RepeatedColumnDegreesError(
            f"column degrees {b} repeat; use degree_sequence instead"
        )
    if n < mu_last - 1:
        raise ValueError(f"n must be at least {mu_last - 1}")
    total = Fraction(0)
    for i, bi in enumerate(b):
        denom = 1
        for j, bj in enumerate(b):
            if j != i:
                denom *= bi - bj
        total += Fraction(bi ** (n - mu_last + r), denom)
    if total.denominator != 1:
        raise AssertionError(f"partial fractions gave non-integer {total}")
    return total.numerator


def truncation_dimension(orb: OrbitMonomial, n: int) -> int:
    """Krull dimension of the quotient by the width-n truncation."""
    if n < 0:
        raise ValueError("n must be non-negative")
    c = orb.nrows
    mu_last = orb.support[-1]
    if n < mu_last:
        return c * n
    return n * (c - 1) + mu_last - 1


def asymptotics(orb: OrbitMonomial) -> tuple[int, int]:
    """(limit of dim/n, limit of deg^(1/n)) = (c - 1, max column degree)."""
    return orb.nrows - 1, max(orb.column_degrees)

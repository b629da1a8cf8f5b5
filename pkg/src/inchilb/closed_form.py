"""Closed-form equivariant Hilbert series of a monomial orbit ideal.

The series over all truncations is the rational function

    g(s,t) / [ (1-t)^e * prod_j ( (1-t)^(c-1) - s*(1 + t + ... + t^(b_j-1)) ) ]

with one denominator factor per support column of the orbit monomial and
e = c*(mu_r - r - 1) + r, which is negative exactly when r < c and the
support is an initial segment.  The numerator g is obtained by dividing a
product-form polynomial exactly by (1-t)^c - s; the division is guaranteed
to be exact, and NotDivisibleError here means a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NegativeDenominatorPowerError,
    TooManySupportColumnsError,
)
from .orbits import OrbitMonomial
from .polys import (
    DenomFactor,
    FactoredRational2,
    Poly1,
    Poly2,
    exact_divide,
    geometric,
    one_minus_t,
    s_pow,
    t_pow,
)


def raw_numerator(orb: OrbitMonomial) -> Poly2:
    """The numerator before division by (1-t)^c - s:

    (1-t)^(c(mu_r - r)) * prod_j [ (1-t)^c - s + s*t^(b_j) ]  -  s^(mu_r) * t^(sum b_j)
    """
    c = orb.nrows
    mu = orb.support
    b = orb.column_degrees
    r = len(mu)
    s = s_pow(1)
    product = Poly2.from_tpoly(one_minus_t(c * (mu[-1] - r)))
    for bj in b:
        product = product * (
            Poly2.from_tpoly(one_minus_t(c)) - s + s * Poly2.from_tpoly(t_pow(bj))
        )
    return product - s_pow(mu[-1]) * Poly2.from_tpoly(t_pow(sum(b)))


def series_numerator(orb: OrbitMonomial) -> Poly2:
    """The reduced numerator g: raw_numerator divided exactly by (1-t)^c - s."""
    divisor = Poly2.from_tpoly(one_minus_t(orb.nrows)) - s_pow(1)
    return exact_divide(raw_numerator(orb), divisor)


def series_denominator(orb: OrbitMonomial) -> tuple[int, tuple[DenomFactor, ...]]:
    """(power of (1-t), factor list); factors sorted by column degree."""
    c = orb.nrows
    mu = orb.support
    r = len(mu)
    e = c * (mu[-1] - r - 1) + r
    factors = tuple(
        DenomFactor(c - 1, geometric(bj)) for bj in sorted(orb.column_degrees)
    )
    return e, factors


def equivariant_series(orb: OrbitMonomial) -> FactoredRational2:
    e, factors = series_denominator(orb)
    return FactoredRational2(series_numerator(orb), e, factors)


def _tail_sum(c: int, total_deg: int, mu_last: int, r: int) -> Poly2:
    """t^(sum b) * sum_{j=0}^{mu_r - r - 1} (1-t)^(cj) * s^(mu_r - 1 - j)."""
    acc = Poly2(0)
    for j in range(mu_last - r):
        acc = acc + Poly2.from_tpoly(one_minus_t(c * j)) * s_pow(mu_last - 1 - j)
    return Poly2.from_tpoly(t_pow(total_deg)) * acc


def small_support_numerator(orb: OrbitMonomial) -> Poly2:
    """Closed formula for g when the support has at most three columns.

    Only valid when the (1-t) denominator power is non-negative; the sum
    over an empty index range is zero.
    """
    c = orb.nrows
    mu = orb.support
    b = orb.column_degrees
    r = len(mu)
    if r > 3:
        raise TooManySupportColumnsError(
            f"closed numerator formula covers at most 3 support columns, got {r}"
        )
    e = c * (mu[-1] - r - 1) + r
    if e < 0:
        raise NegativeDenominatorPowerError(
            f"closed numerator formula requires a non-negative power, got {e}"
        )
    head = Poly2.from_tpoly(one_minus_t(c * (mu[-1] - 1)))
    if r >= 2:
        mix = Poly1(-(r - 1)) + sum(t_pow(bj) for bj in b)
        head = head + s_pow(1) * Poly2.from_tpoly(
            one_minus_t(c * (mu[-1] - 2)) * mix
        )
    if r == 3:
        pairs = t_pow(b[0] + b[1]) + t_pow(b[0] + b[2]) + t_pow(b[1] + b[2])
        mix2 = Poly1(1) - sum(t_pow(bj) for bj in b) + pairs
        head = head + s_pow(2) * Poly2.from_tpoly(
            one_minus_t(c * (mu[-1] - 3)) * mix2
        )
    return head + _tail_sum(c, sum(b), mu[-1], r)


@dataclass(frozen=True)
class ReducednessReport:
    """Evidence that the series is in lowest terms.

    numerator_vanishes: the pre-division numerator vanishes at
    s = (1-t)^c, so the division producing g is exact.
    factor_remainders: pseudo-division remainder of g by each denominator
    factor; a non-zero remainder certifies the factor does not divide g.
    """

    numerator_vanishes: bool
    factor_remainders: tuple[Poly1, ...]

    @property
    def ok(self) -> bool:
        return self.numerator_vanishes and all(
            not rem.is_zero() for rem in self.factor_remainders
        )


def remainder_mod_factor(g: Poly2, factor: DenomFactor) -> Poly1:
    """Pseudo-division remainder of g by (1-t)^c_exp - s*f, in Z[t][s].

    Each step multiplies the lower rows by the leading s-coefficient -f and
    eliminates the top s-row, so the result R satisfies
    (-f)^m * g = q*d + R with R free of s.  Since the factor is primitive
    and has s-degree 1, R = 0 if and only if the factor divides g.
    """
    d0 = one_minus_t(factor.c_exp)
    d1 = -factor.f
    rows = g.as_s_dict()
    while rows and max(rows) > 0:
        m = max(rows)
        lead = rows.pop(m)
        rows = {k: d1 * p for k, p in rows.items()}
        low = rows.get(m - 1, Poly1(0)) - lead * d0
        if low.is_zero():
            rows.pop(m - 1, None)
        else:
            rows[m - 1] = low
    return rows.get(0, Poly1(0))


def check_reduced(orb: OrbitMonomial) -> ReducednessReport:
    c = orb.nrows
    vanishes = raw_numerator(orb).substitute_s(one_minus_t(c)).is_zero()
    g = series_numerator(orb)
    _, factors = series_denominator(orb)
    remainders = tuple(remainder_mod_factor(g, fac) for fac in factors)
    return ReducednessReport(vanishes, remainders)

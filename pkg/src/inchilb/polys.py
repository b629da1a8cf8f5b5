"""Exact sparse polynomial arithmetic over the integers.

A univariate polynomial in t is stored as a dict {t_exponent: coefficient};
a bivariate polynomial in s and t as a dict {(s_exponent, t_exponent):
coefficient}.  Zero coefficients are never stored, so the zero polynomial is
the empty dict and equality is plain dict equality.  Coefficients are Python
ints throughout: the quantities handled here (Hilbert numerators, degrees,
series coefficients) outgrow any fixed width quickly, so arbitrary precision
is not optional.

The module also provides the two structured rational-function types used by
the rest of the package:

* ``FactoredRational2`` is a bivariate rational function whose denominator is
  a signed power of (1-t) times factors of the shape (1-t)^k - s*f(t), and
* ``SeriesTable`` holds its exact power-series coefficients up to a bound,
  entry (n, j) being the coefficient of s^n t^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    InvalidTruncationError,
    NotDivisibleError,
    ZeroNumeratorError,
)


class Poly1:
    """Sparse polynomial in t with int coefficients.

    Instances are immutable by convention: no method mutates ``coeffs``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self.coeffs: dict[int, int] = {e: c for e, c in coeffs.items() if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree in t; the zero polynomial has degree -1."""
        return max(self.coeffs) if self.coeffs else -1

    def __call__(self, x: int) -> int:
        return sum(c * x**e for e, c in self.coeffs.items())

    def __add__(self, other: Poly1 | int) -> Poly1:
        other = _as_poly1(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly1(out)

    __radd__ = __add__

    def __neg__(self) -> Poly1:
        return Poly1({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: Poly1 | int) -> Poly1:
        return self + (-_as_poly1(other))

    def __rsub__(self, other: int) -> Poly1:
        return _as_poly1(other) - self

    def __mul__(self, other: Poly1 | int) -> Poly1:
        other = _as_poly1(other)
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Poly1(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly1:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly1(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly1(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def dense(self, degmax: int | None = None) -> list[int]:
        """Coefficient list c_0..c_d (d = degree, or degmax when given)."""
        top = self.degree if degmax is None else degmax
        out = [0] * (max(top, -1) + 1)
        for e, c in self.coeffs.items():
            if e <= top:
                out[e] = c
        return out

    def __str__(self) -> str:
        return format_poly1(self)

    def __repr__(self) -> str:
        return f"Poly1({self.coeffs!r})"


def _as_poly1(value: Poly1 | int) -> Poly1:
    return value if isinstance(value, Poly1) else Poly1(value)


def t_pow(k: int) -> Poly1:
    """The monomial t^k."""
    return Poly1({k: 1})


def one_minus_t(k: int) -> Poly1:
    """(1-t)^k expanded, k >= 0."""
    if k < 0:
        raise ValueError("negative power of (1-t) is not a polynomial")
    return Poly1({i: (-1) ** i * comb(k, i) for i in range(k + 1)})


def geometric(length: int) -> Poly1:
    """1 + t + ... + t^(length-1); the empty sum for length 0."""
    return Poly1({i: 1 for i in range(length)})


class Poly2:
    """Sparse polynomial in s and t with int coefficients.

    Keys are (s_exponent, t_exponent) pairs.  Immutable by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {(0, 0): coeffs}
        self.coeffs: dict[tuple[int, int], int] = {
            m: c for m, c in coeffs.items() if c
        }

    @classmethod
    def from_tpoly(cls, p: Poly1) -> Poly2:
        return cls({(0, e): c for e, c in p.coeffs.items()})

    @classmethod
    def monomial(cls, s_exp: int, t_exp: int, coeff: int = 1) -> Poly2:
        return cls({(s_exp, t_exp): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def s_degree(self) -> int:
        """Degree in s; -1 for the zero polynomial."""
        return max((m[0] for m in self.coeffs), default=-1)

    def coeff_of_s(self, k: int) -> Poly1:
        """The coefficient of s^k, as a polynomial in t."""
        return Poly1({te: c for (se, te), c in self.coeffs.items() if se == k})

    def as_s_dict(self) -> dict[int, Poly1]:
        """Regroup as {s_exponent: t-polynomial}, omitting zero rows."""
        rows: dict[int, dict[int, int]] = {}
        for (se, te), c in self.coeffs.items():
            rows.setdefault(se, {})[te] = c
        return {se: Poly1(row) for se, row in sorted(rows.items())}

    def substitute_s(self, value: Poly1) -> Poly1:
        """Evaluate at s = value(t), returning a polynomial in t."""
        powers: dict[int, Poly1] = {0: Poly1(1)}
        result = Poly1(0)
        for (se, te), c in sorted(self.coeffs.items()):
            if se not in powers:
                powers[se] = value ** se
            result = result + powers[se] * Poly1({te: c})
        return result

    def __add__(self, other: Poly2 | int) -> Poly2:
        other = _as_poly2(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self) -> Poly2:
        return Poly2({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: Poly2 | int) -> Poly2:
        return self + (-_as_poly2(other))

    def __rsub__(self, other: int) -> Poly2:
        return _as_poly2(other) - self

    def __mul__(self, other: Poly2 | int) -> Poly2:
        other = _as_poly2(other)
        out: dict[tuple[int, int], int] = {}
        for (s1, t1), c1 in self.coeffs.items():
            for (s2, t2), c2 in other.coeffs.items():
                m = (s1 + s2, t1 + t2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly2:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly2(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly2(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        return format_poly2(self)

    def __repr__(self) -> str:
        return f"Poly2({self.coeffs!r})"


def _as_poly2(value: Poly2 | int) -> Poly2:
    return value if isinstance(value, Poly2) else Poly2(value)


def s_pow(k: int) -> Poly2:
    """The monomial s^k."""
    return Poly2({(k, 0): 1})


def exact_divide(p: Poly2, d: Poly2) -> Poly2:
    """Divide p by d exactly in Z[s,t].

    Uses greedy leading-term cancellation under the lexicographic order with
    s > t (leading terms multiply over Z, so a multiple is peeled off term by
    term).  Raises NotDivisibleError as soon as the leading term of the
    running remainder is not a term multiple of d's leading term; for exact
    multiples this never happens.
    """
    if d.is_zero():
        raise ValueError("division by the zero polynomial")
    d_lead = max(d.coeffs)
    d_lc = d.coeffs[d_lead]
    quotient: dict[tuple[int, int], int] = {}
    rem = dict(p.coeffs)
    while rem:
        lead = max(rem)
        lc = rem[lead]
        qs, qt = lead[0] - d_lead[0], lead[1] - d_lead[1]
        if qs < 0 or qt < 0 or lc % d_lc:
            raise NotDivisibleError(
                f"term {lead} with coefficient {lc} is not a multiple of the "
                f"leading term {d_lead} (coefficient {d_lc}) of the divisor"
            )
        qc = lc // d_lc
        quotient[(qs, qt)] = qc
        for (ms, mt), c in d.coeffs.items():
            key = (ms + qs, mt + qt)
            nc = rem.get(key, 0) - qc * c
            if nc:
                rem[key] = nc
            else:
                rem.pop(key, None)
    return Poly2(quotient)


@dataclass(frozen=True)
class DenomFactor:
    """One denominator factor (1-t)^c_exp - s*f(t)."""

    c_exp: int
    f: Poly1

    def as_poly2(self) -> Poly2:
        p = Poly2.from_tpoly(one_minus_t(self.c_exp))
        return p - Poly2.monomial(1, 0) * Poly2.from_tpoly(self.f)


@dataclass(frozen=True)
class FactoredRational2:
    """numerator / [ (1-t)^pow_one_minus_t * prod(factors) ].

    ``pow_one_minus_t`` may be negative; a negative power is resolved at
    expansion time by multiplying the matching positive power into the
    numerator.  Every factor must satisfy f(1) > 0.
    """

    numerator: Poly2
    pow_one_minus_t: int
    factors: tuple[DenomFactor, ...]

    def __post_init__(self):
        for fac in self.factors:
            if fac.f(1) <= 0:
                raise ValueError(
                    f"denominator factor with f(1) = {fac.f(1)} <= 0"
                )

    def __mul__(self, other: FactoredRational2) -> FactoredRational2:
        return FactoredRational2(
            self.numerator * other.numerator,
            self.pow_one_minus_t + other.pow_one_minus_t,
            self.factors + other.factors,
        )


@dataclass(frozen=True)
class SeriesTable:
    """Exact power-series coefficients: rows[n][j] is the s^n t^j coefficient."""

    nmax: int
    degmax: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, n: int, j: int) -> int:
        return self.rows[n][j]


def _series_one_minus_t(power: int, degmax: int) -> list[int]:
    """Truncated t-series of (1-t)^power for any integer power."""
    if power >= 0:
        return one_minus_t(power).dense(degmax)
    m = -power
    return [comb(m - 1 + k, k) for k in range(degmax + 1)]


def _trunc_mul(a: list[int], b: list[int], degmax: int) -> list[int]:
    out = [0] * (degmax + 1)
    for i, ca in enumerate(a):
        if ca:
            top = degmax - i
            for j, cb in enumerate(b[: top + 1]):
                if cb:
                    out[i + j] += ca * cb
    return out


def expand(series: FactoredRational2, nmax: int, degmax: int) -> SeriesTable:
    """Exact power-series table of a factored rational function.

    Works coefficient-of-s^n first: each factor (1-t)^k - s*f is inverted by
    the recurrence G_n = (P_n + f*G_{n-1}) / (1-t)^k over t-series truncated
    at degmax, where 1/(1-t)^k is the binomial series.  All arithmetic is in
    integers; the result is exact for every (n, j) within the bounds.
    """
    if nmax < 0 or degmax < 0:
        raise InvalidTruncationError(f"nmax={nmax}, degmax={degmax}")
    width = degmax + 1
    rows = [[0] * width for _ in range(nmax + 1)]
    for (se, te), c in series.numerator.coeffs.items():
        if se <= nmax and te <= degmax:
            rows[se][te] += c
    scale = _series_one_minus_t(-series.pow_one_minus_t, degmax)
    rows = [_trunc_mul(row, scale, degmax) for row in rows]
    for fac in series.factors:
        f_dense = fac.f.dense(degmax)
        inv = _series_one_minus_t(-fac.c_exp, degmax)
        prev: list[int] | None = None
        new_rows = []
        for row in rows:
            cur = row
            if prev is not None:
                shifted = _trunc_mul(f_dense, prev, degmax)
                cur = [x + y for x, y in zip(cur, shifted)]
            cur = _trunc_mul(cur, inv, degmax)
            new_rows.append(cur)
            prev = cur
        rows = new_rows
    return SeriesTable(nmax, degmax, tuple(tuple(r) for r in rows))


def divide_by_one_minus_t(p: Poly1) -> Poly1:
    """Exact quotient p / (1-t); requires p(1) == 0."""
    if p(1) != 0:
        raise NotDivisibleError("p(1) != 0, so (1-t) does not divide p")
    dense = p.dense()
    out = []
    acc = 0
    for c in dense[:-1] if dense else []:
        acc += c
        out.append(acc)
    return Poly1({i: c for i, c in enumerate(out)})


def reduced_form(numerator: Poly1, pow_one_minus_t: int) -> tuple[int, int, Poly1]:
    """Reduce numerator/(1-t)^pow to lowest terms against (1-t).

    Returns (dim, degree, reduced_numerator) where numerator equals
    reduced_numerator * (1-t)^(pow - dim) and reduced_numerator(1) = degree
    is non-zero.  For Hilbert series dim is the Krull dimension and degree
    the multiplicity.
    """
    if numerator.is_zero():
        raise ZeroNumeratorError("the zero numerator has no reduced form")
    if pow_one_minus_t < 0:
        raise ValueError("pow_one_minus_t must be non-negative")
    stripped = 0
    cur = numerator
    while cur(1) == 0:
        cur = divide_by_one_minus_t(cur)
        stripped += 1
    return pow_one_minus_t - stripped, cur(1), cur


def format_poly1(p: Poly1, var: str = "t") -> str:
    """Human-readable form with terms in ascending degree."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, c in sorted(p.coeffs.items()):
        if e == 0:
            body = str(abs(c))
        else:
            v = var if e == 1 else f"{var}^{e}"
            body = v if abs(c) == 1 else f"{abs(c)}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def format_poly2(p: Poly2) -> str:
    """Groups terms by s-degree: (t-poly) + s*(t-poly) + s^2*(t-poly) + ..."""
    if p.is_zero():
        return "0"
    groups = []
    for se, tp in p.as_s_dict().items():
        body = format_poly1(tp)
        if se == 0:
            groups.append(body if len(tp.coeffs) == 1 else f"({body})")
            continue
        s_part = "s" if se == 1 else f"s^{se}"
        if len(tp.coeffs) == 1:
            neg = body.startswith("-")
            mag = body[1:] if neg else body
            piece = s_part if mag == "1" else f"{s_part}*{mag}"
            groups.append(f"-{piece}" if neg else piece)
        else:
            groups.append(f"{s_part}*({body})")
    out = groups[0]
    for g in groups[1:]:
        if g.startswith("-"):
            out += f" - {g[1:]}"
        else:
            out += f" + {g}"
    return out

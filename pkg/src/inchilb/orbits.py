"""Orbit monomials and their truncated monomial ideals.

The ambient ring has variables x[i,j] arranged in c rows and infinitely many
columns; the shift monoid of strictly increasing maps acts on the column
index.  An orbit ideal is generated by all shifts of a single monomial, which
is stored as its c x width exponent matrix.  Truncating to the first n
columns produces an ordinary monomial ideal in c*n variables, represented by
exponent vectors in row-major order: variable x[i,j] sits at index
(i-1)*n + (j-1).
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement

from .errors import (
    EmptyMonomialError,
    InvalidTruncationError,
    NegativeExponentError,
    NoParentError,
    ParseError,
)


@dataclass(frozen=True)
class OrbitMonomial:
    """The monomial generating the orbit, as a row tuple of column tuples.

    The last column must be non-zero (construct via from_matrix, which strips
    trailing zero columns); interior zero columns are allowed and simply do
    not belong to the support.
    """

    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.exponents
        if not rows or not rows[0]:
            raise EmptyMonomialError("orbit monomial has no entries")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("exponent rows have unequal lengths")
        for row in rows:
            for e in row:
                if e < 0:
                    raise NegativeExponentError(f"exponent {e} < 0")
        if all(row[-1] == 0 for row in rows):
            raise ValueError(
                "trailing zero column; build orbits with from_matrix"
            )

    @classmethod
    def from_matrix(cls, matrix) -> OrbitMonomial:
        """Build from a c x w matrix of exponents, stripping trailing zero columns."""
        rows = [tuple(int(e) for e in row) for row in matrix]
        if not rows or any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("matrix must be rectangular and non-empty")
        for row in rows:
            for e in row:
                if e < 0:
                    raise NegativeExponentError(f"exponent {e} < 0")
        width = len(rows[0])
        while width > 0 and all(row[width - 1] == 0 for row in rows):
            width -= 1
        if width == 0:
            raise EmptyMonomialError("all exponents are zero")
        return cls(tuple(row[:width] for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.exponents)

    @property
    def width(self) -> int:
        return len(self.exponents[0])

    @cached_property
    def support(self) -> tuple[int, ...]:
        """1-based indices of the non-zero columns, increasing."""
        return tuple(
            j + 1
            for j in range(self.width)
            if any(row[j] for row in self.exponents)
        )

    @cached_property
    def column_degrees(self) -> tuple[int, ...]:
        """Total degree of each support column, in support order."""
        return tuple(
            sum(row[j - 1] for row in self.exponents) for j in self.support
        )

    @property
    def total_degree(self) -> int:
        return sum(self.column_degrees)

    @property
    def last_gap(self) -> int:
        """Gap between the last two support columns (r >= 2 only)."""
        if len(self.support) < 2:
            raise NoParentError("a single support column has no gap")
        return self.support[-1] - self.support[-2]

    def __str__(self) -> str:
        return monomial_string(self)


@dataclass(frozen=True)
class MonomialIdealFinite:
    """A monomial ideal in the c x n variable grid, by minimal generators.

    ``generators`` are row-major exponent vectors of length nrows*n, kept
    sorted so equal ideals compare and hash equal.
    """

    nrows: int
    n: int
    generators: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, nrows: int, n: int, gens) -> MonomialIdealFinite:
        vecs = sorted({tuple(g) for g in gens})
        for v in vecs:
            if len(v) != nrows * n:
                raise ValueError("generator length does not match the grid")
            if not any(v):
                raise ValueError("the unit ideal is not representable")
        return cls(nrows, n, tuple(vecs))

    @property
    def nvars(self) -> int:
        return self.nrows * self.n

    def is_zero(self) -> bool:
        return not self.generators


def truncate(orb: OrbitMonomial, n: int) -> MonomialIdealFinite:
    """The ideal of all shifts of the orbit monomial into the first n columns.

    A shift places support column k at column position p_k, subject to
    p_1 >= mu_1, p_{k+1} - p_k >= mu_{k+1} - mu_k, and p_r <= n.  Writing
    p_k = mu_k + e_k turns these into 0 <= e_1 <= ... <= e_r <= n - mu_r,
    so the placements are combinations with replacement and the generator
    count is binomial(n - mu_r + r, r).  No placement exists when n < mu_r,
    giving the zero ideal.
    """
    if n < 0:
        raise InvalidTruncationError(f"truncation width {n} < 0")
    mu = orb.support
    r = len(mu)
    c = orb.nrows
    gens = []
    for offsets in combinations_with_replacement(range(n - mu[-1] + 1), r):
        vec = [0] * (c * n)
        for k, e in enumerate(offsets):
            col = mu[k] + e
            for i in range(c):
                vec[i * n + (col - 1)] = orb.exponents[i][mu[k] - 1]
        gens.append(tuple(vec))
    return MonomialIdealFinite.make(c, n, gens)


def parent_orbit(orb: OrbitMonomial) -> OrbitMonomial:
    """The orbit of the monomial with its last support column removed."""
    if len(orb.support) < 2:
        raise NoParentError("cannot drop the only support column")
    keep = orb.support[-2]
    return OrbitMonomial(tuple(row[:keep] for row in orb.exponents))


def minimalize(gens) -> set[tuple[int, ...]]:
    """Divisibility-minimal subset generating the same monomial ideal."""
    vecs = sorted({tuple(g) for g in gens}, key=sum)
    out: list[tuple[int, ...]] = []
    for v in vecs:
        if not any(_divides(m, v) for m in out):
            out.append(v)
    return set(out)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def embed_generators(
    gens, nrows: int, n_old: int, n_new: int
) -> list[tuple[int, ...]]:
    """Re-index row-major vectors from an n_old grid into a wider n_new grid."""
    if n_new < n_old:
        raise ValueError("cannot shrink the grid")
    out = []
    for g in gens:
        vec = [0] * (nrows * n_new)
        for i in range(nrows):
            for j in range(n_old):
                vec[i * n_new + j] = g[i * n_old + j]
        out.append(tuple(vec))
    return out


_FACTOR = re.compile(r"x\[(\d+),(\d+)\](?:\^(\d+))?")


def parse_monomial(text: str) -> OrbitMonomial:
    """Parse a monomial string like ``x[1,3]^2 x[1,5]^4``.

    Factors are separated by whitespace or ``*``; rows and columns are
    1-based; ``^1`` may be omitted.  Repeated factors multiply.
    """
    pos = 0
    end = len(text)
    powers: dict[tuple[int, int], int] = {}
    seen = False
    while pos < end:
        if text[pos] in " \t*":
            pos += 1
            continue
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError(
                f"expected a factor like x[1,2] or x[1,2]^3, got {text[pos:pos+12]!r}",
                position=pos,
            )
        row, col = int(m.group(1)), int(m.group(2))
        exp = int(m.group(3)) if m.group(3) is not None else 1
        if row < 1 or col < 1:
            raise ParseError(
                "rows and columns are 1-based", position=pos
            )
        powers[(row, col)] = powers.get((row, col), 0) + exp
        seen = True
        pos = m.end()
    if not seen:
        raise ParseError("empty monomial string", position=0)
    c = max(r for r, _ in powers)
    w = max(col for _, col in powers)
    matrix = [[0] * w for _ in range(c)]
    for (r, col), e in powers.items():
        matrix[r - 1][col - 1] += e
    return OrbitMonomial.from_matrix(matrix)


def parse_matrix(text: str) -> OrbitMonomial:
    """Parse a matrix literal like ``[[0,0,2,0,4]]`` into an orbit."""
    try:
        value = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"not a matrix literal: {exc}") from exc
    if not isinstance(value, (list, tuple)) or not value:
        raise ParseError("matrix literal must be a non-empty list of rows")
    for row in value:
        if not isinstance(row, (list, tuple)) or not row:
            raise ParseError("each matrix row must be a non-empty list")
        for e in row:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ParseError(f"matrix entries must be integers, got {e!r}")
    if len({len(row) for row in value}) != 1:
        raise ParseError("matrix rows must all have the same length")
    return OrbitMonomial.from_matrix(value)


def monomial_string(orb: OrbitMonomial) -> str:
    """Render as the monomial grammar; inverse of parse_monomial."""
    parts = []
    for i, row in enumerate(orb.exponents, start=1):
        for j, e in enumerate(row, start=1):
            if e == 1:
                parts.append(f"x[{i},{j}]")
            elif e > 1:
                parts.append(f"x[{i},{j}]^{e}")
    return " ".join(parts)


def generator_string(vec: tuple[int, ...], nrows: int, n: int) -> str:
    """Render one generator vector in the monomial grammar; "1" if empty."""
    parts = []
    for i in range(nrows):
        for j in range(n):
            e = vec[i * n + j]
            if e == 1:
                parts.append(f"x[{i+1},{j+1}]")
            elif e > 1:
                parts.append(f"x[{i+1},{j+1}]^{e}")
    return " ".join(parts) if parts else "1"

"""Brute-force Hilbert series of finite monomial-ideal quotients.

Two independent computations of the Hilbert numerator N(t), where the
Hilbert series of K[x_1..x_V]/I is N(t)/(1-t)^V:

* inclusion-exclusion over subsets of generators (exponential, guarded), and
* pivot splitting N(I) = N(I + (x_v)) + t*N(I : x_v) (scalable).

They are mutually checking; everything downstream (Hilbert functions,
dimensions, degrees) is derived from the numerator.  Both expect minimal
generators, which is what truncation produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import TooManyGeneratorsError
from .orbits import MonomialIdealFinite, minimalize
from .polys import Poly1, reduced_form

DEFAULT_TAYLOR_GUARD = 25

Vec = tuple[int, ...]


def hilbert_numerator_taylor(
    ideal: MonomialIdealFinite, guard: int = DEFAULT_TAYLOR_GUARD
) -> Poly1:
    """Inclusion-exclusion numerator: sum over subsets S of (-1)^|S| t^(deg lcm S).

    Generators are folded in one at a time while merging subsets that share
    an lcm, which changes nothing about the result (later contributions
    depend only on the running lcm) but keeps the state count far below 2^k
    in practice.  The guard still bounds the worst case up front.
    """
    gens = ideal.generators
    if len(gens) > guard:
        raise TooManyGeneratorsError(
            f"{len(gens)} generators exceeds the subset-enumeration guard {guard}"
        )
    states: dict[Vec, int] = {(0,) * ideal.nvars: 1}
    for g in gens:
        nxt = dict(states)
        for lcm, coef in states.items():
            merged = tuple(max(a, b) for a, b in zip(lcm, g))
            nxt[merged] = nxt.get(merged, 0) - coef
        states = {v: c for v, c in nxt.items() if c}
    out: dict[int, int] = {}
    for lcm, coef in states.items():
        d = sum(lcm)
        out[d] = out.get(d, 0) + coef
    return Poly1(out)


_pivot_memo: dict[tuple[Vec, ...], dict[int, int]] = {}


def hilbert_numerator_pivot(ideal: MonomialIdealFinite) -> Poly1:
    """Pivot-splitting numerator, iterative with a shared memo table.

    Base cases: no generators -> 1; generators supported on pairwise
    disjoint variables -> product of (1 - t^deg).  Otherwise split on x_v
    for the variable v occurring in the most generators (lowest index on
    ties): N(I) = N(I + (x_v)) + t*N(I : x_v).  Both branches stay minimal
    (the colon branch after re-minimalizing).
    """
    target = ideal.generators
    if target in _pivot_memo:
        return Poly1(dict(_pivot_memo[target]))
    pending: dict[tuple[Vec, ...], tuple] = {}
    stack: list[tuple[Vec, ...]] = [target]
    while stack:
        key = stack[-1]
        if key in _pivot_memo:
            stack.pop()
            continue
        if key in pending:
            left, right = pending.pop(key)
            combined = dict(_pivot_memo[left])
            for e, c in _pivot_memo[right].items():
                combined[e + 1] = combined.get(e + 1, 0) + c
            _pivot_memo[key] = {e: c for e, c in combined.items() if c}
            stack.pop()
            continue
        base = _base_numerator(key)
        if base is not None:
            _pivot_memo[key] = base
            stack.pop()
            continue
        v = _pivot_variable(key)
        unit = tuple(1 if i == v else 0 for i in range(len(key[0])))
        left = tuple(sorted([g for g in key if g[v] == 0] + [unit]))
        right = tuple(
            sorted(
                minimalize(
                    tuple(
                        e - 1 if i == v and e > 0 else e
                        for i, e in enumerate(g)
                    )
                    for g in key
                )
            )
        )
        pending[key] = (left, right)
        if left not in _pivot_memo:
            stack.append(left)
        if right not in _pivot_memo:
            stack.append(right)
    return Poly1(dict(_pivot_memo[target]))


def _base_numerator(gens: tuple[Vec, ...]) -> dict[int, int] | None:
    """Numerator dict for the easy cases, else None."""
    if not gens:
        return {0: 1}
    nvars = len(gens[0])
    for i in range(nvars):
        if sum(1 for g in gens if g[i]) > 1:
            return None
    result = Poly1(1)
    for g in gens:
        result = result * Poly1({0: 1, sum(g): -1})
    return dict(result.coeffs)


def _pivot_variable(gens: tuple[Vec, ...]) -> int:
    counts = [0] * len(gens[0])
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    return max(range(len(counts)), key=lambda i: (counts[i], -i))


def hilbert_function(ideal: MonomialIdealFinite, degmax: int) -> list[int]:
    """Coefficients of N(t)/(1-t)^V for degrees 0..degmax."""
    if degmax < 0:
        raise ValueError("degmax must be non-negative")
    num = hilbert_numerator_pivot(ideal)
    v = ideal.nvars
    out = [0] * (degmax + 1)
    for e, c in num.coeffs.items():
        if e > degmax:
            continue
        if v == 0:
            out[e] += c
        else:
            for j in range(e, degmax + 1):
                out[j] += c * comb(v - 1 + j - e, j - e)
    return out


def dim_and_degree(ideal: MonomialIdealFinite) -> tuple[int, int]:
    """Krull dimension and degree of the quotient by the ideal."""
    num = hilbert_numerator_pivot(ideal)
    dim, deg, _ = reduced_form(num, ideal.nvars)
    return dim, deg


@dataclass(frozen=True)
class HilbertSeriesFinite:
    """Hilbert data of one finite quotient: numerator over (1-t)^nvars."""

    num: Poly1
    nvars: int
    reduced: tuple[int, int, Poly1] | None = None


def finite_series(
    ideal: MonomialIdealFinite, include_reduced: bool = True
) -> HilbertSeriesFinite:
    num = hilbert_numerator_pivot(ideal)
    reduced = reduced_form(num, ideal.nvars) if include_reduced else None
    return HilbertSeriesFinite(num, ideal.nvars, reduced)

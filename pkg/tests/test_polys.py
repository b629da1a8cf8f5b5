"""Polynomial arithmetic, exact division, expansion, reduction."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inchilb.errors import (
    InvalidTruncationError,
    NotDivisibleError,
    ZeroNumeratorError,
)
from inchilb.polys import (
    DenomFactor,
    FactoredRational2,
    Poly1,
    Poly2,
    exact_divide,
    expand,
    format_poly1,
    format_poly2,
    geometric,
    one_minus_t,
    reduced_form,
    s_pow,
    t_pow,
)

poly1s = st.dictionaries(
    st.integers(0, 8), st.integers(-9, 9), max_size=6
).map(Poly1)
poly2s = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 6)),
    st.integers(-9, 9),
    max_size=6,
).map(Poly2)


def test_basic_identities():
    assert one_minus_t(1) * Poly1({0: 1, 1: 1}) == Poly1({0: 1, 2: -1})
    p = Poly1({2: 3, 0: -1})
    assert p + Poly1(0) == p
    assert p - p == Poly1(0)
    assert geometric(4) == Poly1({0: 1, 1: 1, 2: 1, 3: 1})
    assert geometric(0).is_zero()
    assert one_minus_t(0) == Poly1(1)
    assert t_pow(3)(2) == 8
    assert Poly1({0: 1, 1: -1, 2: 2})(3) == 1 - 3 + 18


def test_substitute_s_cancellation():
    p = Poly2({(0, 0): 1, (0, 1): -1, (1, 0): -1})
    assert p.substitute_s(one_minus_t(1)).is_zero()


def test_poly2_regrouping():
    p = s_pow(2) * Poly2.from_tpoly(geometric(2)) + Poly2.from_tpoly(t_pow(1))
    rows = p.as_s_dict()
    assert sorted(rows) == [0, 2]
    assert rows[0] == t_pow(1)
    assert rows[2] == geometric(2)
    assert p.coeff_of_s(1).is_zero()
    assert p.s_degree == 2


@given(poly1s, poly1s, poly1s)
def test_poly1_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)


@given(poly2s, poly2s, poly2s)
def test_poly2_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(poly1s)
def test_poly1_canonical_no_zeros(p):
    assert all(c != 0 for c in p.coeffs.values())
    assert (p - p).coeffs == {}


def test_exact_divide_examples():
    d = Poly2({(0, 0): 1, (0, 1): -1, (1, 0): -1})
    p = d * Poly2({(0, 0): 1, (1, 0): 1})
    assert exact_divide(p, d) == Poly2({(0, 0): 1, (1, 0): 1})
    with pytest.raises(NotDivisibleError):
        exact_divide(Poly2({(0, 0): 1, (1, 0): 1}), Poly2({(0, 0): 1, (1, 0): -1}))
    with pytest.raises(ValueError):
        exact_divide(Poly2(1), Poly2(0))


@given(poly2s, poly2s)
def test_exact_divide_roundtrip(p, d):
    if d.is_zero():
        return
    assert exact_divide(p * d, d) == p


def test_expand_binomial_table():
    series = FactoredRational2(Poly2(1), 0, (DenomFactor(0, geometric(2)),))
    table = expand(series, 6, 6)
    from math import comb

    for n in range(7):
        for j in range(7):
            assert table.entry(n, j) == comb(n, j)


def test_expand_bounds_validation():
    series = FactoredRational2(Poly2(1), 0, ())
    with pytest.raises(InvalidTruncationError):
        expand(series, -1, 3)
    with pytest.raises(InvalidTruncationError):
        expand(series, 3, -1)


def test_expand_negative_power_matches_manual():
    # 1/((1-t)^-2) = (1-t)^2 as a series
    series = FactoredRational2(Poly2(1), -2, ())
    table = expand(series, 1, 5)
    assert list(table.rows[0]) == [1, -2, 1, 0, 0, 0]
    assert list(table.rows[1]) == [0] * 6


factored = st.builds(
    FactoredRational2,
    poly2s,
    st.integers(-2, 3),
    st.lists(
        st.builds(
            DenomFactor, st.integers(0, 2), st.integers(1, 3).map(geometric)
        ),
        max_size=2,
    ).map(tuple),
)


@settings(deadline=None, max_examples=40)
@given(factored, factored)
def test_expand_multiplicativity(h1, h2):
    nmax, degmax = 4, 5
    t1 = expand(h1, nmax, degmax)
    t2 = expand(h2, nmax, degmax)
    tp = expand(h1 * h2, nmax, degmax)
    for n in range(nmax + 1):
        for j in range(degmax + 1):
            conv = sum(
                t1.entry(n1, j1) * t2.entry(n - n1, j - j1)
                for n1 in range(n + 1)
                for j1 in range(j + 1)
            )
            assert tp.entry(n, j) == conv


def test_factor_positivity_enforced():
    with pytest.raises(ValueError):
        FactoredRational2(Poly2(1), 0, (DenomFactor(0, Poly1({0: 1, 1: -1})),))


def test_reduce_examples():
    dim, deg, red = reduced_form(Poly1({0: 1, 6: -1}), 5)
    assert (dim, deg) == (4, 6)
    assert red == geometric(6)
    assert reduced_form(Poly1(1), 3) == (3, 1, Poly1(1))
    num = (Poly1({0: 1, 2: -1})) ** 2
    dim, deg, red = reduced_form(num, 2)
    assert (dim, deg) == (0, 4)
    assert red == Poly1({0: 1, 1: 1}) ** 2
    with pytest.raises(ZeroNumeratorError):
        reduced_form(Poly1(0), 3)


@given(poly1s, st.integers(0, 4), st.integers(0, 3))
def test_reduce_reconstructs(q, k, extra):
    if q.is_zero() or q(1) == 0:
        return
    num = one_minus_t(k) * q
    pow_total = k + extra
    dim, deg, red = reduced_form(num, pow_total)
    assert dim == extra
    assert deg == q(1) == red(1)
    assert red * one_minus_t(pow_total - dim) == num


def test_formatting():
    assert format_poly1(Poly1(0)) == "0"
    assert format_poly1(Poly1({0: 1, 6: -3, 2: 1})) == "1 + t^2 - 3*t^6"
    assert format_poly2(Poly2({(0, 0): 1, (1, 3): -2, (2, 0): 1})) == (
        "1 - s*2*t^3 + s^2"
    )

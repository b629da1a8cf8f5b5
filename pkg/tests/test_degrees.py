"""Degree sequences, closed-form degrees, dimensions, asymptotics."""

from __future__ import annotations

import pytest

from inchilb.degrees import (
    asymptotics,
    degree_closed_form,
    degree_sequence,
    truncation_dimension,
)
from inchilb.errors import RepeatedColumnDegreesError
from inchilb.oracle import dim_and_degree
from inchilb.orbits import parent_orbit, parse_matrix, parse_monomial, truncate

GOLDEN_ORBIT = parse_monomial("x[1,3]^2 x[1,5]^4")


def test_degree_sequence_examples():
    assert degree_sequence(parse_matrix("[[2]]"), 6) == [2**n for n in range(7)]
    assert degree_sequence(GOLDEN_ORBIT, 6) == [1, 6, 28]
    with pytest.raises(ValueError):
        degree_sequence(GOLDEN_ORBIT, 3)


def test_degree_sequence_starts_at_one(corpus):
    for orb in corpus:
        assert degree_sequence(orb, orb.support[-1] - 1) == [1]


def test_degree_closed_examples():
    assert degree_closed_form(GOLDEN_ORBIT, 5) == 6
    assert degree_closed_form(GOLDEN_ORBIT, 4) == 1
    with pytest.raises(RepeatedColumnDegreesError):
        degree_closed_form(parse_monomial("x[1,1]^2 x[1,3]^2"), 4)
    with pytest.raises(ValueError):
        degree_closed_form(GOLDEN_ORBIT, 3)


def test_degree_closed_matches_sequence(corpus):
    for orb in corpus:
        b = orb.column_degrees
        if len(set(b)) != len(b):
            continue
        start = orb.support[-1] - 1
        seq = degree_sequence(orb, start + 6)
        for idx, n in enumerate(range(start, start + 7)):
            assert degree_closed_form(orb, n) == seq[idx]


def test_degree_recursion(corpus):
    """deg at width n = b_r * deg at width n-1 + parent deg at width n-gap."""
    for orb in corpus:
        if len(orb.support) < 2:
            continue
        mu_last = orb.support[-1]
        b_last = orb.column_degrees[-1]
        gap = orb.last_gap
        parent = parent_orbit(orb)
        seq = degree_sequence(orb, 8)
        parent_seq = degree_sequence(parent, 8)
        p_start = parent.support[-1] - 1
        for n in range(mu_last, 9):
            lhs = seq[n - (mu_last - 1)]
            rhs = b_last * seq[n - 1 - (mu_last - 1)]
            rhs += parent_seq[(n - gap) - p_start]
            assert lhs == rhs


def test_degree_vs_oracle(corpus):
    for orb in corpus[:30]:
        start = orb.support[-1] - 1
        seq = degree_sequence(orb, 7)
        for idx, n in enumerate(range(start, 8)):
            assert seq[idx] == dim_and_degree(truncate(orb, n))[1]


def test_dimension_examples():
    assert truncation_dimension(GOLDEN_ORBIT, 9) == 4
    assert truncation_dimension(GOLDEN_ORBIT, 3) == 3
    wide = parse_monomial("x[1,2] x[2,2]")
    assert wide.nrows == 2 and wide.support == (2,)
    assert truncation_dimension(wide, 5) == 5 * 1 + 1
    with pytest.raises(ValueError):
        truncation_dimension(GOLDEN_ORBIT, -1)


def test_dimension_growth(corpus):
    for orb in corpus:
        c = orb.nrows
        mu_last = orb.support[-1]
        for n in range(mu_last + 1, mu_last + 5):
            step = truncation_dimension(orb, n) - truncation_dimension(orb, n - 1)
            assert step == c - 1


def test_dimension_vs_oracle(corpus):
    for orb in corpus[:30]:
        for n in range(8):
            assert truncation_dimension(orb, n) == dim_and_degree(
                truncate(orb, n)
            )[0]


def test_asymptotics_examples():
    assert asymptotics(GOLDEN_ORBIT) == (0, 4)
    assert asymptotics(parse_matrix("[[1]]")) == (0, 1)
    three_rows = parse_matrix("[[2,0,0],[0,5,0],[0,0,3]]")
    assert three_rows.column_degrees == (2, 5, 3)
    assert asymptotics(three_rows) == (2, 5)

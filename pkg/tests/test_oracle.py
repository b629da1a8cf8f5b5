"""The two brute-force Hilbert oracles and their derived quantities."""

from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inchilb.errors import TooManyGeneratorsError
from inchilb.oracle import (
    dim_and_degree,
    finite_series,
    hilbert_function,
    hilbert_numerator_pivot,
    hilbert_numerator_taylor,
)
from inchilb.orbits import (
    MonomialIdealFinite,
    minimalize,
    parse_matrix,
    parse_monomial,
    truncate,
)
from inchilb.polys import Poly1


def ideal_of(nvars: int, *gens) -> MonomialIdealFinite:
    return MonomialIdealFinite.make(1, nvars, minimalize(gens))


def test_taylor_examples():
    assert hilbert_numerator_taylor(ideal_of(2, (2, 0), (0, 2))) == Poly1(
        {0: 1, 2: -2, 4: 1}
    )
    principal = ideal_of(5, (0, 0, 2, 0, 4))
    assert hilbert_numerator_taylor(principal) == Poly1({0: 1, 6: -1})
    assert hilbert_numerator_taylor(ideal_of(3)) == Poly1(1)


def test_pivot_examples():
    assert hilbert_numerator_pivot(ideal_of(2, (1, 1))) == Poly1({0: 1, 2: -1})
    assert hilbert_numerator_pivot(ideal_of(4)) == Poly1(1)


def test_truncated_orbit_numerator():
    # generators x[1,3]^2 x[1,5]^4, x[1,3]^2 x[1,6]^4, x[1,4]^2 x[1,6]^4:
    # pair lcm degrees 10, 12, 8 and triple lcm degree 12, so
    # N = 1 - 3t^6 + t^8 + t^10; the same value falls out of the
    # width recursion N_6 = (1-t^4) N_5 + t^4 N'_4 with N_5 = 1 - t^6
    # and N'_4 = (1-t^2)^2 for the single-column parent.
    ideal = truncate(parse_monomial("x[1,3]^2 x[1,5]^4"), 6)
    expected = Poly1({0: 1, 6: -3, 8: 1, 10: 1})
    assert hilbert_numerator_taylor(ideal) == expected
    assert hilbert_numerator_pivot(ideal) == expected


def test_taylor_guard():
    ideal = truncate(parse_matrix("[[1]]"), 26)
    assert len(ideal.generators) == 26
    with pytest.raises(TooManyGeneratorsError):
        hilbert_numerator_taylor(ideal)
    assert hilbert_numerator_pivot(ideal) == Poly1({0: 1, 1: -1}) ** 26
    small = truncate(parse_matrix("[[1]]"), 3)
    with pytest.raises(TooManyGeneratorsError):
        hilbert_numerator_taylor(small, guard=2)
    assert hilbert_numerator_taylor(small, guard=3) == Poly1({0: 1, 1: -1}) ** 3


def test_hilbert_function_examples():
    assert hilbert_function(ideal_of(1), 3) == [1, 1, 1, 1]
    principal = ideal_of(5, (0, 0, 2, 0, 4))
    assert hilbert_function(principal, 6)[6] == comb(10, 4) - 1 == 209
    squares = ideal_of(5, *((0,) * i + (2,) + (0,) * (4 - i) for i in range(5)))
    assert hilbert_function(squares, 7) == [comb(5, j) for j in range(6)] + [0, 0]


def test_hilbert_function_zero_vars():
    ideal = MonomialIdealFinite.make(1, 0, [])
    assert hilbert_function(ideal, 4) == [1, 0, 0, 0, 0]


def test_dim_and_degree_examples():
    orb = parse_monomial("x[1,3]^2 x[1,5]^4")
    assert dim_and_degree(truncate(orb, 5)) == (4, 6)
    assert dim_and_degree(truncate(orb, 4)) == (4, 1)
    square = parse_matrix("[[2]]")
    for n in range(6):
        assert dim_and_degree(truncate(square, n)) == (0, 2**n)


def test_zero_truncation_dim_and_degree(corpus):
    for orb in corpus[:25]:
        for n in range(orb.support[-1]):
            assert dim_and_degree(truncate(orb, n)) == (orb.nrows * n, 1)


def test_finite_series_record():
    ideal = truncate(parse_monomial("x[1,3]^2 x[1,5]^4"), 5)
    rec = finite_series(ideal)
    assert rec.nvars == 5
    assert rec.num == Poly1({0: 1, 6: -1})
    assert rec.reduced is not None and rec.reduced[:2] == (4, 6)


def test_oracles_agree_on_corpus_truncations(corpus):
    for orb in corpus[:25]:
        for n in range(7):
            ideal = truncate(orb, n)
            if len(ideal.generators) > 25:
                continue
            assert hilbert_numerator_taylor(ideal) == hilbert_numerator_pivot(
                ideal
            )


@st.composite
def random_ideals(draw):
    nvars = draw(st.integers(1, 5))
    vectors = draw(
        st.lists(
            st.lists(
                st.integers(0, 3), min_size=nvars, max_size=nvars
            ).map(tuple),
            max_size=6,
        )
    )
    gens = minimalize(v for v in vectors if any(v))
    return MonomialIdealFinite.make(1, nvars, gens)


@settings(deadline=None, max_examples=150)
@given(random_ideals())
def test_oracles_agree_on_random_ideals(ideal):
    taylor = hilbert_numerator_taylor(ideal)
    assert taylor == hilbert_numerator_pivot(ideal)
    assert taylor.coeffs.get(0) == 1
    assert all(v >= 0 for v in hilbert_function(ideal, 8))


@settings(deadline=None, max_examples=60)
@given(random_ideals())
def test_numerator_ignores_generator_order(ideal):
    reversed_gens = MonomialIdealFinite(
        ideal.nrows, ideal.n, tuple(reversed(ideal.generators))
    )
    assert hilbert_numerator_taylor(reversed_gens) == hilbert_numerator_taylor(
        ideal
    )

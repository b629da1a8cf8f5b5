"""Exact equivariant Hilbert series of monomial shift-orbit ideals.

The package computes, for the ideal generated by all column shifts of a
single monomial in a c-row variable grid, the bivariate rational function
collecting the Hilbert functions of every truncation, together with degrees,
dimensions, and a brute-force oracle that independently verifies all of it.
"""

from .closed_form import (
    ReducednessReport,
    check_reduced,
    equivariant_series,
    raw_numerator,
    series_denominator,
    series_numerator,
    small_support_numerator,
)
from .degrees import (
    asymptotics,
    degree_closed_form,
    degree_sequence,
    truncation_dimension,
)
from .errors import (
    EmptyMonomialError,
    InchilbError,
    InvalidTruncationError,
    NegativeDenominatorPowerError,
    NegativeExponentError,
    NoParentError,
    NotDivisibleError,
    ParseError,
    RepeatedColumnDegreesError,
    TooManyGeneratorsError,
    TooManySupportColumnsError,
    ZeroNumeratorError,
)
from .oracle import (
    HilbertSeriesFinite,
    dim_and_degree,
    finite_series,
    hilbert_function,
    hilbert_numerator_pivot,
    hilbert_numerator_taylor,
)
from .orbits import (
    MonomialIdealFinite,
    OrbitMonomial,
    embed_generators,
    minimalize,
    monomial_string,
    parent_orbit,
    parse_matrix,
    parse_monomial,
    truncate,
)
from .polys import (
    DenomFactor,
    FactoredRational2,
    Poly1,
    Poly2,
    SeriesTable,
    exact_divide,
    expand,
    geometric,
    one_minus_t,
    reduced_form,
    s_pow,
    t_pow,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "DenomFactor",
    "EmptyMonomialError",
    "FactoredRational2",
    "HilbertSeriesFinite",
    "InchilbError",
    "InvalidTruncationError",
    "MonomialIdealFinite",
    "NegativeDenominatorPowerError",
    "NegativeExponentError",
    "NoParentError",
    "NotDivisibleError",
    "OrbitMonomial",
    "ParseError",
    "Poly1",
    "Poly2",
    "ReducednessReport",
    "RepeatedColumnDegreesError",
    "SeriesTable",
    "TooManyGeneratorsError",
    "TooManySupportColumnsError",
    "ZeroNumeratorError",
    "asymptotics",
    "check_reduced",
    "degree_closed_form",
    "degree_sequence",
    "dim_and_degree",
    "embed_generators",
    "equivariant_series",
    "exact_divide",
    "expand",
    "finite_series",
    "geometric",
    "hilbert_function",
    "hilbert_numerator_pivot",
    "hilbert_numerator_taylor",
    "minimalize",
    "monomial_string",
    "one_minus_t",
    "parent_orbit",
    "parse_matrix",
    "parse_monomial",
    "raw_numerator",
    "reduced_form",
    "run_verification",
    "s_pow",
    "series_denominator",
    "series_numerator",
    "small_support_numerator",
    "t_pow",
    "truncate",
    "truncation_dimension",
    "__version__",
]

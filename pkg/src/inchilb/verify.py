"""Cross-verification of the closed forms against the brute-force oracle.

Every theoretical output of the package is checked here against an
independent computation on the finite truncations: series tables against
oracle Hilbert functions, degrees and dimensions against reduced oracle
numerators, the two oracles against each other, and the structural
identities (exact divisibility, reducedness, the truncation recursion) that
the closed forms rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import closed_form, degrees, oracle
from .errors import NotDivisibleError
from .orbits import MonomialIdealFinite, OrbitMonomial, parent_orbit, truncate
from .polys import Poly1, Poly2, expand, one_minus_t, s_pow, t_pow

CHECK_ORDER = (
    "numerator-divisibility",
    "reducedness",
    "closed-numerator-small-support",
    "series-table-vs-oracle",
    "degree-vs-oracle",
    "dimension-vs-oracle",
    "numerator-recursion",
    "taylor-vs-pivot",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS, FAIL, or SKIP
    detail: str

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"


def _result(name: str, ok: bool, detail: str, fail_detail: str | None = None) -> CheckResult:
    if ok:
        return CheckResult(name, "PASS", detail)
    return CheckResult(name, "FAIL", fail_detail or detail)


def check_numerator_divisibility(orb: OrbitMonomial) -> CheckResult:
    name = "numerator-divisibility"
    raw = closed_form.raw_numerator(orb)
    try:
        g = closed_form.series_numerator(orb)
    except NotDivisibleError as exc:
        return CheckResult(name, "FAIL", f"division failed: {exc}")
    divisor = Poly2.from_tpoly(one_minus_t(orb.nrows)) - s_pow(1)
    ok = g * divisor == raw
    return _result(name, ok, "quotient times divisor reproduces the product form",
                   "quotient does not reproduce the product form")


def check_reducedness(orb: OrbitMonomial) -> CheckResult:
    report = closed_form.check_reduced(orb)
    bad = [i for i, rem in enumerate(report.factor_remainders) if rem.is_zero()]
    detail = "numerator vanishes at the split point; no factor divides g"
    if not report.numerator_vanishes:
        detail = "numerator does not vanish at the split point"
    elif bad:
        detail = f"denominator factor(s) {bad} divide g"
    return _result("reducedness", report.ok, detail)


def check_small_support_numerator(orb: OrbitMonomial) -> CheckResult:
    name = "closed-numerator-small-support"
    r = len(orb.support)
    e, _ = closed_form.series_denominator(orb)
    if r > 3:
        return CheckResult(name, "SKIP", f"{r} support columns, formula stops at 3")
    if e < 0:
        return CheckResult(name, "SKIP", f"negative denominator power {e}")
    ok = closed_form.small_support_numerator(orb) == closed_form.series_numerator(orb)
    return _result(name, ok, "closed formula equals the division result",
                   "closed formula disagrees with the division result")


def check_series_table(orb: OrbitMonomial, nmax: int, degmax: int) -> CheckResult:
    name = "series-table-vs-oracle"
    table = expand(closed_form.equivariant_series(orb), nmax, degmax)
    for n in range(nmax + 1):
        expected = oracle.hilbert_function(truncate(orb, n), degmax)
        if list(table.rows[n]) != expected:
            return CheckResult(
                name, "FAIL",
                f"row n={n} differs: series {list(table.rows[n])} vs oracle {expected}",
            )
    return CheckResult(name, "PASS", f"all rows n<={nmax}, degrees<={degmax} match")


def check_degrees(orb: OrbitMonomial, nmax: int) -> CheckResult:
    name = "degree-vs-oracle"
    mu_last = orb.support[-1]
    if nmax < mu_last - 1:
        return CheckResult(name, "SKIP", f"nmax={nmax} below first degree index {mu_last - 1}")
    seq = degrees.degree_sequence(orb, nmax)
    distinct = len(set(orb.column_degrees)) == len(orb.column_degrees)
    for idx, n in enumerate(range(mu_last - 1, nmax + 1)):
        _, deg = oracle.dim_and_degree(truncate(orb, n))
        if seq[idx] != deg:
            return CheckResult(name, "FAIL", f"deg at n={n}: sequence {seq[idx]} vs oracle {deg}")
        if distinct and degrees.degree_closed_form(orb, n) != deg:
            return CheckResult(name, "FAIL", f"closed degree at n={n} disagrees with oracle {deg}")
    extra = " and closed formula" if distinct else ""
    return CheckResult(name, "PASS", f"sequence{extra} match oracle for n<={nmax}")


def check_dimensions(orb: OrbitMonomial, nmax: int) -> CheckResult:
    name = "dimension-vs-oracle"
    for n in range(nmax + 1):
        dim, _ = oracle.dim_and_degree(truncate(orb, n))
        if degrees.truncation_dimension(orb, n) != dim:
            return CheckResult(
                name, "FAIL",
                f"dim at n={n}: formula {degrees.truncation_dimension(orb, n)} vs oracle {dim}",
            )
    return CheckResult(name, "PASS", f"both branches match oracle for n<={nmax}")


def recursion_identity_holds(orb: OrbitMonomial, n: int) -> bool:
    """Numerator identity after clearing denominators to (1-t)^(c*n).

    For two or more support columns: N at width n equals
    (1 - t^(b_r)) * N at width n-1  +  t^(b_r) * parent N at width n-gap,
    valid for n >= gap.  With a single support column the parent term drops
    out and the identity holds from n = mu_1 on.
    """
    b_last = orb.column_degrees[-1]
    left = oracle.hilbert_numerator_pivot(truncate(orb, n))
    prev = oracle.hilbert_numerator_pivot(truncate(orb, n - 1))
    rhs = Poly1({0: 1, b_last: -1}) * prev
    if len(orb.support) >= 2:
        parent_n = n - orb.last_gap
        parent_num = oracle.hilbert_numerator_pivot(truncate(parent_orbit(orb), parent_n))
        rhs = rhs + t_pow(b_last) * parent_num
    return left == rhs


def check_recursion(orb: OrbitMonomial, nmax: int) -> CheckResult:
    name = "numerator-recursion"
    r = len(orb.support)
    start = orb.last_gap if r >= 2 else orb.support[0]
    if nmax < start:
        return CheckResult(name, "SKIP", f"nmax={nmax} below recursion start {start}")
    for n in range(start, nmax + 1):
        if not recursion_identity_holds(orb, n):
            return CheckResult(name, "FAIL", f"identity fails at n={n}")
    kind = "two-term" if r >= 2 else "single-term"
    return CheckResult(name, "PASS", f"{kind} identity holds for {start}<=n<={nmax}")


def check_taylor_vs_pivot(orb: OrbitMonomial, nmax: int, guard: int) -> CheckResult:
    name = "taylor-vs-pivot"
    compared = 0
    skipped = 0
    for n in range(nmax + 1):
        ideal = truncate(orb, n)
        if len(ideal.generators) > guard:
            skipped += 1
            continue
        if oracle.hilbert_numerator_taylor(ideal, guard) != oracle.hilbert_numerator_pivot(ideal):
            return CheckResult(name, "FAIL", f"oracles disagree at n={n}")
        compared += 1
    detail = f"oracles agree on {compared} truncations"
    if skipped:
        detail += f" ({skipped} above the {guard}-generator guard)"
    return CheckResult(name, "PASS", detail)


def run_verification(
    orb: OrbitMonomial,
    nmax: int = 8,
    degmax: int = 10,
    guard: int = oracle.DEFAULT_TAYLOR_GUARD,
) -> list[CheckResult]:
    """All cross-checks for one orbit, in a fixed order."""
    return [
        check_numerator_divisibility(orb),
        check_reducedness(orb),
        check_small_support_numerator(orb),
        check_series_table(orb, nmax, degmax),
        check_degrees(orb, nmax),
        check_dimensions(orb, nmax),
        check_recursion(orb, nmax),
        check_taylor_vs_pivot(orb, nmax, guard),
    ]


def verify_ideal_oracles(ideal: MonomialIdealFinite, guard: int) -> bool:
    """Taylor vs pivot on a single ideal; True when they agree."""
    return oracle.hilbert_numerator_taylor(ideal, guard) == oracle.hilbert_numerator_pivot(ideal)

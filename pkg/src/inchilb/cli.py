"""Command-line interface.

Four subcommands: ``series`` (closed-form equivariant Hilbert series, with
optional exact expansion), ``degree`` (degree/dimension table over a range
of truncation widths), ``verify`` (run every cross-check against the
brute-force oracle), and ``oracle`` (inspect one finite truncation).

Exit codes: 0 on success, 1 on usage/parse/domain errors, 2 when a
verification or internal cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_form, degrees, oracle
from .errors import InchilbError, TooManyGeneratorsError
from .orbits import (
    OrbitMonomial,
    generator_string,
    monomial_string,
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
    expand,
    format_poly1,
    reduced_form,
)
from .verify import run_verification


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="inchilb",
        description=(
            "Exact equivariant Hilbert series of ideals generated by the "
            "shift orbit of a monomial, cross-verified against brute force."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_orbit_flags(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument(
            "--monomial",
            help='orbit monomial, e.g. "x[1,3]^2 x[1,5]^4" (1-based row,column)',
        )
        group.add_argument(
            "--matrix", help='exponent matrix literal, e.g. "[[0,0,2,0,4]]"'
        )

    p_series = sub.add_parser(
        "series", help="closed-form equivariant Hilbert series"
    )
    add_orbit_flags(p_series)
    p_series.add_argument("--json", action="store_true", help="emit JSON")
    p_series.add_argument(
        "--expand",
        nargs=2,
        type=int,
        metavar=("NMAX", "DEGMAX"),
        help="append the exact coefficient table up to s^NMAX, t^DEGMAX",
    )
    p_series.set_defaults(func=cmd_series)

    p_degree = sub.add_parser(
        "degree", help="degree and dimension of each truncation"
    )
    add_orbit_flags(p_degree)
    p_degree.add_argument(
        "--nmax", type=int, required=True, help="largest truncation width"
    )
    p_degree.add_argument(
        "--closed",
        action="store_true",
        help="also evaluate the partial-fraction degree formula",
    )
    p_degree.set_defaults(func=cmd_degree)

    p_verify = sub.add_parser(
        "verify", help="run all cross-checks against the brute-force oracle"
    )
    add_orbit_flags(p_verify)
    p_verify.add_argument("--nmax", type=int, default=8)
    p_verify.add_argument("--degmax", type=int, default=10)
    p_verify.add_argument(
        "--taylor-guard", type=int, default=oracle.DEFAULT_TAYLOR_GUARD
    )
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser(
        "oracle", help="brute-force Hilbert data of one truncation"
    )
    add_orbit_flags(p_oracle)
    p_oracle.add_argument(
        "--nmax", type=int, required=True, help="truncation width n"
    )
    p_oracle.add_argument("--degmax", type=int, default=10)
    p_oracle.add_argument(
        "--pivot-only",
        action="store_true",
        help="skip the subset-enumeration oracle (no generator-count guard)",
    )
    p_oracle.add_argument(
        "--taylor-guard", type=int, default=oracle.DEFAULT_TAYLOR_GUARD
    )
    p_oracle.set_defaults(func=cmd_oracle)
    return parser


def orbit_from_args(args) -> OrbitMonomial:
    if args.monomial is not None:
        return parse_monomial(args.monomial)
    return parse_matrix(args.matrix)


def format_factor(fac: DenomFactor) -> str:
    f_text = format_poly1(fac.f)
    if fac.c_exp == 0:
        head = "1"
    elif fac.c_exp == 1:
        head = "(1 - t)"
    else:
        head = f"(1 - t)^{fac.c_exp}"
    return f"{head} - s*({f_text})"


def format_series_text(orb: OrbitMonomial, fr: FactoredRational2) -> str:
    lines = [
        f"orbit: {monomial_string(orb)}",
        f"rows: {orb.nrows}   support columns: {list(orb.support)}   "
        f"column degrees: {list(orb.column_degrees)}",
        "numerator:",
    ]
    for se, tp in fr.numerator.as_s_dict().items():
        lines.append(f"  s^{se} * ({format_poly1(tp)})")
    lines.append("denominator:")
    lines.append(f"  (1 - t)^{fr.pow_one_minus_t}")
    for fac in fr.factors:
        lines.append(f"  {format_factor(fac)}")
    return "\n".join(lines)


def format_table_text(table: SeriesTable) -> str:
    lines = [
        f"coefficient table, rows n = 0..{table.nmax}, columns j = 0..{table.degmax}:"
    ]
    for n, row in enumerate(table.rows):
        lines.append(f"  n={n}: " + " ".join(str(v) for v in row))
    return "\n".join(lines)


def series_to_json(
    orb: OrbitMonomial, fr: FactoredRational2, table: SeriesTable | None = None
) -> dict:
    terms = [
        {"s": se, "t": te, "coeff": str(c)}
        for (se, te), c in sorted(fr.numerator.coeffs.items())
    ]
    data = {
        "orbit": {
            "c": orb.nrows,
            "mu": list(orb.support),
            "b": list(orb.column_degrees),
            "matrix": [list(row) for row in orb.exponents],
        },
        "series": {
            "numerator": terms,
            "pow_one_minus_t": fr.pow_one_minus_t,
            "factors": [
                {
                    "c_exp": fac.c_exp,
                    "f_coeffs": [str(c) for c in fac.f.dense()],
                }
                for fac in fr.factors
            ],
        },
    }
    if table is not None:
        data["expand"] = {
            "nmax": table.nmax,
            "degmax": table.degmax,
            "rows": [list(row) for row in table.rows],
        }
    return data


def series_from_json(
    data: dict,
) -> tuple[OrbitMonomial, FactoredRational2, SeriesTable | None]:
    """Inverse of series_to_json; decimal strings become exact ints."""
    orb = OrbitMonomial.from_matrix(data["orbit"]["matrix"])
    ser = data["series"]
    numerator = Poly2(
        {(term["s"], term["t"]): int(term["coeff"]) for term in ser["numerator"]}
    )
    factors = tuple(
        DenomFactor(
            fac["c_exp"],
            Poly1({i: int(c) for i, c in enumerate(fac["f_coeffs"])}),
        )
        for fac in ser["factors"]
    )
    fr = FactoredRational2(numerator, ser["pow_one_minus_t"], factors)
    table = None
    if "expand" in data:
        exp = data["expand"]
        table = SeriesTable(
            exp["nmax"],
            exp["degmax"],
            tuple(tuple(int(v) for v in row) for row in exp["rows"]),
        )
    return orb, fr, table


def cmd_series(args) -> int:
    orb = orbit_from_args(args)
    fr = closed_form.equivariant_series(orb)
    table = None
    if args.expand:
        table = expand(fr, args.expand[0], args.expand[1])
    if args.json:
        print(json.dumps(series_to_json(orb, fr, table), indent=2))
        return 0
    print(format_series_text(orb, fr))
    if table is not None:
        print(format_table_text(table))
    return 0


def cmd_degree(args) -> int:
    orb = orbit_from_args(args)
    seq = degrees.degree_sequence(orb, args.nmax)
    mu_last = orb.support[-1]
    header = "n  deg  dim"
    if args.closed:
        header += "  closed"
    print(f"orbit: {monomial_string(orb)}")
    print(header)
    for idx, n in enumerate(range(mu_last - 1, args.nmax + 1)):
        dim = degrees.truncation_dimension(orb, n)
        row = f"{n}  {seq[idx]}  {dim}"
        if args.closed:
            closed_val = degrees.degree_closed_form(orb, n)
            row += f"  {closed_val}"
            if closed_val != seq[idx]:
                print(row)
                print(
                    f"internal error: closed degree {closed_val} != "
                    f"sequence value {seq[idx]} at n={n}",
                    file=sys.stderr,
                )
                return 2
        print(row)
    return 0


def cmd_verify(args) -> int:
    orb = orbit_from_args(args)
    print(
        f"verify orbit {monomial_string(orb)} "
        f"(nmax={args.nmax}, degmax={args.degmax})"
    )
    results = run_verification(orb, args.nmax, args.degmax, args.taylor_guard)
    for res in results:
        print(f"  [{res.status}] {res.name}: {res.detail}")
    failures = [res for res in results if res.failed]
    if failures:
        print(f"verification failed: {failures[0].name}", file=sys.stderr)
        return 2
    print("all checks passed")
    return 0


def cmd_oracle(args) -> int:
    orb = orbit_from_args(args)
    n = args.nmax
    ideal = truncate(orb, n)
    print(f"orbit: {monomial_string(orb)}")
    if ideal.is_zero():
        print(f"truncation n={n}: zero ideal in {ideal.nvars} variables")
    else:
        print(
            f"truncation n={n}: {len(ideal.generators)} generators "
            f"in {ideal.nvars} variables"
        )
        for g in ideal.generators:
            print(f"  {generator_string(g, ideal.nrows, ideal.n)}")
    num = oracle.hilbert_numerator_pivot(ideal)
    if not args.pivot_only:
        try:
            check = oracle.hilbert_numerator_taylor(ideal, args.taylor_guard)
        except TooManyGeneratorsError as exc:
            print(
                f"error: {exc}; rerun with --pivot-only to skip the "
                "subset-enumeration cross-check",
                file=sys.stderr,
            )
            return 1
        if check != num:
            print("internal error: the two oracles disagree", file=sys.stderr)
            return 2
    dim, deg, _ = reduced_form(num, ideal.nvars)
    print(f"numerator: {format_poly1(num)}")
    print(f"dim: {dim}")
    print(f"deg: {deg}")
    values = oracle.hilbert_function(ideal, args.degmax)
    print(
        f"hilbert function j=0..{args.degmax}: "
        + " ".join(str(v) for v in values)
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except InchilbError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line front end.

Exit codes: 0 on success, 1 when a golden-corpus check fails, 2 on
usage or input errors (the message names the violated precondition).
All output is deterministic: identical invocations produce identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .colon import dual_goto, goto_monomial, goto_number
from .errors import GotoNumberError, NotGorenstein
from .explorer import SearchConfig, monomial_table, search
from .fields import field_from_label
from .golden import run_golden_checks
from .regular import pure_power_report
from .ring import canonicalize, parse_element
from .semigroup import NumericalSemigroup


def _emit(payload, fmt, out):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=False))
        out.write("\n")
    else:
        for key, value in payload.items():
            out.write(f"{key}: {value}\n")


def _semigroup(args) -> NumericalSemigroup:
    return NumericalSemigroup(args.generators)


def _cmd_info(args, out):
    S = _semigroup(args)
    payload = {
        "schema": 1,
        "generators": list(S.generators),
        "frobenius": S.frobenius,
        "gaps": list(S.gaps),
        "conductor_generators": list(S.conductor_generators),
        "regular": S.is_regular,
        "symmetric": S.is_symmetric(),
        "stable_goto": bounds.stable_goto(S),
        "conductor_order": S.conductor_order(),
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_goto(args, out):
    S = _semigroup(args)
    field = field_from_label(args.field)
    payload = {"schema": 1, "generators": list(S.generators)}
    if args.monomial is not None:
        payload["ideal"] = f"x^{args.monomial}"
        payload["goto_number"] = goto_monomial(S, args.monomial)
        if args.dual:
            Q = canonicalize(parse_element(f"x^{args.monomial}", S, field))
            payload["dual_goto"] = dual_goto(Q)
    else:
        Q = canonicalize(parse_element(args.ideal, S, field))
        payload["ideal"] = str(Q.generator())
        payload["goto_number"] = goto_number(Q)
        if args.dual:
            payload["dual_goto"] = dual_goto(Q)
    _emit(payload, args.format, out)
    return 0


def _cmd_table(args, out):
    S = _semigroup(args)
    table = monomial_table(S, args.max)
    if args.format == "tsv":
        out.write("e\tgoto\n")
        for e, g in table.items():
            out.write(f"{e}\t{g}\n")
    else:
        payload = {
            "schema": 1,
            "generators": list(S.generators),
            "table": {str(e): g for e, g in table.items()},
        }
        _emit(payload, args.format, out)
    return 0


def _cmd_search(args, out):
    S = _semigroup(args)
    field = field_from_label(args.field)
    coefficients = tuple(field.parse(c) for c in args.coeffs.split(","))
    config = SearchConfig(
        semigroup=S,
        field=field,
        coefficients=coefficients,
        b_values=tuple(args.b) if args.b else None,
        positions=tuple(args.positions) if args.positions else None,
        width=args.width,
    )
    result = search(config)
    if args.format == "tsv":
        out.write(result.to_tsv())
    else:
        _emit(result.to_json(S, field), args.format, out)
    return 0


def _cmd_bounds(args, out):
    S = _semigroup(args)
    report = bounds.build_report(S)
    _emit(report.to_json(), args.format, out)
    return 0


def _cmd_rlr(args, out):
    exponents = tuple(int(part) for part in args.pure_power.split(","))
    report = pure_power_report(exponents)
    payload = {
        "schema": 1,
        "exponents": list(report["exponents"]),
        "goto_number": report["goto_number"],
        "orders": {
            "ideal": report["orders"][0],
            "colon_m": report["orders"][1],
            "colon_m_goto": report["orders"][2],
        },
        "ratios": [str(r) for r in report["ratios"]],
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_verify(args, out):
    results = run_golden_checks()
    failures = 0
    for res in results:
        if res.passed:
            out.write(f"PASS {res.name} = {res.actual}\n")
        else:
            failures += 1
            out.write(
                f"FAIL {res.name}: expected {res.expected}, got {res.actual}\n"
            )
    out.write(f"{len(results) - failures}/{len(results)} checks passed\n")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gotonum",
        description=(
            "Exact Goto numbers of parameter ideals in numerical semigroup "
            "rings, with every bound and closed form evaluated alongside."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, gens=True):
        if gens:
            p.add_argument(
                "generators", type=int, nargs="+", help="semigroup generators"
            )
        p.add_argument(
            "--format",
            choices=("json", "tsv", "human"),
            default="json",
            help="output format (default json)",
        )

    p = sub.add_parser("info", help="semigroup invariants")
    add_common(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("goto", help="Goto number of one parameter ideal")
    add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ideal", help='generator expression, e.g. "x^40+x^44"')
    group.add_argument("--monomial", type=int, help="exponent of a monomial ideal")
    p.add_argument(
        "--dual",
        action="store_true",
        help="also compute the duality value (symmetric semigroups)",
    )
    p.add_argument("--field", default="q", help="coefficient field: q or fp:P")
    p.set_defaults(func=_cmd_goto)

    p = sub.add_parser("table", help="monomial Goto numbers up to a cap")
    add_common(p)
    p.add_argument("--max", type=int, required=True, help="largest exponent")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("search", help="enumerate canonical forms")
    add_common(p)
    p.add_argument("--coeffs", default="0,1", help="coefficient set (default 0,1)")
    p.add_argument("--field", default="q", help="coefficient field: q or fp:P")
    p.add_argument(
        "--b", type=int, action="append", help="restrict generator valuations"
    )
    p.add_argument(
        "--positions",
        type=int,
        action="append",
        help="restrict tail positions that may be nonzero",
    )
    p.add_argument(
        "--width", type=int, default=1, help="parallel work-item width"
    )
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("bounds", help="bound report for a semigroup")
    add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser(
        "rlr", help="pure-power monomial ideal in a regular local ring"
    )
    add_common(p, gens=False)
    p.add_argument(
        "--pure-power",
        required=True,
        dest="pure_power",
        help="comma-separated exponents, e.g. 2,5,5",
    )
    p.set_defaults(func=_cmd_rlr)

    p = sub.add_parser("verify-paper", help="re-derive the golden corpus")
    add_common(p, gens=False)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, sys.stdout)
    except NotGorenstein as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GotoNumberError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

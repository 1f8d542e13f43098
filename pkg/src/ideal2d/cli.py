"""Command line interface.

Parses ideals from monomial lists like "x^3, x*y, y^3" (or JSON pair arrays),
runs the library operations, and verifies the closed-form polynomial against
the brute-force oracle.  Reports are printed as text or as a JSON document
with the stable shape {"command", "ideals", "result", "warnings"}.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
failure, 4 internal consistency error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import warnings
from dataclasses import replace

from .bhattacharya import (
    HalfInteger,
    bhattacharya_polynomial,
    colength,
    fiber_function,
    hilbert_function,
    min_generators,
    with_maximal_ideal,
)
from .errors import ConsistencyError, DomainError, IncompleteIdealWarning, ParseError
from .factorization import zariski_factor
from .ideals import MonomialIdeal, ensure_complete
from .oracle import brute_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3
EXIT_INTERNAL = 4


# --- ideal expression parsing ----------------------------------------------


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse a comma-separated monomial list or a JSON array of [u, v] pairs.

    Monomials are products of x and y factors with optional ^exponent, e.g.
    "x^3, x*y, y^3"; a bare "1" is the unit monomial.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty ideal expression")
    if stripped[0] == "[":
        return _parse_json_ideal(stripped)
    return MonomialIdeal(_parse_monomial_list(text))


def _parse_json_ideal(text: str) -> MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON ideal: {exc}") from None
    if not isinstance(data, list) or not data:
        raise ParseError("JSON ideal must be a non-empty array of [u, v] pairs")
    points = []
    for entry in data:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in entry)
        ):
            raise ParseError(f"JSON ideal entries must be [u, v] integer pairs, got {entry!r}")
        if entry[0] < 0 or entry[1] < 0:
            raise ParseError(f"negative exponent in {entry!r}")
        points.append((entry[0], entry[1]))
    return MonomialIdeal(points)


def _skip_spaces(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_exponent(text: str, pos: int) -> tuple[int, int]:
    pos = _skip_spaces(text, pos)
    if pos < len(text) and text[pos] == "-":
        raise ParseError(f"negative exponent at position {pos}")
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError(f"syntax error at position {start}: expected an exponent")
    return int(text[start:pos]), pos


def _parse_monomial(text: str, pos: int) -> tuple[int, int, int]:
    u = v = 0
    while True:
        pos = _skip_spaces(text, pos)
        if pos < len(text) and text[pos] == "1":
            pos += 1
        elif pos < len(text) and text[pos] in "xy":
            variable = text[pos]
            pos = _skip_spaces(text, pos + 1)
            exponent = 1
            if pos < len(text) and text[pos] == "^":
                exponent, pos = _parse_exponent(text, pos + 1)
            if variable == "x":
                u += exponent
            else:
                v += exponent
        else:
            raise ParseError(f"syntax error at position {pos}: expected 'x', 'y' or '1'")
        pos = _skip_spaces(text, pos)
        if pos < len(text) and text[pos] == "*":
            pos += 1
            continue
        return u, v, pos


def _parse_monomial_list(text: str) -> list[tuple[int, int]]:
    points = []
    pos = 0
    while True:
        u, v, pos = _parse_monomial(text, pos)
        points.append((u, v))
        pos = _skip_spaces(text, pos)
        if pos >= len(text):
            return points
        if text[pos] != ",":
            raise ParseError(f"syntax error at position {pos}: expected ',' between monomials")
        pos += 1


# --- command handlers --------------------------------------------------------


def _read_expression(value: str) -> str:
    return sys.stdin.read() if value == "-" else value


def _load_ideal(expression: str) -> MonomialIdeal:
    return parse_ideal(_read_expression(expression))


def _policy(args) -> str:
    return "autoclose" if args.autoclose else "strict"


def _cmd_closure(args):
    ideal = _load_ideal(args.ideal)
    closed = ideal.integral_closure()
    report = {
        "command": "closure",
        "ideals": {"i": ideal.to_json()},
        "result": {"generators": closed.to_json(), "text": str(closed)},
    }
    return report, str(closed), EXIT_OK


def _cmd_factor(args):
    ideal = _load_ideal(args.ideal)
    factorization = zariski_factor(ideal, _policy(args))
    report = {
        "command": "factor",
        "ideals": {"i": ideal.to_json()},
        "result": {"factors": factorization.to_json(), "text": str(factorization)},
    }
    return report, str(factorization), EXIT_OK


def _cmd_colength(args):
    ideal = _load_ideal(args.ideal)
    value = colength(ideal, _policy(args))
    report = {
        "command": "colength",
        "ideals": {"i": ideal.to_json()},
        "result": {"value": value},
    }
    return report, str(value), EXIT_OK


def _cmd_bhatt(args):
    ideal_i = _load_ideal(args.ideal)
    ideal_j = _load_ideal(args.ideal_j)
    poly = bhattacharya_polynomial(ideal_i, ideal_j, _policy(args))
    report = {
        "command": "bhatt",
        "ideals": {"i": ideal_i.to_json(), "j": ideal_j.to_json()},
        "result": poly.to_json(),
    }
    return report, poly.render(), EXIT_OK


def _cmd_maxideal(args):
    ideal = _load_ideal(args.ideal)
    poly = with_maximal_ideal(ideal, _policy(args))
    report = {
        "command": "maxideal",
        "ideals": {"i": ideal.to_json()},
        "result": poly.to_json(),
    }
    return report, poly.render(), EXIT_OK


def _cmd_hilbert(args):
    ideal = _load_ideal(args.ideal)
    value = hilbert_function(ideal, args.m, _policy(args))
    report = {
        "command": "hilbert",
        "ideals": {"i": ideal.to_json()},
        "result": {"m": args.m, "value": value},
    }
    return report, str(value), EXIT_OK


def _cmd_fiber(args):
    ideal = _load_ideal(args.ideal)
    value = fiber_function(ideal, args.m, _policy(args))
    report = {
        "command": "fiber",
        "ideals": {"i": ideal.to_json()},
        "result": {"m": args.m, "value": value},
    }
    return report, str(value), EXIT_OK


def _cmd_gens(args):
    ideal = _load_ideal(args.ideal)
    value = min_generators(ideal, _policy(args))
    report = {
        "command": "gens",
        "ideals": {"i": ideal.to_json()},
        "result": {"value": value},
    }
    return report, str(value), EXIT_OK


def _random_complete_ideal(rng: random.Random, max_intercept: int = 10) -> MonomialIdeal:
    a = rng.randint(1, max_intercept)
    b = rng.randint(1, max_intercept)
    points = [(a, 0), (0, b)]
    for _ in range(rng.randint(0, 3)):
        points.append((rng.randint(1, a), rng.randint(1, b)))
    return MonomialIdeal(points).integral_closure()


def _cmd_verify(args):
    if args.random is not None:
        if args.ideal or args.ideal_j:
            raise ParseError("--random replaces -i and -j; give one or the other")
        if args.random < 1:
            raise ParseError("--random needs a positive count")
        rng = random.Random(args.seed)
        pairs = [
            (_random_complete_ideal(rng), _random_complete_ideal(rng))
            for _ in range(args.random)
        ]
    else:
        if not args.ideal or not args.ideal_j:
            raise ParseError("verify needs -i and -j, or --random N")
        pairs = [(_load_ideal(args.ideal), _load_ideal(args.ideal_j))]
    if args.max_m < 0 or args.max_n < 0:
        raise ParseError("--max-m and --max-n must be nonnegative")

    policy = _policy(args)
    lines = []
    pair_reports = []
    cells_passed = cells_total = 0
    for index, (ideal_i, ideal_j) in enumerate(pairs, start=1):
        ideal_i = ensure_complete(ideal_i, policy)
        ideal_j = ensure_complete(ideal_j, policy)
        poly = bhattacharya_polynomial(ideal_i, ideal_j)
        if args.inject_fault:
            # test hook: corrupt the cross coefficient so every mixed cell fails
            poly = replace(poly, mn=HalfInteger(poly.mn.doubled + 2))
        table = brute_table(ideal_i, ideal_j, args.max_m, args.max_n)
        if len(pairs) > 1:
            lines.append(f"pair {index}: I = {ideal_i}; J = {ideal_j}")
        cells = []
        pair_ok = True
        for m in range(args.max_m + 1):
            for n in range(args.max_n + 1):
                closed_value = poly.evaluate(m, n)
                oracle_value = table[m][n]
                ok = closed_value == oracle_value
                pair_ok = pair_ok and ok
                cells_total += 1
                cells_passed += ok
                cells.append(
                    {"m": m, "n": n, "closed": closed_value, "oracle": oracle_value, "ok": ok}
                )
                lines.append(
                    f"m={m} n={n} closed={closed_value} oracle={oracle_value} "
                    f"{'PASS' if ok else 'FAIL'}"
                )
        pair_reports.append(
            {"i": ideal_i.to_json(), "j": ideal_j.to_json(), "cells": cells, "passed": pair_ok}
        )
    all_ok = cells_passed == cells_total
    lines.append(f"verify: {cells_passed}/{cells_total} cells PASS")
    ideals = {}
    if args.random is None:
        ideals = {"i": pair_reports[0]["i"], "j": pair_reports[0]["j"]}
    report = {
        "command": "verify",
        "ideals": ideals,
        "result": {
            "max_m": args.max_m,
            "max_n": args.max_n,
            "pairs": pair_reports,
            "passed": all_ok,
        },
    }
    return report, "\n".join(lines), EXIT_OK if all_ok else EXIT_VERIFY


# --- argument parsing and dispatch ------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ideal2d",
        description="Complete monomial ideals in two variables: closure, "
        "factorization, colengths and the colength polynomial.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_command(name, handler, help_text, needs_j=False, needs_power=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("-i", dest="ideal", required=True, metavar="IDEAL",
                         help="ideal expression, e.g. \"x^2, y^3\" ('-' reads stdin)")
        if needs_j:
            cmd.add_argument("-j", dest="ideal_j", required=True, metavar="IDEAL",
                             help="second ideal expression")
        if needs_power:
            cmd.add_argument("-m", dest="m", type=int, default=1, metavar="M",
                             help="power m (default 1)")
        cmd.add_argument("--json", action="store_true", help="print a JSON report")
        cmd.add_argument("--autoclose", action="store_true",
                         help="replace incomplete inputs by their closure (with a warning)")
        cmd.set_defaults(handler=handler)
        return cmd

    add_command("closure", _cmd_closure, "integral closure of an ideal")
    add_command("factor", _cmd_factor, "factor a complete ideal into block ideals")
    add_command("colength", _cmd_colength, "number of monomials outside the ideal")
    add_command("bhatt", _cmd_bhatt, "closed form of len(R/I^m J^n)", needs_j=True)
    add_command("maxideal", _cmd_maxideal, "closed form of len(R/I^m (x,y)^n)")
    add_command("hilbert", _cmd_hilbert, "len(I^m/I^{m+1})", needs_power=True)
    add_command("fiber", _cmd_fiber, "len(I^m/(x,y)I^m)", needs_power=True)
    add_command("gens", _cmd_gens, "number of minimal generators")

    verify = sub.add_parser("verify", help="check the closed form against brute enumeration")
    verify.add_argument("-i", dest="ideal", metavar="IDEAL", help="first ideal expression")
    verify.add_argument("-j", dest="ideal_j", metavar="IDEAL", help="second ideal expression")
    verify.add_argument("--max-m", dest="max_m", type=int, default=4, metavar="M",
                        help="largest power of the first ideal (default 4)")
    verify.add_argument("--max-n", dest="max_n", type=int, default=4, metavar="N",
                        help="largest power of the second ideal (default 4)")
    verify.add_argument("--random", type=int, default=None, metavar="COUNT",
                        help="verify COUNT random complete pairs instead of -i/-j")
    verify.add_argument("--seed", type=int, default=0, help="seed for --random (default 0)")
    verify.add_argument("--inject-fault", action="store_true",
                        help="corrupt one coefficient first (self-test of the checker)")
    verify.add_argument("--json", action="store_true", help="print a JSON report")
    verify.add_argument("--autoclose", action="store_true",
                        help="replace incomplete inputs by their closure (with a warning)")
    verify.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", IncompleteIdealWarning)
            report, text, code = args.handler(args)
        messages = [
            str(w.message) for w in caught if isinstance(w.message, IncompleteIdealWarning)
        ]
        report["warnings"] = list(dict.fromkeys(messages))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for message in report["warnings"]:
            print(f"warning: {message}", file=sys.stderr)
        if text:
            print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

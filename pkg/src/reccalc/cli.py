"""Command-line interface.

Exit codes: 0 success, 1 parse or usage error, 2 verification failure,
3 internal invariant violation (for example an inexact gcd division).

Anywhere a recurrence file is expected, ``@name`` selects a catalog family.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, TextIO

from reccalc.dsl import format_recurrence, parse_spec, print_spec
from reccalc.errors import ExactDivisionError, InvalidArgument, NotFound, ParseError
from reccalc.exact_arith import format_ratfunc
from reccalc.recurrence import (
    LinearRecurrence,
    char_poly_of,
    derivative_chain,
    product_rule,
    recurrence_of,
    sum_rule,
)
from reccalc.sequences import (
    CATALOG_NAMES,
    MAX_TERMS,
    catalog,
    differentiate_terms,
    generate_terms,
    holds_at,
    product_terms,
    sum_terms,
    verify_recurrence,
)
from reccalc.serialize import recurrence_to_json, report_to_json, tpoly_to_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_source(ref: str) -> LinearRecurrence:
    if ref.startswith("@"):
        return catalog(ref[1:])
    try:
        with open(ref, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {ref}: {e.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        prefix = data[: e.start]
        line = prefix.count(b"\n") + 1
        col = e.start - (prefix.rfind(b"\n") + 1) + 1
        raise ParseError("input is not valid UTF-8", line, col) from None
    return parse_spec(text)


def load_candidate(ref: str) -> LinearRecurrence:
    if ref.startswith("@") or os.path.exists(ref):
        return load_source(ref)
    return parse_spec(ref)


def _need_init(rec: LinearRecurrence, what: str) -> None:
    if rec.initial_values is None:
        raise UsageError(f"--verify needs initial values for {what}")


def _terms_up_to(rec: LinearRecurrence, end: int, args, label: str):
    return generate_terms(rec, max(end + 1, rec.order), max_terms=args.max_terms, source=label)


def _run_verification(candidate: LinearRecurrence, tl, start: int, end: int):
    if end < start:
        raise UsageError(f"--verify {end} is below the first checked index {start}")
    report = verify_recurrence(candidate, tl, start, end)
    extra = holds_at(candidate, tl, candidate.order, start - 1) if start > candidate.order else {}
    return report, extra


def _report_lines(report, extra: dict[int, bool]) -> list[str]:
    lo, hi = report.checked_range
    if report.passed:
        lines = [f"verified n = {lo}..{hi}"]
    else:
        lines = [
            f"FAILED at n = {report.first_failure}: residual {format_ratfunc(report.residual_at_failure)}"
        ]
    if extra:
        held = [n for n, ok in extra.items() if ok]
        missed = [n for n, ok in extra.items() if not ok]
        if held:
            lines.append(f"also holds (not guaranteed) at n = {', '.join(map(str, held))}")
        if missed:
            lines.append(f"does not hold (not guaranteed) at n = {', '.join(map(str, missed))}")
    return lines


def _verification_json(report, extra) -> dict:
    out = report_to_json(report)
    out["informative"] = {str(n): ok for n, ok in extra.items()}
    return out


# --- subcommands -------------------------------------------------------------------


def cmd_charpoly(args, out: TextIO) -> int:
    rec = load_source(args.source)
    cp = char_poly_of(rec)
    if args.json:
        _dump({"command": "charpoly", "recurrence": recurrence_to_json(rec), "charpoly": tpoly_to_json(cp.poly)}, out)
    else:
        out.write(f"recurrence: {format_recurrence(rec)}\n")
        out.write(f"charpoly:   {cp.poly}\n")
        out.write(f"order:      {cp.degree}\n")
    return EXIT_OK


def cmd_derive(args, out: TextIO) -> int:
    rec = load_source(args.source)
    if args.times < 1:
        raise UsageError("--times must be at least 1")
    chain = derivative_chain(char_poly_of(rec), args.times)
    final = chain[-1]
    report = extra = None
    if args.verify is not None:
        _need_init(rec, args.source)
        tl = differentiate_terms(_terms_up_to(rec, args.verify, args, args.source), args.times)
        report, extra = _run_verification(final.recurrence, tl, final.valid_from, args.verify)
    if args.json:
        steps = []
        for i, step in enumerate(chain, start=1):
            p = step.source.poly
            steps.append(
                {
                    "derivative": i,
                    "p": tpoly_to_json(p),
                    "p_x": tpoly_to_json(p.x_derivative()),
                    "gcd": tpoly_to_json(step.gcd),
                    "charpoly": tpoly_to_json(step.charpoly.poly),
                    "recurrence": recurrence_to_json(step.recurrence),
                    "valid_from": step.valid_from,
                    "certificate": {
                        "beta": tpoly_to_json(step.certificate.beta),
                        "gamma": tpoly_to_json(step.certificate.gamma),
                        "q": tpoly_to_json(step.certificate.q),
                    },
                }
            )
        _dump(
            {
                "command": "derive",
                "source": recurrence_to_json(rec),
                "steps": steps,
                "verification": None if report is None else _verification_json(report, extra),
            },
            out,
        )
    else:
        out.write(f"source:      {format_recurrence(rec)}\n")
        for i, step in enumerate(chain, start=1):
            p = step.source.poly
            out.write(f"derivative {i}:\n")
            out.write(f"  p:          {p}\n")
            out.write(f"  p':         {p.x_derivative()}\n")
            out.write(f"  gcd(p,p'):  {step.gcd}\n")
            out.write(f"  charpoly:   {step.charpoly.poly}\n")
            out.write(f"  order:      {step.order}\n")
            out.write(f"  recurrence: {format_recurrence(step.recurrence)}\n")
            out.write(f"  valid from: n >= {step.valid_from}\n")
            out.write(f"  beta:       {step.certificate.beta}\n")
            out.write(f"  gamma:      {step.certificate.gamma}\n")
        if report is not None:
            for line in _report_lines(report, extra):
                out.write(line + "\n")
    return EXIT_OK if report is None or report.passed else EXIT_VERIFY


def _binary_rule(args, out: TextIO, name: str) -> int:
    a = load_source(args.a)
    b = load_source(args.b)
    pa, pb = char_poly_of(a), char_poly_of(b)
    if name == "sum":
        cp = sum_rule(pa, pb, sharpen=args.lcm)
    else:
        cp = product_rule(pa, pb)
    rec = recurrence_of(cp)
    report = extra = None
    if args.verify is not None:
        _need_init(a, args.a)
        _need_init(b, args.b)
        ta = _terms_up_to(a, args.verify, args, args.a)
        tb = _terms_up_to(b, args.verify, args, args.b)
        tl = sum_terms(ta, tb) if name == "sum" else product_terms(ta, tb)
        report, extra = _run_verification(rec, tl, rec.order, args.verify)
    if args.json:
        payload = {
            "command": name,
            "a": tpoly_to_json(pa.poly),
            "b": tpoly_to_json(pb.poly),
            "charpoly": tpoly_to_json(cp.poly),
            "recurrence": recurrence_to_json(rec),
            "verification": None if report is None else _verification_json(report, extra),
        }
        if name == "sum":
            payload["lcm"] = bool(args.lcm)
        _dump(payload, out)
    else:
        out.write(f"a:          {pa.poly}\n")
        out.write(f"b:          {pb.poly}\n")
        out.write(f"charpoly:   {cp.poly}\n")
        out.write(f"order:      {cp.degree}\n")
        out.write(f"recurrence: {format_recurrence(rec)}\n")
        if report is not None:
            for line in _report_lines(report, extra):
                out.write(line + "\n")
    return EXIT_OK if report is None or report.passed else EXIT_VERIFY


def cmd_sum(args, out: TextIO) -> int:
    return _binary_rule(args, out, "sum")


def cmd_product(args, out: TextIO) -> int:
    return _binary_rule(args, out, "product")


def cmd_terms(args, out: TextIO) -> int:
    rec = load_source(args.source)
    if rec.initial_values is None:
        raise UsageError(f"{args.source} has no initial values")
    if args.count < rec.order:
        raise UsageError(f"--count must be at least the order {rec.order}")
    if args.diff < 0:
        raise UsageError("--diff must be nonnegative")
    tl = generate_terms(rec, args.count, max_terms=args.max_terms, source=args.source)
    tl = differentiate_terms(tl, args.diff)
    if args.json:
        from reccalc.serialize import ratfunc_to_json

        _dump({"command": "terms", "diff": args.diff, "terms": [ratfunc_to_json(t) for t in tl.terms]}, out)
    else:
        name = "f" + "'" * args.diff if args.diff <= 3 else f"f^({args.diff})"
        for i, t in enumerate(tl.terms):
            out.write(f"{name}[{i}] = {format_ratfunc(t)}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    rec = load_source(args.source)
    if rec.initial_values is None:
        raise UsageError(f"{args.source} has no initial values")
    candidate = load_candidate(args.candidate)
    if args.start < candidate.order:
        raise UsageError(f"--from must be at least the candidate order {candidate.order}")
    if args.end < args.start:
        raise UsageError("--to must not be below --from")
    tl = differentiate_terms(_terms_up_to(rec, args.end, args, args.source), args.diff)
    report = verify_recurrence(candidate, tl, args.start, args.end)
    if args.json:
        _dump(
            {"command": "verify", "candidate": recurrence_to_json(candidate), "verification": report_to_json(report)},
            out,
        )
    else:
        out.write(f"candidate: {format_recurrence(candidate)}\n")
        for line in _report_lines(report, {}):
            out.write(line + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_catalog(args, out: TextIO) -> int:
    if args.name is None:
        if args.json:
            _dump({"command": "catalog", "names": list(CATALOG_NAMES)}, out)
        else:
            for name in CATALOG_NAMES:
                out.write(name + "\n")
        return EXIT_OK
    rec = catalog(args.name)
    if args.json:
        _dump({"command": "catalog", "name": args.name, "recurrence": recurrence_to_json(rec)}, out)
    else:
        out.write(print_spec(rec))
    return EXIT_OK


def _dump(obj, out: TextIO) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


# --- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--max-terms", type=int, default=MAX_TERMS, help="term generation limit")

    parser = _Parser(prog="reccalc", description="Exact calculus of linear recurrences in x.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial")
    p.add_argument("source")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("derive", parents=[common], help="recurrence for termwise x-derivatives")
    p.add_argument("source")
    p.add_argument("--times", type=int, default=1)
    p.add_argument("--verify", type=int, metavar="N", help="check the result on terms up to index N")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("sum", parents=[common], help="recurrence for termwise sums")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--lcm", action="store_true", help="use lcm instead of the product")
    p.add_argument("--verify", type=int, metavar="N")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("product", parents=[common], help="recurrence for termwise products")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--verify", type=int, metavar="N")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("terms", parents=[common], help="unroll terms")
    p.add_argument("source")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--diff", type=int, default=0)
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("verify", parents=[common], help="check a candidate recurrence against terms")
    p.add_argument("source")
    p.add_argument("--candidate", required=True, help="file, @name, or inline recurrence text")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--diff", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="show a named family")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        return args.func(args, out)
    except ParseError as e:
        err.write(f"error: {e.line}:{e.column}: {e.message}\n")
        return EXIT_USAGE
    except (UsageError, InvalidArgument, NotFound) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except ExactDivisionError as e:
        err.write(f"internal error: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

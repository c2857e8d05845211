"""Command-line front end.

One subcommand per library operation; numeric output is always rendered
as strings so golden files stay exact.  Exit codes: 0 success, 1 parse
error, 2 domain error (insufficient precision, invalid input values).
"""

from __future__ import annotations

import argparse
import json
import sys

from .adele_idele import (Adele, Idele, lambda_functional, parse_adele,
                          parse_idele)
from .as_pairing import psi_global, psi_local, splitting_table
from .checks import ALL_CHECKS, run_suite
from .cyclic_cohomology import (CyclicModule, group_order_of, h0,
                                herbrand_quotient, hminus1, semilocal_compare)
from .errors import NonFiniteQuotientError, ParseError, PrecisionError
from .finite_field import FieldSpec, field_of_order, parse_field
from .function_field import (divisor_of, parse_place, parse_rational,
                             places_up_to_degree)
from .laurent_series import parse_series
from .reciprocity import (ConstantExtension, as_symbol,
                          global_symbol_constant, neukirch_map_constant)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the documented contract is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _payload(text: str) -> str:
    """Allow '-' to mean: read the payload from stdin."""
    if text == "-":
        return sys.stdin.read()
    return text


def _base_field(args) -> FieldSpec:
    if getattr(args, "field", None):
        return parse_field(args.field)
    if getattr(args, "q", None):
        return field_of_order(args.q)
    raise ParseError("specify the field with --q or --field")


def emit(payload, mode: str) -> str:
    """Render a payload as JSON or as an aligned text table."""
    if mode == "json":
        return json.dumps(payload)
    if isinstance(payload, list) and payload and isinstance(payload[0], dict):
        cols = list(payload[0])
        widths = {c: max(len(c), *(len(str(row[c])) for row in payload))
                  for c in cols}
        lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
        for row in payload:
            lines.append("  ".join(str(row[c]).ljust(widths[c]) for c in cols))
        return "\n".join(lines)
    if isinstance(payload, dict):
        width = max((len(k) for k in payload), default=0)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in payload.items())
    return str(payload)


def build_parser() -> _Parser:
    top = _Parser(prog="ffcft", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, q=True):
        if q:
            p.add_argument("--q", type=int, help="size of the constant field")
            p.add_argument("--field", help="field name like GF(4)")
        p.add_argument("--format", choices=["json", "table"], default="json")

    p = sub.add_parser("residue", help="residue of the differential x dy")
    common(p)
    p.add_argument("--x", required=True, help="Laurent series")
    p.add_argument("--y", required=True, help="Laurent series")

    p = sub.add_parser("pairing-local", help="local pairing Tr res(x dy/y)")
    common(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("pairing-global", help="global pairing of x with an idele")
    common(p)
    p.add_argument("--x", required=True, help="rational function")
    p.add_argument("--idele", required=True, help="idele JSON ('-' for stdin)")

    p = sub.add_parser("splitting",
                       help="splitting of places in the degree-p extension of x")
    common(p)
    p.add_argument("--x", required=True, help="rational function")
    p.add_argument("--max-degree", type=int, default=2)

    for name in ("herbrand", "h0", "hminus1"):
        p = sub.add_parser(name, help=f"{name} of an explicit cyclic-group module")
        common(p, q=False)
        p.add_argument("--module", required=True, help="module JSON ('-' for stdin)")

    p = sub.add_parser("semilocal", help="semilocal comparison on an induced module")
    common(p, q=False)
    p.add_argument("--n", type=int, required=True, help="order of the big group")
    p.add_argument("--s", type=int, required=True, help="number of blocks")
    p.add_argument("--module", required=True, help="JSON of the block module")

    p = sub.add_parser("symbol", help="norm residue symbol of an idele")
    common(p)
    p.add_argument("--ext", required=True,
                   help="constant:<n> or as:<rational x>")
    p.add_argument("--idele", required=True, help="idele JSON ('-' for stdin)")

    p = sub.add_parser("neukirch", help="reciprocity-map image of Frobenius^j")
    common(p)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", default=None,
                   help="degree-1 place of the fixed field (default: T)")

    p = sub.add_parser("lambda", help="residue functional of an adele")
    common(p)
    p.add_argument("--adele", required=True, help="adele JSON ('-' for stdin)")

    p = sub.add_parser("divisor", help="principal divisor of a rational function")
    common(p)
    p.add_argument("--x", required=True)

    p = sub.add_parser("places", help="list places up to a degree")
    common(p)
    p.add_argument("--max-degree", type=int, default=2)

    p = sub.add_parser("verify", help="run a named invariant suite")
    common(p, q=False)
    p.add_argument("--suite", default="all",
                   help=f"one of: {', '.join(ALL_CHECKS)}, or all")
    return top


def run(args) -> tuple:
    """Dispatch one parsed command; returns (payload, exit_code)."""
    cmd = args.command
    if cmd == "residue":
        spec = _base_field(args)
        from .laurent_series import residue
        x = parse_series(args.x, spec)
        y = parse_series(args.y, spec)
        return {"residue": repr(residue(x, y))}, 0
    if cmd == "pairing-local":
        spec = _base_field(args)
        x = parse_series(args.x, spec)
        y = parse_series(args.y, spec)
        return {"psi": str(psi_local(x, y)), "p": str(spec.p)}, 0
    if cmd == "pairing-global":
        spec = _base_field(args)
        x = parse_rational(args.x, spec)
        alpha = parse_idele(_payload(args.idele), spec)
        return {"psi": str(psi_global(x, alpha)), "p": str(spec.p)}, 0
    if cmd == "splitting":
        spec = _base_field(args)
        x = parse_rational(args.x, spec)
        return splitting_table(x, args.max_degree), 0
    if cmd in ("herbrand", "h0", "hminus1"):
        M = CyclicModule.from_json(_payload(args.module))
        if cmd == "herbrand":
            return {"h": str(herbrand_quotient(M))}, 0
        inv = h0(M) if cmd == "h0" else hminus1(M)
        return {"invariants": [str(d) for d in inv],
                "order": str(group_order_of(inv))}, 0
    if cmd == "semilocal":
        A1 = CyclicModule.from_json(_payload(args.module))
        ok0, ok1 = semilocal_compare(args.n, args.s, A1)
        return {"h0_ok": ok0, "hminus1_ok": ok1}, 0
    if cmd == "symbol":
        spec = _base_field(args)
        alpha = parse_idele(_payload(args.idele), spec)
        kind, _, value = args.ext.partition(":")
        if kind == "constant":
            try:
                n = int(value)
            except ValueError:
                raise ParseError(f"bad extension degree {value!r}") from None
            e = global_symbol_constant(alpha, ConstantExtension(spec, n))
            return {"exponent": str(e.exponent), "modulus": str(e.modulus)}, 0
        if kind == "as":
            x = parse_rational(value, spec)
            return {"shift": str(as_symbol(x, alpha)), "p": str(spec.p)}, 0
        raise ParseError(f"unknown extension family {kind!r}")
    if cmd == "neukirch":
        spec = _base_field(args)
        ext = ConstantExtension(spec, args.n)
        prime = None
        if args.prime is not None:
            from .finite_field import field as _field
            sigma = _field(spec.p, spec.n * args.j)
            prime = parse_place(args.prime, sigma)
        res = neukirch_map_constant(args.j, ext, prime)
        e = global_symbol_constant(res, ext)
        from .adele_idele import format_idele
        return {"idele": json.loads(format_idele(res)),
                "exponent": str(e.exponent), "modulus": str(e.modulus)}, 0
    if cmd == "lambda":
        spec = _base_field(args)
        alpha = parse_adele(_payload(args.adele), spec)
        lam, f_val = lambda_functional(alpha)
        return {"lambda": repr(lam), "f": str(f_val)}, 0
    if cmd == "divisor":
        spec = _base_field(args)
        x = parse_rational(args.x, spec)
        D = divisor_of(x)
        if args.format == "table":
            return [{"place": str(P), "coefficient": str(n)}
                    for P, n in D.items()], 0
        return {"places": {str(P): str(n) for P, n in D.items()},
                "degree": str(D.degree)}, 0
    if cmd == "places":
        spec = _base_field(args)
        rows = [{"place": str(P), "degree": str(P.degree)}
                for P in places_up_to_degree(spec, args.max_degree)]
        return rows, 0
    if cmd == "verify":
        reports = run_suite(args.suite)
        passed = sum(r["checked"] for r in reports)
        failed = sum(r["failed"] for r in reports)
        ces = [ce for r in reports for ce in r["counterexamples"]]
        payload = {"passed": passed - failed, "failed": failed,
                   "counterexamples": ces[:20],
                   "suites": {r["name"]: ("ok" if r["passed"] else "FAILED")
                              for r in reports}}
        return payload, (0 if failed == 0 else 2)
    raise ParseError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload, code = run(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (PrecisionError, NonFiniteQuotientError, ValueError,
            ZeroDivisionError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(emit(payload, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

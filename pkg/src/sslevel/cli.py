"""Command line interface.

Exit status: 0 success, 1 usage error, 2 verification failure,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .errors import FixtureMismatch, SSLevelError, UsageError
from .modcurves import fixed_points, genus_quotient, genus_x0, parse_descriptor
from .qseries import eta_quotient, parse_eta_spec
from .rationality import DEFAULT_BOUND, format_table, format_tsv, rationality_primes
from .ssp import splitting_type, supersingular_data
from .verify import SUITES, run_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sslevel", description="Supersingular polynomials and rationality primes for X_0(N).")
    parser.add_argument("--tsv", action="store_true", help="tab-separated records instead of text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ss = sub.add_parser("ss-poly", help="supersingular polynomial of X_0(N) mod p")
    ss.add_argument("--p", type=_positive_int, required=True)
    ss.add_argument("--level", type=_positive_int, required=True)
    ss.add_argument("--form", choices=("e", "g", "h"), default="e")
    ss.add_argument("--factored", action="store_true")

    genus = sub.add_parser("genus", help="genus of an Atkin-Lehner quotient")
    genus.add_argument("--curve", required=True)

    rat = sub.add_parser("rationality", help="primes with the rationality property")
    rat.add_argument("--curve", required=True)
    rat.add_argument("--bound", type=_positive_int, default=DEFAULT_BOUND)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", choices=sorted(SUITES), required=True)

    qexp = sub.add_parser("qexp", help="q-expansion of an eta quotient")
    qexp.add_argument("--eta", required=True)
    qexp.add_argument("--prec", type=int, required=True)
    return parser


def _cmd_ss_poly(args, out):
    data = supersingular_data(args.form, args.p, args.level)
    poly = data.poly
    text = poly.format_factored() if args.factored else str(poly)
    if args.tsv:
        lin, quad = splitting_type(poly)
        out.write(f"{args.p}\t{args.level}\t{args.form.upper()}\t{text}\t{data.sign}\t{lin}\t{quad}\n")
    else:
        out.write(text + "\n")
    return 0


def _cmd_genus(args, out):
    x = parse_descriptor(args.curve)
    g = genus_quotient(x)
    base = genus_x0(x.level)
    fixed = {w: fixed_points(x.level, w) for w in sorted(x.involutions) if w != 1}
    if args.tsv:
        out.write(f"{x}\t{g}\t{base.index}\t{base.elliptic2}\t{base.elliptic3}\t{base.cusps}\t{base.genus}\n")
        return 0
    out.write(f"curve {x}\n")
    out.write(f"genus {g}\n")
    out.write(
        f"X_0({x.level}): index {base.index}, elliptic2 {base.elliptic2}, "
        f"elliptic3 {base.elliptic3}, cusps {base.cusps}, genus {base.genus}\n"
    )
    if fixed:
        out.write("fixed points: " + ", ".join(f"w_{w} {c}" for w, c in fixed.items()) + "\n")
    return 0


def _cmd_rationality(args, out):
    result = rationality_primes(args.curve, args.bound)
    out.write((format_tsv(result) if args.tsv else format_table(result)) + "\n")
    return 0


def _cmd_verify(args, out):
    items = run_suite(args.suite)
    for item in items:
        if args.tsv:
            out.write(f"{args.suite}\t{item.name}\t{'PASS' if item.ok else 'FAIL'}\t{item.detail}\n")
        else:
            out.write(item.line() + "\n")
    failed = sum(not i.ok for i in items)
    if not args.tsv:
        out.write(f"{len(items) - failed} passed, {failed} failed\n")
    if failed:
        raise FixtureMismatch(f"suite {args.suite}: {failed} item(s) failed")
    return 0


def _cmd_qexp(args, out):
    spec = parse_eta_spec(args.eta)
    if args.prec <= spec.valuation():
        raise UsageError(f"--prec {args.prec} must exceed the valuation {spec.valuation()} of {spec}")
    s = eta_quotient(spec, args.prec)
    if args.tsv:
        out.write("".join(f"{e}\t{c}\n" for e, c in s.items()))
    else:
        out.write(s.format() + "\n")
    return 0


COMMANDS = {
    "ss-poly": _cmd_ss_poly,
    "genus": _cmd_genus,
    "rationality": _cmd_rationality,
    "verify": _cmd_verify,
    "qexp": _cmd_qexp,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except SSLevelError as exc:
        err.write(f"error [{type(exc).__name__}]: {exc}\n")
        for row in getattr(exc, "rows", ()):
            err.write(f"  {row}\n")
        return exc.exit_code


def main_entry():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()

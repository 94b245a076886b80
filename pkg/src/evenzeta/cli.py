"""Command-line entry point.

Exit codes: 0 when every check passes, 1 for usage or domain errors,
2 when an identity check fails.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

import mpmath

from . import trig
from .errors import DomainError, IdentityViolation
from .rational import format_rational
from .records import encode_record
from .zeta import (
    Kind,
    a_sequence,
    fit_polynomial,
    p_exact,
    q_exact,
    zeta_coefficient_bernoulli,
    zeta_coefficient_direct,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

PRECISION_ENV = "EVENZETA_PRECISION"
DEFAULT_PRECISION = 50
DEFAULT_K_MAX = 10
DEFAULT_TERMS = 10000

OK = "ok"
VIOLATION = "identity-violation"
DOMAIN = "domain-error"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < trig.MIN_PRECISION:
        raise argparse.ArgumentTypeError(
            f"precision must be >= {trig.MIN_PRECISION}, got {value}"
        )
    return value


def _dec(x: trig.BigFloat) -> str:
    return mpmath.nstr(x.value, x.precision)


class _Output:
    """Collects records; the table view is rendered from the same strings."""

    def __init__(self, command: str, params: dict, env: dict):
        self.command = command
        self.params = params
        self.env = env
        self.records: list[dict] = []
        self.lines: list[str] = []
        self.failed = False

    def record(self, status: str, results: dict, line: str | None = None) -> None:
        if status != OK:
            self.failed = True
        fields = {"command": self.command, "status": status}
        fields.update({f"param.{k}": v for k, v in self.params.items()})
        fields.update({f"env.{k}": v for k, v in self.env.items()})
        fields.update({f"result.{k}": v for k, v in results.items()})
        self.records.append(fields)
        if line is not None:
            self.lines.append(line)

    def text(self, line: str) -> None:
        self.lines.append(line)

    def render(self, fmt: str) -> str:
        if fmt == "records":
            return "\n".join(encode_record(r) for r in self.records)
        return "\n".join(self.lines)


def cmd_zeta(args, out: _Output) -> None:
    a = a_sequence(args.max_k)
    out.text("k, a_k, r_k, check")
    for k, a_k in enumerate(a, start=1):
        r = a_k / (4 ** (2 * k) - 4**k)
        direct = zeta_coefficient_direct(k)
        bern = zeta_coefficient_bernoulli(k)
        status = OK if r == direct == bern else VIOLATION
        results = {
            "k": k,
            "a": format_rational(a_k),
            "r": format_rational(r),
            "r_direct": format_rational(direct),
            "r_bernoulli": format_rational(bern),
        }
        line = f"{k}, {results['a']}, {results['r']}, {status}"
        if status != OK:
            line += f" (direct {results['r_direct']}, bernoulli {results['r_bernoulli']})"
        out.record(status, results, line)


def fresh_abscissae(k: int) -> list[int]:
    return list(range(3 * k + 2, 3 * k + 12))


def cmd_verify_poly(args, out: _Output) -> None:
    kind, k = Kind(args.kind), args.k
    try:
        poly = fit_polynomial(kind, k)
    except IdentityViolation as exc:
        results = {"reason": str(exc)}
        results.update({key: _plain(v) for key, v in exc.values.items()})
        out.record(VIOLATION, results, f"{kind.value}_{k}: {exc} {results}")
        return
    a_k = a_sequence(k)[-1]
    exact = p_exact if kind is Kind.P else q_exact
    bad = []
    for n in fresh_abscissae(k):
        expected, got = exact(k, n), poly(n)
        status = OK if expected == got else VIOLATION
        if status != OK:
            bad.append(n)
        out.record(
            status,
            {"n": n, "exact": format_rational(expected), "polynomial_value": format_rational(got)},
        )
    verdict = "verified" if not bad else f"FAILED at n={bad}"
    summary = {
        "polynomial": poly.pretty(),
        "coefficients": ",".join(poly.serialize()),
        "degree": poly.degree,
        "leading": format_rational(poly.leading),
        "a_k": format_rational(a_k),
        "fresh_points": ",".join(str(n) for n in fresh_abscissae(k)),
    }
    out.record(OK if not bad else VIOLATION, summary)
    out.lines[:0] = [
        f"{kind.value}_{k}(n) = {summary['polynomial']}",
        f"coefficients (lowest degree first): [{', '.join(poly.serialize())}]",
        f"fresh abscissae checked exactly: {summary['fresh_points']}",
        f"{summary['polynomial']}, degree {poly.degree}, "
        f"leading {summary['leading']} = a_{k}, {verdict}",
    ]


def _plain(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def cmd_verify_squeeze(args, out: _Output) -> None:
    rep = trig.verify_squeeze(args.k, args.n, args.precision)
    lo, mid, hi = _dec(rep.lower), _dec(rep.middle), _dec(rep.upper)
    status = OK if rep.holds else VIOLATION
    verdict = "holds" if rep.holds else "FAILS"
    out.record(
        status,
        {"lower": lo, "middle": mid, "upper": hi, "holds": str(rep.holds).lower()},
        f"{lo} < {mid} < {hi}, {verdict}",
    )


def cmd_verify_roots(args, out: _Output) -> None:
    rep = trig.verify_roots(args.n, args.precision)
    status = OK if rep.passed else VIOLATION
    results = {
        "max_residual": _dec(rep.max_residual),
        "max_term": _dec(rep.max_term),
        "relative_residual": _dec(rep.relative),
        "threshold": format_rational(rep.threshold),
        "passed": str(rep.passed).lower(),
    }
    out.record(
        status,
        results,
        f"n={args.n}: max relative residual {results['relative_residual']} "
        f"(threshold {results['threshold']}), {'pass' if rep.passed else 'FAIL'}",
    )


def cmd_converge(args, out: _Output) -> None:
    rep = trig.check_convergence(args.k, args.terms, args.precision)
    status = OK if rep.holds else VIOLATION
    results = {
        "partial": _dec(rep.partial),
        "target": _dec(rep.target),
        "gap": _dec(rep.gap),
        "tail_bound": format_rational(rep.bound),
        "holds": str(rep.holds).lower(),
    }
    out.record(status, results)
    out.lines += [
        f"partial sum ({args.terms} terms): {results['partial']}",
        f"target (1 - 2^-{2 * args.k}) r_{args.k} pi^{2 * args.k}: {results['target']}",
        f"gap: {results['gap']}",
        f"tail bound: {results['tail_bound']}",
        "gap <= tail bound: " + ("pass" if rep.holds else "FAIL"),
    ]


def _default_precision() -> tuple[int, dict]:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION, {}
    try:
        return _precision(raw), {PRECISION_ENV: raw}
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{PRECISION_ENV}: {exc}") from None


def build_parser(default_precision: int = DEFAULT_PRECISION) -> argparse.ArgumentParser:
    parser = _Parser(prog="evenzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["table", "records"], default="table")

    def add_precision(p):
        p.add_argument("--precision", type=_precision, default=default_precision,
                       help=f"decimal digits (default {default_precision}, >= {trig.MIN_PRECISION})")

    p = sub.add_parser("zeta", help="r_k = zeta(2k)/pi^(2k) by three routes")
    p.add_argument("--max-k", type=_positive_int, default=DEFAULT_K_MAX)
    add_format(p)
    p.set_defaults(handler=cmd_zeta, label="zeta")

    verify = sub.add_parser("verify", help="identity checks")
    vsub = verify.add_subparsers(dest="check", required=True)

    p = vsub.add_parser("poly", help="P_k / Q_k are polynomials of degree 2k, leading a_k")
    p.add_argument("--kind", choices=["P", "Q"], required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    add_format(p)
    p.set_defaults(handler=cmd_verify_poly, label="verify-poly")

    p = vsub.add_parser("squeeze", help="P_k(n) < scaled odd zeta sum < Q_k(n)")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    add_precision(p)
    add_format(p)
    p.set_defaults(handler=cmd_verify_squeeze, label="verify-squeeze")

    p = vsub.add_parser("roots", help="i cot((2l-1)pi/4n) are roots of sum C(2n,2r) z^(2r)")
    p.add_argument("--n", type=_positive_int, required=True)
    add_precision(p)
    add_format(p)
    p.set_defaults(handler=cmd_verify_roots, label="verify-roots")

    p = sub.add_parser("converge", help="odd partial sums approach (1 - 4^-k) zeta(2k)")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--terms", type=_positive_int, default=DEFAULT_TERMS)
    add_precision(p)
    add_format(p)
    p.set_defaults(handler=cmd_converge, label="converge")
    return parser


def main(argv=None) -> int:
    try:
        default_precision, env = _default_precision()
    except UsageError as exc:
        print(f"evenzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(default_precision)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    params = {
        key: getattr(args, key)
        for key in ("max_k", "kind", "k", "n", "terms", "precision")
        if hasattr(args, key)
    }
    out = _Output(args.label, params, env)
    try:
        args.handler(args, out)
    except DomainError as exc:
        out.record(DOMAIN, {"reason": str(exc)})
        if args.format == "records":
            print(out.render("records"))
        else:
            print(f"evenzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out.render(args.format))
    return EXIT_VIOLATION if out.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    spectralops verify {equiv,eigen,symmetry,gram,identities,all} [options]
    spectralops export coeffs --family F --alpha A [--beta B]

Exit status: 0 when every case passes, 1 when any case fails, 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path

from .errors import ConfigError
from .verify import CHECKS, DEFAULT_SEED, FAMILIES, Config, cases_to_csv, coeffs_to_csv, export_coeffs, run, to_json

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise argparse.ArgumentTypeError(f"not an exact rational 'p/q': {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational 'p/q': {text!r}") from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, help="restrict to one operator family")
    p.add_argument("--alpha", type=int, help="single alpha value")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", type=Path, help="write the document here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectralops", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification cases")
    v.add_argument("check", choices=CHECKS + ("all",))
    _add_common(v)
    v.add_argument("--alpha-max", type=int)
    v.add_argument("--beta", type=_rational)
    v.add_argument("--mass", type=_rational, help="point mass N (Laguerre/Jacobi) or M (Bessel)")
    v.add_argument("--lambda2", type=_rational)
    v.add_argument("--n-max", type=int)
    v.add_argument("--truncation", type=int, help="Bessel series truncation order K")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--timing", action="store_true", help="record wall-clock times (breaks byte-identical reruns)")

    e = sub.add_parser("export", help="export exact coefficient tables")
    e.add_argument("what", choices=("coeffs",))
    _add_common(e)
    e.add_argument("--beta", type=_rational)
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "export":
            if args.family is None or args.alpha is None:
                raise ConfigError("export coeffs needs --family and --alpha")
            doc = export_coeffs(args.family, args.alpha, args.beta)
            _emit(coeffs_to_csv(doc) if args.format == "csv" else to_json(doc), args.out)
            return EXIT_OK
        cfg = Config(
            command=args.check,
            families=(args.family,) if args.family else FAMILIES,
            alpha=args.alpha,
            alpha_max=args.alpha_max,
            beta=args.beta,
            mass=args.mass,
            lambda2=args.lambda2,
            n_max=args.n_max,
            truncation=args.truncation,
            seed=args.seed,
            timing=args.timing,
        )
        report = run(cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    _emit(cases_to_csv(report) if args.format == "csv" else to_json(report), args.out)
    summary = report["summary"]
    print(f"{summary['pass']} passed, {summary['fail']} failed", file=sys.stderr)
    return EXIT_FAIL if summary["fail"] else EXIT_OK

"""Command-line front end.

Exit codes: 0 success, 1 tolerance/invariant failure or I/O error, 2 usage error.
JSON reports go to stdout unless ``--out`` is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .discrimination import (
    ExperimentConfig,
    payoff_sweep,
    run_discrimination_mc,
    run_pryde_baseline,
    verify_rho,
)
from .ensemble import q_of, separability_margin

SCHEMA_VERSION = 1
VERIFY_TOL = 1e-10
SEPARABILITY_TOL = 1e-12

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_angle(text: str) -> float:
    """Radians as a decimal, or a multiple of pi with a ``pi`` suffix ("0.5pi", "-pi")."""
    body = text.strip().lower()
    scale = 1.0
    if body.endswith("pi"):
        body, scale = body[:-2].rstrip(), math.pi
        if body in ("", "+", "-"):
            body += "1"
    try:
        value = float(body) * scale
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid angle: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite: {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return value


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid probability: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("prior must lie in [0, 1]")
    return value


def format_decimal(x: float) -> str:
    """Shortest round-trip repr, padded to at least 12 significant digits."""
    text = repr(float(x))
    mantissa = text.lower().split("e")[0].lstrip("-").replace(".", "").lstrip("0")
    if len(mantissa) >= 12:
        return text
    return format(x, "#.12g")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8", newline="\n")


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_verify_rho(args) -> int:
    if args.grid < 8:
        print("error: grid must be ≥ 8", file=sys.stderr)
        return EXIT_USAGE
    diff = verify_rho(args.alpha, args.beta, args.grid)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "alpha": args.alpha,
        "beta": args.beta,
        "grid": args.grid,
        "q": float(q_of(args.alpha, args.beta)),
        "max_abs_diff": diff,
    }
    _emit(_dump(doc), args.out)
    if diff > VERIFY_TOL:
        print(f"error: max_abs_diff {diff:.3e} exceeds {VERIFY_TOL:g}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_discriminate(args) -> int:
    config = ExperimentConfig(
        alpha1=args.alpha1, beta1=args.beta1, alpha2=args.alpha2, beta2=args.beta2,
        prior1=args.prior1, trials=args.trials, seed=args.seed,
    )
    report = run_discrimination_mc(config, threads=args.threads)
    _emit(_dump(report.to_dict()), args.out)
    return EXIT_OK


def cmd_pryde(args) -> int:
    report = run_pryde_baseline(args.trials, args.seed, threads=args.threads)
    _emit(_dump(report.to_dict()), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.alpha_steps < 2:
        print("error: alpha-steps must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha1", "alpha2", "optimal_payoff"])
    for row in payoff_sweep(args.alpha_steps):
        writer.writerow([format_decimal(row.alpha1), format_decimal(row.alpha2),
                         format_decimal(row.optimal_payoff)])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_separability(args) -> int:
    if args.samples < 1:
        print("error: samples must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    rng = np.random.default_rng(args.seed)
    alpha = rng.uniform(0.0, 2 * np.pi, args.samples)
    beta = rng.uniform(0.0, 2 * np.pi, args.samples)
    margins = [separability_margin(float(q)) for q in q_of(alpha, beta)]
    worst = max(margins)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "samples": args.samples,
        "seed": args.seed,
        "max_margin": worst,
        "separable": worst <= SEPARABILITY_TOL,
    }
    _emit(_dump(doc), args.out)
    return EXIT_OK if worst <= SEPARABILITY_TOL else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relinfo",
        description="Two-qubit relative-information discrimination experiments.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def out_flag(p):
        p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")

    p = sub.add_parser("verify-rho", help="compare quadrature average with the closed form")
    p.add_argument("--alpha", type=parse_angle, required=True)
    p.add_argument("--beta", type=parse_angle, required=True)
    p.add_argument("--grid", type=int, default=16)
    out_flag(p)
    p.set_defaults(func=cmd_verify_rho)

    p = sub.add_parser("discriminate", help="Monte-Carlo E1/E2 discrimination run")
    p.add_argument("--alpha1", type=parse_angle, required=True)
    p.add_argument("--beta1", type=parse_angle, default=0.0)
    p.add_argument("--alpha2", type=parse_angle, required=True)
    p.add_argument("--beta2", type=parse_angle, default=0.0)
    p.add_argument("--prior1", type=_probability, default=0.5)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--threads", type=_positive_int, default=1)
    out_flag(p)
    p.set_defaults(func=cmd_discriminate)

    p = sub.add_parser("sweep", help="tabulate the optimal payoff as CSV")
    p.add_argument("--alpha-steps", type=int, required=True)
    out_flag(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("pryde", help="correlated product-state baseline")
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--threads", type=_positive_int, default=1)
    out_flag(p)
    p.set_defaults(func=cmd_pryde)

    p = sub.add_parser("separability", help="sample the separability margin")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    out_flag(p)
    p.set_defaults(func=cmd_separability)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

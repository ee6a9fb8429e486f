"""Command-line interface: ``tripattern {extract,verify,vcdim,gen,bench,oracle}``.

stdout carries only ``key=value`` lines, matrix text or CSV; diagnostics go
to stderr. Exit codes: 0 success, 1 error or failed verification, 2 when
``extract`` only finds a vacuous size-1 witness.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bitmatrix import parse_matrix, serialize_matrix
from .errors import BudgetExceededError, ParseError, PreconditionError
from .generators import RNG_ALGORITHM, generate, parse_generator_spec
from .homogenize import DEFAULT_EXACT_THRESHOLD, HomogenizeConfig
from .oracle import DEFAULT_MATRIX_CAP, max_tri_submatrix
from .patterns import TriPattern, parse_certificate, serialize_certificate, verify_certificate
from .pipeline import DEFAULT_PIPELINE_VC_BUDGET, extract_structure, run_experiment, write_csv
from .vcdim import DEFAULT_VC_BUDGET, column_vc_dimension, row_vc_dimension

EXIT_OK, EXIT_ERROR, EXIT_VACUOUS = 0, 1, 2


class CliError(Exception):
    pass


def _read_matrix(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_matrix(text)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _emit(pairs):
    for key, value in pairs.items():
        print(f"{key}={value}")


def _int_list(text):
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _budget(text):
    value = int(text)
    return None if value < 0 else value


def cmd_extract(args):
    A = _read_matrix(args.matrix)
    cfg = HomogenizeConfig(exact_threshold=args.exact_threshold)
    try:
        report = extract_structure(A, cfg, vc_budget=args.vc_budget)
    except PreconditionError as exc:
        raise CliError(str(exc)) from None
    _emit(report.summary(timings=args.timings))
    if args.out:
        Path(args.out).write_text(serialize_certificate(report.certificate))
    if report.vacuous:
        print("only a vacuous size-1 witness was found", file=sys.stderr)
        return EXIT_VACUOUS
    return EXIT_OK


def cmd_verify(args):
    A = _read_matrix(args.matrix)
    try:
        cert = parse_certificate(Path(args.certificate).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {args.certificate}: {exc.strerror}") from None
    except (ParseError, ValueError) as exc:
        raise CliError(f"{args.certificate}: {exc}") from None
    check = verify_certificate(A, cert)
    if check:
        _emit({"result": "ok", "size": cert.size, "kind": cert.kind})
        return EXIT_OK
    _emit({"result": "violation", "reason": check.reason})
    return EXIT_ERROR


def cmd_vcdim(args):
    A = _read_matrix(args.matrix)
    try:
        cols = column_vc_dimension(A, args.budget)
        rows = row_vc_dimension(A, args.budget)
    except BudgetExceededError as exc:
        raise CliError(str(exc)) from None
    _emit({"vc_dim": max(cols, rows), "column_vc_dim": cols, "row_vc_dim": rows})
    return EXIT_OK


def cmd_gen(args):
    try:
        A = generate(parse_generator_spec(args.spec))
    except (ParseError, ValueError) as exc:
        raise CliError(str(exc)) from None
    text = serialize_matrix(A)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args):
    try:
        family = parse_generator_spec(args.family)
    except (ParseError, ValueError) as exc:
        raise CliError(str(exc)) from None
    cfg = HomogenizeConfig(exact_threshold=args.exact_threshold)
    records = run_experiment(
        family, args.sizes, args.seeds, cfg, timings=args.timings, jobs=args.jobs, vc_budget=args.vc_budget
    )
    print(f"rng={RNG_ALGORITHM}", file=sys.stderr)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    return EXIT_OK


def cmd_oracle(args):
    A = _read_matrix(args.matrix)
    bits = args.pattern.split(",")
    if len(bits) != 3 or any(b not in ("0", "1") for b in bits):
        raise CliError(f"--pattern expects a,b,g with values 0/1, got {args.pattern!r}")
    try:
        size, sel = max_tri_submatrix(A, TriPattern(*map(int, bits)), cap=args.cap)
    except BudgetExceededError as exc:
        raise CliError(str(exc)) from None
    _emit({"size": size, "rows": " ".join(map(str, sel.rows)), "cols": " ".join(map(str, sel.cols))})
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="tripattern", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract and certify a tri-pattern submatrix")
    p.add_argument("matrix")
    p.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    p.add_argument("--vc-budget", type=_budget, default=DEFAULT_PIPELINE_VC_BUDGET,
                   help="node budget for the exact VC-dimension (negative: unlimited)")
    p.add_argument("--out", help="write the certificate here")
    p.add_argument("--timings", action="store_true", help="also print stage timings")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="check a certificate against a matrix")
    p.add_argument("matrix")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("vcdim", help="exact VC-dimension of a matrix")
    p.add_argument("matrix")
    p.add_argument("--budget", type=_budget, default=DEFAULT_VC_BUDGET)
    p.set_defaults(func=cmd_vcdim)

    p = sub.add_parser("gen", help="emit a generated matrix")
    p.add_argument("spec", help="family:key=value,... e.g. interval:points=64,intervals=64,seed=7")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a size x seed sweep and write CSV")
    p.add_argument("--family", required=True, help="generator spec; unset size parameters take each size")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--seeds", type=_int_list, default=[0])
    p.add_argument("--csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--exact-threshold", type=int, default=DEFAULT_EXACT_THRESHOLD)
    p.add_argument("--vc-budget", type=_budget, default=DEFAULT_PIPELINE_VC_BUDGET)
    p.add_argument("--timings", action="store_true", help="fill total_ms (output is then not reproducible)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="brute-force maximum tri-pattern submatrix")
    p.add_argument("matrix")
    p.add_argument("--pattern", required=True, help="a,b,g")
    p.add_argument("--cap", type=int, default=DEFAULT_MATRIX_CAP)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

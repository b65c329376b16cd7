"""Command-line entry point ``cmgr``.

Exit codes: 0 pass, 1 failure, 2 usage or input error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import serialize as ser
from .baker import classify_cell, diff_op, is_fuchsian
from .cm import NonSplitSpectrum, fixed_point, tau_cm
from .partitions import as_partition, transpose
from .suites import SUITES, intersect_dims, run_suite
from .window import eta

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma separated integers, got {text!r}") from exc


def parse_shapes(text: str) -> list[tuple[int, ...]]:
    """Accept ``"[[1]],[[1]],[[1]]"`` or ``"[1],[1],[1]"``: one shape per block."""
    try:
        items = json.loads(f"[{text}]")
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse shapes {text!r}: {exc.msg}") from exc
    shapes = []
    for item in items:
        if isinstance(item, list) and len(item) == 1 and isinstance(item[0], list):
            item = item[0]
        if not isinstance(item, list) or not all(isinstance(p, int) for p in item):
            raise UsageError(f"bad shape {item!r}")
        shapes.append(as_partition(item))
    return shapes


def read_doc(path: str, kind: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return ser.loads(text, kind)
    except ser.DecodeError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def emit(doc) -> None:
    print(json.dumps(doc, indent=2))


def cmd_fixed_point(args) -> int:
    lam = as_partition(parse_int_list(args.lam))
    if not lam:
        raise UsageError("lambda must be nonempty")
    emit(ser.enc_cm_point(fixed_point(lam)))
    return EXIT_OK


def cmd_tau(args) -> int:
    P = read_doc(args.point, "cm_point")
    tau = tau_cm(P, args.vars)
    doc = ser.enc_multipoly(tau)
    doc["text"] = str(tau)
    emit(doc)
    return EXIT_OK


def cmd_classify(args) -> int:
    P = read_doc(args.point, "cm_point")
    emit({"cells": ser.enc_multipartition(classify_cell(P)), "fuchsian": is_fuchsian(P)})
    return EXIT_OK


def cmd_eta(args) -> int:
    W = read_doc(args.window, "window")
    emit(ser.enc_quasi(eta(W)))
    return EXIT_OK


def cmd_baker(args) -> int:
    D = diff_op(read_doc(args.point, "cm_point"))
    if args.json:
        emit(ser.enc_diff_op(D))
    else:
        print(str(D))
    return EXIT_OK


def cmd_intersect(args) -> int:
    lam = as_partition(parse_int_list(args.lam))
    blocks = parse_int_list(args.blocks)
    shapes = parse_shapes(args.mu)
    try:
        rec = intersect_dims(lam, blocks, shapes, sgn_twist=not args.no_twist)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = asdict(rec)
    doc["target"] = list(lam if args.no_twist else transpose(lam))
    emit(doc)
    return EXIT_OK if rec.agree else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, args.nmax, args.seed, args.samples, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(report.to_json() if args.json else report.to_table())
    if report.run != report.passed + report.failed:
        return EXIT_INTERNAL
    if report.errors:
        return EXIT_INTERNAL
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmgr", description="Exact checks for Calogero-Moser points, Schubert cells and quasi-exponentials.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fixed-point", help="print the fixed point of a partition")
    s.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 3,1")
    s.set_defaults(func=cmd_fixed_point)

    s = sub.add_parser("tau", help="tau function of a point")
    s.add_argument("--point", required=True, help="CM point JSON file")
    s.add_argument("--vars", type=int, default=3, help="number of time variables")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("classify", help="cell labels of a point")
    s.add_argument("--point", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("eta", help="quasi-exponential space of a window subspace")
    s.add_argument("--window", required=True)
    s.set_defaults(func=cmd_eta)

    s = sub.add_parser("baker", help="bispectral differential operator of a point")
    s.add_argument("--point", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_baker)

    s = sub.add_parser("intersect", help="compare three intersection-number oracles")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--blocks", required=True, help="block sizes, e.g. 1,1,1")
    s.add_argument("--mu", required=True, help='shapes, e.g. "[[1]],[[1]],[[1]]"')
    s.add_argument("--no-twist", action="store_true", help="drop the sign twist")
    s.set_defaults(func=cmd_intersect)

    s = sub.add_parser("verify", help="run property suites")
    s.add_argument("--suite", default="all", choices=SUITES + ("all",))
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--jobs", type=int, default=1, help="worker processes (one suite per worker)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cmgr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonSplitSpectrum as exc:
        print(f"cmgr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"cmgr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError) as exc:
        print(f"cmgr: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry points.

Every subcommand reads knot systems from JSON files (or bundled names),
prints a JSON result on stdout, and keeps human-oriented notes on stderr.
Exit status: 0 on success, 1 when the computation itself reports failure,
2 for unreadable inputs or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .bordered import build_type_d_module, check_structure, reduce_module
from .errors import DataFormatError, HfspliceError
from .knotsys import KnotSystem, validate
from .selftest import run_selftest
from .splicecore import (
    SpliceProblem,
    chi,
    splice_rank,
    trefoil_splice_bound,
    trefoil_splice_matrices,
    trefoil_splice_rank,
)

__all__ = ["main"]


def _data_candidates(name: str) -> list[str]:
    paths = []
    env = os.environ.get("HFSPLICE_DATA")
    if env:
        paths.append(os.path.join(env, f"{name}.json"))
    return paths


def _load_system(ref: str) -> KnotSystem:
    """Resolve a path, an HFSPLICE_DATA entry, or a bundled name."""
    candidates = [ref] if os.path.exists(ref) else _data_candidates(ref)
    for path in candidates:
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                return KnotSystem.from_json(json.load(fh))
    bundled = resources.files("hfsplice").joinpath("data", f"{ref}.json")
    if bundled.is_file():
        return KnotSystem.from_json(json.loads(bundled.read_text("utf-8")))
    raise FileNotFoundError(f"no file or bundled system named {ref!r}")


def _emit(obj: dict, args: argparse.Namespace) -> None:
    text = json.dumps(obj, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="write the JSON result to this file")
    sub.add_argument(
        "--format", choices=["json"], default="json",
        help="output format (json only)",
    )


def _cmd_validate(args: argparse.Namespace) -> int:
    k = _load_system(args.system)
    report = validate(k, strict=args.strict)
    _emit(report.to_json(), args)
    ok = report.ok and (report.strict_ok or not args.strict)
    return 0 if ok else 1


def _cmd_splice(args: argparse.Namespace) -> int:
    p = SpliceProblem(_load_system(args.first), _load_system(args.second))
    report = splice_rank(p)
    _emit(report.to_json(), args)
    if not report.pipeline_agreement:
        print("note: reduction routes disagreed", file=sys.stderr)
        return 1
    return 0


def _cmd_chi(args: argparse.Namespace) -> int:
    p = SpliceProblem(_load_system(args.first), _load_system(args.second))
    _emit({"chi": chi(p)}, args)
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    k = _load_system(args.system)
    _emit({"bound": trefoil_splice_bound(k)}, args)
    return 0


def _cmd_rr(args: argparse.Namespace) -> int:
    k = _load_system(args.system)
    _, rr = trefoil_splice_matrices(k)
    _emit(
        {
            "rank": trefoil_splice_rank(k),
            "bound": trefoil_splice_bound(k),
            "matrix": rr.flatten().to_json(),
        },
        args,
    )
    return 0


def _cmd_cfd(args: argparse.Namespace) -> int:
    k = _load_system(args.system)
    module = build_type_d_module(k)
    if args.reduce:
        module, audit = reduce_module(module)
        print(f"note: cancelled {len(audit)} generator pairs", file=sys.stderr)
    report = check_structure(module)
    for name, ok in report.to_json().items():
        if not ok:
            print(f"note: {name} is false", file=sys.stderr)
    _emit(module.to_json(), args)
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    result = run_selftest(seed=args.seed, trials=args.trials)
    _emit(result.to_json(), args)
    return 0 if result.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfsplice",
        description="Exact GF(2) rank computations for spliced knot complements.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("validate", help="check a knot system's matrices")
    sub.add_argument("system", help="path or bundled name")
    sub.add_argument(
        "--strict", action="store_true",
        help="also require each tau to have order dividing four",
    )
    _add_output_flags(sub)
    sub.set_defaults(fn=_cmd_validate)

    sub = subs.add_parser("splice", help="rank report for a pair of systems")
    sub.add_argument("first")
    sub.add_argument("second")
    _add_output_flags(sub)
    sub.set_defaults(fn=_cmd_splice)

    sub = subs.add_parser("chi", help="Euler characteristic for a pair")
    sub.add_argument("first")
    sub.add_argument("second")
    _add_output_flags(sub)
    sub.set_defaults(fn=_cmd_chi)

    sub = subs.add_parser("bound", help="trefoil-splice lower bound")
    sub.add_argument("system")
    _add_output_flags(sub)
    sub.set_defaults(fn=_cmd_bound)

    sub = subs.add_parser("rr", help="reduced trefoil-splice matrix and rank")
    sub.add_argument("system")
    _add_output_flags(sub)
    sub.set_defaults(fn=_cmd_rr)

    sub = subs.add_parser("cfd", help="type-D style module of a system")
    sub.add_argument("system")
    sub.add_argument(
        "--reduce", action="store_true",
        help="cancel unit arrows before printing",
    )
    _add_output_flags(sub)
    sub.set_defaults(fn=_cmd_cfd)

    sub = subs.add_parser("selftest", help="run the randomized identity checks")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--trials", type=int, default=25)
    _add_output_flags(sub)
    sub.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FileNotFoundError, json.JSONDecodeError, DataFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HfspliceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

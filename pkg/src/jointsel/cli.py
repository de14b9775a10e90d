"""``jointsel`` command-line interface.

Exit codes: 0 ok, 1 internal error, 2 malformed input, 3 not strongly
connected, 4 verification failed, 5 size limit exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Sequence

from . import bench as bench_mod
from .errors import InputError, PreconditionError, SizeLimitError
from .instances import (
    MODELS,
    dump_instance,
    export_dot,
    guess_format,
    parse_instance_document,
    parse_placement,
    random_strongly_connected,
    serialize_report,
)
from .oracle import DEFAULT_SIZE_LIMIT, brute_force_min_joint
from .selection import Placement, baseline_decoupled_placement, solve_joint_placement
from .structure import StructuralMatrix
from .verification import check_placement

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_UNVERIFIED = 4
EXIT_SIZE = 5

MODEL_ALIASES = {"cycle": "cycle_plus_random", "bidirectional": "bidirectional_spanning"}

log = logging.getLogger("jointsel")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(args: argparse.Namespace) -> tuple[StructuralMatrix, dict]:
    fmt = args.format or ("json" if args.input == "-" else guess_format(args.input))
    doc = parse_instance_document(_read(args.input), fmt)
    meta = {"source": args.input}
    if doc.name:
        meta["name"] = doc.name
    return doc.matrix(strict=args.strict), meta


def cmd_solve(args: argparse.Namespace) -> int:
    a, meta = _load(args)
    solver = solve_joint_placement if args.algorithm == "joint" else baseline_decoupled_placement
    placement = solver(a, allow_disconnected=args.allow_disconnected)
    report = check_placement(a, placement)
    if not report.strongly_connected:
        meta["warning"] = "network is not strongly connected; result not guaranteed minimal/valid"
    _write(args.output, serialize_report(report, placement, args.algorithm, meta))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    a, meta = _load(args)
    placement = parse_placement(_read(args.placement), a.n)
    report = check_placement(a, placement)
    _write(args.output, serialize_report(report, placement, "joint", meta | {"mode": "verify"}))
    return EXIT_OK if report.ok else EXIT_UNVERIFIED


def cmd_oracle(args: argparse.Namespace) -> int:
    a, meta = _load(args)
    cost, witness = brute_force_min_joint(a, args.max_n)
    placement = Placement(a.n, witness, witness)
    report = check_placement(a, placement)
    _write(args.output, serialize_report(report, placement, "oracle", meta))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    model = MODEL_ALIASES.get(args.model, args.model)
    a = random_strongly_connected(args.n, args.density, args.seed, model)
    meta = {"generator": model, "seed": args.seed, "density": args.density}
    _write(args.output, dump_instance(a, name=f"random-{model}-n{args.n}-s{args.seed}", metadata=meta))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    model = MODEL_ALIASES.get(args.model, args.model)
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = bench_mod.run_bench(sizes, args.per_size, args.seed, args.density, model)
    _write(args.csv, bench_mod.to_csv(rows))
    if len(sizes) > 1:
        print(f"log-log slope: {bench_mod.loglog_slope(rows):.3f}", file=sys.stderr)
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    a, _ = _load(args)
    placement = parse_placement(_read(args.placement), a.n) if args.placement else None
    _write(args.output, export_dot(a, placement))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jointsel",
        description="Minimum joint dedicated actuator/sensor placement for structured networks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_cmd(name: str, handler: Callable, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="instance file ('-' for stdin)")
        p.add_argument("--format", choices=["json", "edgelist"], help="default: by file extension")
        p.add_argument("--strict", action="store_true", help="reject duplicate edges")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        p.set_defaults(handler=handler)
        return p

    p = instance_cmd("solve", cmd_solve, "compute a placement")
    p.add_argument("--algorithm", choices=["joint", "baseline"], default="joint")
    p.add_argument("--allow-disconnected", action="store_true",
                   help="solve even if the network is not strongly connected")

    p = instance_cmd("verify", cmd_verify, "certify a placement file")
    p.add_argument("placement", help='JSON with "inputs" and "outputs" arrays')

    p = instance_cmd("oracle", cmd_oracle, "exhaustive minimum (small n only)")
    p.add_argument("--max-n", type=int, default=DEFAULT_SIZE_LIMIT)

    p = instance_cmd("dot", cmd_dot, "export Graphviz DOT")
    p.add_argument("--placement", help="optional placement JSON")

    p = sub.add_parser("gen", help="generate a random strongly connected instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--model", choices=[*MODEL_ALIASES, *MODELS], default="cycle")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("bench", help="time the joint solver on random instances")
    p.add_argument("--sizes", default="100,200,400")
    p.add_argument("--per-size", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.05)
    p.add_argument("--model", choices=[*MODEL_ALIASES, *MODELS], default="cycle")
    p.add_argument("--csv", help="CSV output file (default stdout)")
    p.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc} (use --allow-disconnected to override)", file=sys.stderr)
        return EXIT_PRECONDITION
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except Exception as exc:  # noqa: BLE001
        log.debug("internal error", exc_info=True)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

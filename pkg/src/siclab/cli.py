"""Batch command-line front door.

Commands: search, verify, orbit, moment-demo, report. All structured output
is deterministic JSON (see :mod:`siclab.serialize`); passing --no-timestamp
removes the one non-reproducible metadata field, making repeated runs with
identical flags byte-identical.

Exit codes: 0 pass/success, 1 verification failure, 2 search did not
converge, 64 usage error, 65 data-format error, 74 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .fiducial import SearchConfig, gauge_fixed, search
from .geometry import sic_simplex_report, vertex_images
from .serialize import (
    FileFormatError,
    dumps,
    fiducial_document,
    format_float,
    load_fiducial_file,
    orbit_document,
    report_document,
    write_document,
)
from .verify import DEFAULT_TOLERANCE, verify
from .weyl import orbit

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_NO_CONVERGENCE = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_IO = 74

# A converged loss of t bounds every pair residual by sqrt(t), so this
# default guarantees converged searches certify at the default verification
# tolerance 1e-9 with an order of magnitude to spare.
SEARCH_DEFAULT_TOLERANCE = 1e-19


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _metadata(args, extra: dict | None = None) -> dict:
    meta = {"tool": "siclab", "version": __version__}
    if extra:
        meta.update(extra)
    if not args.no_timestamp:
        meta["created"] = datetime.now(timezone.utc).isoformat()
    return meta


def _attempt_path(out: Path) -> Path:
    return out.with_name(out.stem + ".attempt" + out.suffix)


def cmd_search(args) -> int:
    cfg = SearchConfig(dim=args.dim, seed=args.seed, restarts=args.restarts,
                       loss_tolerance=args.tol)
    result = search(cfg)
    out = Path(args.out) if args.out else Path(f"fiducial_n{args.dim}.json")
    meta = _metadata(args, {
        "dim": args.dim,
        "seed": args.seed,
        "restarts": args.restarts,
        "loss_tolerance": args.tol,
        "loss": result.loss,
        "iterations_used": result.iterations_used,
        "restart_index": result.restart_index,
        "converged": result.converged,
    })
    doc = fiducial_document(args.dim, gauge_fixed(result.fiducial), meta)
    if result.converged:
        write_document(out, doc)
        print(f"converged: loss {format_float(result.loss)} "
              f"(restart {result.restart_index}, "
              f"{result.iterations_used} iterations) -> {out}")
        return EXIT_OK
    side = _attempt_path(out)
    write_document(side, doc)
    print(f"no fiducial found: best loss {format_float(result.loss)} "
          f"(restart {result.restart_index}) -> {side}", file=sys.stderr)
    return EXIT_NO_CONVERGENCE


def _load_and_report(args):
    _, state, _ = load_fiducial_file(args.fiducial)
    ens = orbit(state)
    return verify(ens, args.tol), sic_simplex_report(ens)


def cmd_verify(args) -> int:
    vreport, sreport = _load_and_report(args)
    print(dumps(report_document(vreport, sreport)))
    return EXIT_OK if vreport.passed else EXIT_VERIFY_FAILED


def cmd_report(args) -> int:
    vreport, sreport = _load_and_report(args)
    doc = report_document(vreport, sreport, _metadata(args))
    if args.out:
        write_document(Path(args.out), doc)
    else:
        print(dumps(doc))
    return EXIT_OK


def cmd_orbit(args) -> int:
    dim, state, _ = load_fiducial_file(args.fiducial)
    doc = orbit_document(dim, orbit(state).states, _metadata(args))
    if args.out:
        write_document(Path(args.out), doc)
    else:
        print(dumps(doc))
    return EXIT_OK


def cmd_moment_demo(args) -> int:
    m = args.dim
    images = vertex_images(m)
    print(f"moment-map vertex images, M = {m}")
    for k, img in enumerate(images):
        print(f"vertex {k}: " + " ".join(format_float(c) for c in img.coords))
    if m == 1:
        print("pairwise squared distance: none (single vertex)")
    else:
        d2 = []
        for i in range(m):
            for j in range(i + 1, m):
                diff = images[i].coords - images[j].coords
                d2.append(float(diff @ diff))
        print(f"pairwise squared distance: min {format_float(min(d2))} "
              f"max {format_float(max(d2))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="siclab",
                     description="Search, certify, and analyze SIC-POVMs.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("search", help="find a fiducial by seeded random restarts")
    p.add_argument("--dim", type=int, required=True, help="Hilbert space dimension N")
    p.add_argument("--seed", type=int, default=1, help="base PRNG seed (default 1)")
    p.add_argument("--restarts", type=int, default=20, help="number of restarts (default 20)")
    p.add_argument("--tol", type=float, default=SEARCH_DEFAULT_TOLERANCE,
                   help=f"loss convergence tolerance (default {SEARCH_DEFAULT_TOLERANCE})")
    p.add_argument("--out", help="output path (default fiducial_nN.json)")
    p.add_argument("--no-timestamp", action="store_true",
                   help="omit the creation timestamp from metadata")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="certify a fiducial file, report to stdout")
    p.add_argument("fiducial", help="path to a fiducial JSON file")
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                   help=f"certification tolerance (default {DEFAULT_TOLERANCE})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="write the full certification report")
    p.add_argument("fiducial", help="path to a fiducial JSON file")
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                   help=f"certification tolerance (default {DEFAULT_TOLERANCE})")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("orbit", help="expand a fiducial file into its orbit")
    p.add_argument("fiducial", help="path to a fiducial JSON file")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("moment-demo",
                       help="print the moment-map vertex images for M axes")
    p.add_argument("--dim", type=int, required=True,
                   help="number of homogeneous coordinates M")
    p.set_defaults(func=cmd_moment_demo)

    return parser


def _validate(args) -> None:
    if getattr(args, "dim", None) is not None and args.dim < 1:
        raise _UsageError("--dim must be a positive integer")
    if getattr(args, "seed", None) is not None and not 0 <= args.seed < 2**64:
        raise _UsageError("--seed must fit in 64 unsigned bits")
    if getattr(args, "restarts", None) is not None and args.restarts < 1:
        raise _UsageError("--restarts must be >= 1")
    if getattr(args, "tol", None) is not None and args.tol <= 0:
        raise _UsageError("--tol must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise _UsageError("a command is required")
        _validate(args)
    except _UsageError as exc:
        print(f"siclab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"siclab: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"siclab: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

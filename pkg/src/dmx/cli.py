"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage/parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import verify
from .core import (
    DeltaMatroid,
    Mask,
    SetSystem,
    SymmetricExchangeError,
    validate_delta_matroid,
)
from .formats import (
    DELTA_KIND,
    MATROID_KIND,
    ParseError,
    dump_dm,
    dump_rg,
    parse_dm,
    parse_gf2,
    parse_rg,
)
from .gf2 import Gf2SymmetricMatrix, delta_matroid_from_symmetric, is_binary
from .matroid import Matroid, MatroidError, classify_delta, lower_matroid
from .ribbon import RibbonGraph


class CliError(Exception):
    """A user-facing error reported on stderr with exit code 2."""


def _default_seed() -> int:
    raw = os.environ.get("DMX_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise CliError("DMX_SEED must be an integer, got %r" % raw) from None


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc.strerror or exc)) from None


def _load_system(path: str):
    """Parse a .dm file, reporting diagnostics with the file path."""
    try:
        return parse_dm(_read_file(path))
    except ParseError as exc:
        raise CliError("%s: %s" % (path, exc)) from None


def _load_delta(path: str) -> DeltaMatroid:
    dm = _load_system(path)
    try:
        return validate_delta_matroid(dm.system)
    except ValueError as exc:
        raise CliError("%s: %s" % (path, exc)) from None


def _parse_set(system: SetSystem, spec: Optional[str]) -> Mask:
    """Comma-separated labels to a subset mask; empty/missing means the empty set."""
    if not spec:
        return 0
    try:
        return system.ground.mask(lab.strip() for lab in spec.split(","))
    except KeyError as exc:
        raise CliError("--set: %s" % exc.args[0]) from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    path = args.file
    suffix = Path(path).suffix
    if suffix == ".dm":
        dm = _load_system(path)
        print("kind: %s" % dm.kind)
        print("ground: %s" % " ".join(dm.system.ground.labels))
        print("feasible-sets: %d" % len(dm.system.family))
        try:
            if dm.kind == MATROID_KIND:
                Matroid.from_bases(dm.system)
            else:
                validate_delta_matroid(dm.system)
        except ValueError as exc:
            print("valid: no")
            print("reason: %s" % exc)
        else:
            print("valid: yes")
        return 0
    if suffix == ".gf2":
        matrix = _parse_gf2_path(path)
        if isinstance(matrix, Gf2SymmetricMatrix):
            print("kind: gf2sym")
            print("order: %d" % matrix.order)
        else:
            print("kind: gf2")
            print("shape: %d %d" % (len(matrix.rows), matrix.cols))
        print("valid: yes")
        return 0
    if suffix == ".rg":
        graph = _parse_rg_path(path)
        print("kind: ribbon")
        print("vertices: %d" % len(graph.vertices))
        print("edges: %d" % len(graph.edges))
        print("valid: yes")
        return 0
    raise CliError("%s: unknown file extension %r (expected .dm, .gf2 or .rg)" % (path, suffix))


def _parse_gf2_path(path: str):
    try:
        return parse_gf2(_read_file(path))
    except ParseError as exc:
        raise CliError("%s: %s" % (path, exc)) from None


def _parse_rg_path(path: str) -> RibbonGraph:
    try:
        return parse_rg(_read_file(path))
    except ParseError as exc:
        raise CliError("%s: %s" % (path, exc)) from None


def cmd_op(args) -> int:
    d = _load_delta(args.file)
    if args.operation == "dual":
        if args.set:
            raise CliError("dual takes no --set argument")
        result: SetSystem = d.dual()
    else:
        a = _parse_set(d, args.set)
        if args.operation == "twist":
            result = d.twist(a)
        elif args.operation == "lc":
            result = d.loop_complement(a)
        elif args.operation == "delete":
            result = d.minor(delete=a)
        elif args.operation == "contract":
            result = d.minor(contract=a)
        else:  # pragma: no cover - argparse restricts choices
            raise CliError("unknown operation %r" % args.operation)
    print(dump_dm(result), end="")
    return 0


def _classify_lines(d: DeltaMatroid) -> list[str]:
    lines = ["even: %s" % ("yes" if d.parity() == "even" else "no")]
    cert = is_binary(d)
    if cert.verdict:
        lines.append("binary: yes")
        lines.append("binary-twist: %s" % d.render_set(cert.twist_set))
        rows = cert.matrix.rows
        n = cert.matrix.order
        lines.append(
            "binary-matrix: %s"
            % "|".join("".join(str((row >> j) & 1) for j in range(n)) for row in rows)
        )
    else:
        lines.append("binary: no")
    report = classify_delta(d)
    if report.bipartite:
        lines.append("bipartite: yes")
    else:
        lines.append("bipartite: no")
        lines.append("odd-circuit: %s" % d.render_set(report.odd_circuit_witness))
    if report.eulerian:
        lines.append("eulerian: yes")
        lines.append(
            "eulerian-partition: %s"
            % (" ".join(d.render_set(c) for c in report.eulerian_partition) or "-")
        )
    else:
        lines.append("eulerian: no")
    return lines


def cmd_classify(args) -> int:
    path = args.file
    suffix = Path(path).suffix
    if suffix == ".dm":
        d = _load_delta(path)
    elif suffix == ".gf2":
        matrix = _parse_gf2_path(path)
        if not isinstance(matrix, Gf2SymmetricMatrix):
            raise CliError("%s: classification needs a symmetric (gf2sym) matrix" % path)
        d = delta_matroid_from_symmetric(matrix)
    else:
        raise CliError("%s: classification accepts .dm and .gf2 files" % path)
    for line in _classify_lines(d):
        print(line)
    return 0


def cmd_enumerate(args) -> int:
    try:
        info = verify.enumerate_delta_matroids(args.n, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    for key in ("n", "mode", "total", "even", "binary", "bipartite", "eulerian"):
        print("%s: %s" % (key, info[key]))
    return 0


def cmd_verify(args) -> int:
    names = None if args.suite == "all" else [args.suite]
    try:
        reports = verify.run_suite(names, max_n=args.max_n, seed=args.seed, shards=args.shards)
    except KeyError:
        raise CliError(
            "unknown suite %r (available: all, %s)" % (args.suite, ", ".join(verify.SUITE))
        ) from None
    if args.format == "records":
        for r in reports:
            print(verify.render_record(r))
    else:
        print("\n".join(verify.render_text(r) for r in reports), end="")
    return 0 if all(r.verdict for r in reports) else 1


def cmd_ribbon(args) -> int:
    graph = _parse_rg_path(args.file)
    if args.action == "classify":
        print("connected: %s" % ("yes" if graph.is_connected() else "no"))
        print("orientable: %s" % ("yes" if graph.is_orientable() else "no"))
        print("bipartite: %s" % ("yes" if graph.underlying_bipartite() else "no"))
        print("even-degrees: %s" % ("yes" if graph.underlying_eulerian() else "no"))
        print("boundary-components: %d" % graph.boundary_components())
        return 0
    if args.action == "petrial":
        if args.set:
            labels = [lab.strip() for lab in args.set.split(",")]
            order = {e.label: i for i, e in enumerate(graph.edges)}
            mask = 0
            for lab in labels:
                if lab not in order:
                    raise CliError("--set: unknown edge label %r" % lab)
                mask |= 1 << order[lab]
        else:
            mask = None
        print(dump_rg(graph.petrial(mask)), end="")
        return 0
    if args.action == "to-dm":
        try:
            d = graph.delta_matroid()
        except ValueError as exc:
            raise CliError("%s: %s" % (args.file, exc)) from None
        print(dump_dm(d), end="")
        return 0
    raise CliError("unknown ribbon action %r" % args.action)  # pragma: no cover


# ---------------------------------------------------------------------------
# parser / entry points
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmx",
        description="Delta-matroid operation calculus, classification and verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="parse a file and report its validity")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("op", help="apply an operation to a delta-matroid file")
    p.add_argument("operation", choices=("twist", "lc", "dual", "delete", "contract"))
    p.add_argument("--set", default=None, help="comma-separated ground labels")
    p.add_argument("file")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("classify", help="even/binary/bipartite/eulerian classification")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="count delta-matroids and their properties")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=3, dest="max_n")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ribbon", help="ribbon graph operations")
    p.add_argument("action", choices=("classify", "petrial", "to-dm"))
    p.add_argument("--set", default=None, help="comma-separated edge labels")
    p.add_argument("file")
    p.set_defaults(func=cmd_ribbon)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if getattr(args, "seed", None) is None and args.func in (cmd_enumerate, cmd_verify):
            args.seed = _default_seed()
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def console() -> None:
    sys.exit(main())

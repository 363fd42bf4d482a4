"""Command-line interface.

Subcommands: validate, seed, mutate, gabriel, canonical, enumerate,
classify, serve.  Exit codes: 0 success, 1 domain error, 2 usage error.
Output is deterministic for fixed inputs; --json switches the summary
commands to machine-readable output.  The COLOURQ_MAX environment variable
overrides the default enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import documents, seeds
from .canon import canonical_form, canonical_permutation
from .dynkin import predict_finiteness
from .enumeration import DEFAULT_MAX_QUIVERS, EnumerationConfig, enumerate_class
from .errors import ColouredQuiverError
from .quiver import from_gabriel, gabriel, mutate, mutate_seq, validate


def _default_max() -> int:
    raw = os.environ.get("COLOURQ_MAX")
    if raw is None:
        return DEFAULT_MAX_QUIVERS
    try:
        value = int(raw)
    except ValueError:
        raise ColouredQuiverError(f"COLOURQ_MAX must be an integer, got {raw!r}")
    if value < 1:
        raise ColouredQuiverError(f"COLOURQ_MAX must be >= 1, got {value}")
    return value


def _load(path: str, permissive: bool = False):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise ColouredQuiverError(f"cannot read {path}: {exc.strerror}") from exc
    return documents.parse_quiver(data, permissive=permissive)


def _parse_vertex_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part != ""]
    except ValueError:
        raise ColouredQuiverError(f"expected comma-separated vertex list, got {raw!r}")


def _parse_arrow_list(raw: str) -> list[tuple[int, int]]:
    arrows = []
    for part in raw.split(","):
        if part == "":
            continue
        bits = part.split(":")
        if len(bits) != 2:
            raise ColouredQuiverError(f"expected from:to arrow, got {part!r}")
        try:
            arrows.append((int(bits[0]), int(bits[1])))
        except ValueError:
            raise ColouredQuiverError(f"expected integer vertices in arrow {part!r}")
    return arrows


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colourq",
        description="Coloured quiver mutation, mutation classes, and finiteness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the three structural properties")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("seed", help="build a seed quiver from a named shape")
    p.add_argument("--type", required=True, choices=seeds.FAMILIES, dest="family")
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--orientation", default="linear", choices=seeds.ORIENTATIONS)
    p.add_argument("--arrows", help="explicit from:to,from:to list for --orientation spec")

    p = sub.add_parser("mutate", help="mutate at one vertex or a sequence")
    p.add_argument("file")
    p.add_argument("--at", type=int, dest="at_vertex")
    p.add_argument("--seq", help="comma-separated vertex sequence")

    p = sub.add_parser("gabriel", help="extract the colour-0 subquiver")
    p.add_argument("file")

    p = sub.add_parser("canonical", help="canonical form of a quiver")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="enumerate the mutation class up to isomorphism")
    p.add_argument("file")
    p.add_argument("--max", type=int, default=None, dest="max_quivers")
    p.add_argument("--depth", type=int, default=None, dest="max_depth")
    p.add_argument("--out", help="archive path (.json file or directory)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="finiteness verdict for the mutation class")
    p.add_argument("file")
    p.add_argument("--max", type=int, default=None, dest="max_quivers")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8793)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", help="directory of static explorer assets to serve")
    return parser


def _cmd_validate(args, out) -> int:
    q = _load(args.file, permissive=True)
    violations = validate(q)
    if args.json:
        out.write(json.dumps({
            "valid": not violations,
            "violations": [
                {"property": v.prop, "from": v.source, "to": v.target, "colour": v.colour}
                for v in violations
            ],
        }, separators=(",", ":")) + "\n")
    else:
        if violations:
            for v in violations:
                out.write(str(v) + "\n")
        else:
            out.write("valid\n")
    return 1 if violations else 0


def _cmd_seed(args, out) -> int:
    arrows = _parse_arrow_list(args.arrows) if args.arrows else None
    try:
        g = seeds.orient(args.family, args.rank, args.orientation, arrows)
        q = from_gabriel(g, args.m)
    except ValueError as exc:
        raise ColouredQuiverError(str(exc)) from exc
    out.write(documents.emit_quiver(q))
    return 0


def _cmd_mutate(args, out) -> int:
    if (args.at_vertex is None) == (args.seq is None):
        raise ColouredQuiverError("mutate needs exactly one of --at or --seq")
    q = _load(args.file)
    if args.at_vertex is not None:
        q = mutate(q, args.at_vertex)
    else:
        q = mutate_seq(q, _parse_vertex_list(args.seq))
    out.write(documents.emit_quiver(q))
    return 0


def _cmd_gabriel(args, out) -> int:
    q = _load(args.file)
    out.write(documents.emit_gabriel(gabriel(q)))
    return 0


def _cmd_canonical(args, out) -> int:
    q = _load(args.file)
    key = canonical_form(q)
    if args.json:
        out.write(json.dumps({
            "canonical": key.hex(),
            "permutation": canonical_permutation(q),
        }, separators=(",", ":")) + "\n")
    else:
        out.write(key.hex() + "\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    q = _load(args.file)
    cap = args.max_quivers if args.max_quivers is not None else _default_max()
    cfg = EnumerationConfig(max_quivers=cap, max_depth=args.max_depth)
    result = enumerate_class(q, cfg)
    if args.out:
        documents.save_archive(args.out, result)
    if args.json:
        out.write(json.dumps({
            "status": str(result.status),
            "size": result.size,
            "depth_reached": result.depth_reached,
        }, separators=(",", ":")) + "\n")
    else:
        out.write(f"{result.status}, {result.size} quivers\n")
    return 0


def _cmd_classify(args, out) -> int:
    q = _load(args.file)
    cap = args.max_quivers if args.max_quivers is not None else _default_max()
    verdict = predict_finiteness(q, EnumerationConfig(max_quivers=cap))
    if args.json:
        out.write(documents.emit_verdict(verdict))
    else:
        out.write(f"{verdict.tag} ({verdict.reason})\n")
    return 0


def _cmd_serve(args, out) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "seed": _cmd_seed,
    "mutate": _cmd_mutate,
    "gabriel": _cmd_gabriel,
    "canonical": _cmd_canonical,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "serve": _cmd_serve,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args, out)
    except ColouredQuiverError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line entry point.

Subcommands: enumerate, classify, solve, verify, novelty, examples.  All
structured output is canonical JSON on stdout; errors go to stderr with
exit code 1.  classify exits 2 for NP-complete; solve exits 3 for UNSAT
and 4 when a route refuses the instance; verify exits 2 when the
orientation fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import examples as examples_mod
from . import io
from .classify import classify, novelty_report
from .solver import InputError, InternalError, solve, verify
from .tournaments import (
    CapExceeded,
    ForbiddenSet,
    Tournament,
    canonical_by_bits,
    enumerate_labeled,
    is_free,
    pair_count,
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _forbidden(args) -> ForbiddenSet:
    if getattr(args, "forbidden", None) is None:
        return ForbiddenSet()
    return io.parse_forbidden(_read(args.forbidden))


def _relations(args):
    if getattr(args, "relations", None) is None:
        return ()
    return io.parse_relations(_read(args.relations))


def _emit(obj) -> None:
    sys.stdout.write(io.dumps(obj))


def _cmd_enumerate(args) -> int:
    forbidden = _forbidden(args)
    ts = [
        t for t in enumerate_labeled(args.n) if is_free(t, forbidden)
    ]
    obj = {
        "n": args.n,
        "count": len(ts),
        "tournaments": [io.tournament_to_obj(t) for t in ts],
    }
    if args.up_to_iso:
        canon = canonical_by_bits(args.n)
        reps = sorted({canon[t.bits] for t in ts})
        obj["iso_classes"] = len(reps)
        obj["representatives"] = [
            io.tournament_to_obj(Tournament(args.n, b)) for b in reps
        ]
    _emit(obj)
    return 0


def _cmd_classify(args) -> int:
    c = classify(_forbidden(args), _relations(args))
    _emit(io.classification_to_obj(c))
    return 0 if c.polynomial else 2


def _cmd_solve(args) -> int:
    result = solve(
        _forbidden(args),
        _relations(args),
        io.parse_instance(_read(args.instance)),
        method=args.method,
        max_vars=args.max_vars,
    )
    _emit(io.solve_result_to_obj(result))
    if result.status == "sat" and args.out:
        Path(args.out).write_text(io.dumps(io.orientation_to_obj(result.orientation)))
    return {"sat": 0, "unsat": 3, "refused": 4}[result.status]


def _cmd_verify(args) -> int:
    result = verify(
        io.parse_instance(_read(args.instance)),
        _forbidden(args),
        _relations(args),
        io.parse_orientation(_read(args.orientation)),
    )
    _emit(io.verify_result_to_obj(result))
    return 0 if result.ok else 2


def _cmd_novelty(args) -> int:
    _emit(io.novelty_to_obj(novelty_report(_forbidden(args), _relations(args))))
    return 0


def _cmd_examples(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, (description, doc) in sorted(examples_mod.documents().items()):
        (outdir / name).write_text(io.dumps(doc))
        manifest.append({"file": name, "description": description})
    _emit({"directory": str(outdir), "written": manifest})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orient",
        description=(
            "Classify and solve graph orientation problems with forbidden"
            " tournaments and tuple constraints."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list (free) tournaments of a given order")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--forbidden", help="forbidden-set JSON file")
    p.add_argument(
        "--up-to-iso",
        action="store_true",
        help="also report isomorphism classes and least representatives",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="decide P vs NP-complete (exit 0 vs 2)")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--relations")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "solve", help="orient an instance (exit 0 sat, 3 unsat, 4 refused)"
    )
    p.add_argument("--forbidden", required=True)
    p.add_argument("--relations")
    p.add_argument("--instance", required=True)
    p.add_argument(
        "--method",
        choices=["auto", "brute", "affine", "2sat", "trivial"],
        default="auto",
    )
    p.add_argument(
        "--max-vars",
        type=int,
        help="brute-force variable bound (default 24, or ORIENT_BF_VARS)",
    )
    p.add_argument("--out", help="also write the orientation document here on SAT")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser(
        "verify", help="check an orientation against an instance (exit 0 or 2)"
    )
    p.add_argument("--forbidden", required=True)
    p.add_argument("--relations")
    p.add_argument("--instance", required=True)
    p.add_argument("--orientation", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("novelty", help="report which known family the input is")
    p.add_argument("--forbidden", required=True)
    p.add_argument("--relations")
    p.set_defaults(func=_cmd_novelty)

    p = sub.add_parser("examples", help="write the ready-made example inputs")
    p.add_argument("--out", default="examples", help="output directory")
    p.set_defaults(func=_cmd_examples)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.FormatError, InputError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 on success, 1 when a verification finds failures, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hex as hexmod
from .bijections import (
    BoxedPartition,
    Exceptional,
    conjugate,
    conjugate_formula,
    count_inversions,
    franklin_apply,
    path_decode,
    path_encode,
    BinaryWord,
)
from .core import ParseError, RenderMode, parse_partition, render_ferrers
from .oracle import verify_sum
from .series import verify_euler_conjugacy, verify_pentagonal
from .verify import verify_franklin, verify_inversion_bijection

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_box(text: str) -> tuple[int, int]:
    try:
        m, ell = text.lower().split("x")
        return int(m), int(ell)
    except ValueError:
        raise argparse.ArgumentTypeError(f"box must look like 11x7, got {text!r}") from None


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_render(args) -> int:
    p = parse_partition(args.partition)
    mode = RenderMode(args.mode)
    drawing = render_ferrers(p, mode)
    _emit(args, {"partition": list(p), "mode": mode.value, "lines": drawing.splitlines()}, drawing)
    return EXIT_OK


def cmd_conjugate(args) -> int:
    p = parse_partition(args.partition)
    q = conjugate_formula(p) if args.formula else conjugate(p)
    _emit(args, list(q), q.to_text())
    return EXIT_OK


def cmd_encode(args) -> int:
    m, ell = args.box
    bp = BoxedPartition(m, ell, parse_partition(args.partition))
    w = path_encode(bp)
    data = {"word": str(w), "m": m, "ell": ell, "partition": list(bp.partition),
            "inversions": count_inversions(w)}
    _emit(args, data, str(w))
    return EXIT_OK


def cmd_decode(args) -> int:
    m, ell = args.box
    bp = path_decode(args.word, m, ell)
    _emit(args, list(bp.partition), bp.partition.to_text())
    return EXIT_OK


def cmd_inversions(args) -> int:
    n = count_inversions(BinaryWord(args.word))
    _emit(args, {"word": args.word, "inversions": n}, str(n))
    return EXIT_OK


def _outcome_text(out) -> str:
    if isinstance(out, Exceptional):
        return f"exceptional k={out.k} sign={out.sign:+d}"
    return f"{out.result.to_text()} ({out.move.value})"


def cmd_franklin(args) -> int:
    p = parse_partition(args.partition)
    out = franklin_apply(p)
    if not args.orbit:
        _emit(args, out.to_json(), _outcome_text(out))
        return EXIT_OK
    if isinstance(out, Exceptional):
        data = {"orbit": [list(p)], **out.to_json()}
        text = f"{p.to_text()}\n{_outcome_text(out)}"
    else:
        back = franklin_apply(out.result)
        data = {
            "orbit": [list(p), list(out.result), list(back.result)],
            "moves": [out.move.value, back.move.value],
        }
        text = "\n".join([p.to_text(), _outcome_text(out), _outcome_text(back)])
    _emit(args, data, text)
    return EXIT_OK


def _report(args, reports) -> int:
    ok = all(r.ok for r in reports)
    if args.json:
        body = [r.to_json(timing=args.timing) for r in reports]
        print(json.dumps(body[0] if len(body) == 1 else body, sort_keys=True))
    else:
        for r in reports:
            line = r.summary()
            if args.timing:
                line += f" ({r.elapsed:.2f}s)"
            print(line)
            for f in r.failures[:20]:
                print("  FAIL " + json.dumps(f, sort_keys=True))
            if len(r.failures) > 20:
                print(f"  ... {len(r.failures) - 20} more")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    which = args.subject
    runs = {
        "pentagonal": lambda: verify_pentagonal(args.order),
        "conjugacy": lambda: verify_euler_conjugacy(args.max_n),
        "inversion-bijection": lambda: verify_inversion_bijection(args.max_size),
        "franklin": lambda: verify_franklin(args.max_n),
        "sum": lambda: verify_sum(args.max_n),
        "hex": lambda: hexmod.verify_hex(args.max_cells, args.samples, args.size, args.seed),
    }
    if which == "all":
        reports = [
            verify_pentagonal(),
            verify_euler_conjugacy(),
            verify_inversion_bijection(),
            verify_franklin(),
            verify_sum(),
            hexmod.verify_hex(),
        ]
    else:
        reports = [runs[which]()]
    return _report(args, reports)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_hex_trace(args) -> int:
    board = hexmod.parse_board(_read(args.boardfile))
    result = hexmod.gale_trace(board)
    chain = " ".join(f"({r},{c})" for r, c in result.witness_chain)
    text = f"winner: {result.winner}\nsteps: {result.steps}\nchain: {chain}"
    _emit(args, {"board": board.to_json(), **result.to_json()}, text)
    return EXIT_OK


def cmd_hex_verify(args) -> int:
    if args.samples is not None:
        report = hexmod.verify_no_draw(
            args.rows, args.cols, exhaustive=False, samples=args.samples, seed=args.seed
        )
    else:
        report = hexmod.verify_no_draw(args.rows, args.cols)
    return _report(args, [report])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="ferrers",
        description="Partition bijections, Franklin's involution and Gale's Hex tracer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", parents=[common], help="draw a Ferrers diagram")
    p.add_argument("partition")
    p.add_argument("--mode", choices=[m.value for m in RenderMode], default="left")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("conjugate", parents=[common], help="transpose a partition")
    p.add_argument("partition")
    p.add_argument("--formula", action="store_true", help="count parts >= i instead of reflecting")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("encode", parents=[common], help="boxed partition to 1/2 word")
    p.add_argument("partition")
    p.add_argument("--box", type=parse_box, required=True, metavar="MxL")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="1/2 word to boxed partition")
    p.add_argument("word")
    p.add_argument("--box", type=parse_box, required=True, metavar="MxL")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("inversions", parents=[common], help="count 2-before-1 pairs")
    p.add_argument("word")
    p.set_defaults(func=cmd_inversions)

    p = sub.add_parser("franklin", parents=[common], help="apply Franklin's involution")
    p.add_argument("partition")
    p.add_argument("--orbit", action="store_true", help="also apply the move a second time")
    p.set_defaults(func=cmd_franklin)

    vcommon = argparse.ArgumentParser(add_help=False, parents=[common])
    vcommon.add_argument("--timing", action="store_true", help="report elapsed seconds")
    p = sub.add_parser("verify", help="run a verification sweep")
    vsub = p.add_subparsers(dest="subject", required=True)
    v = vsub.add_parser("pentagonal", parents=[vcommon])
    v.add_argument("--order", type=int, default=100)
    v = vsub.add_parser("conjugacy", parents=[vcommon])
    v.add_argument("--max-n", type=int, default=25)
    v = vsub.add_parser("inversion-bijection", parents=[vcommon])
    v.add_argument("--max-size", type=int, default=12)
    v = vsub.add_parser("franklin", parents=[vcommon])
    v.add_argument("--max-n", type=int, default=50)
    v = vsub.add_parser("sum", parents=[vcommon])
    v.add_argument("--max-n", type=int, default=10_000)
    v = vsub.add_parser("hex", parents=[vcommon])
    v.add_argument("--max-cells", type=int, default=16)
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--size", type=int, default=11)
    v.add_argument("--seed", type=int, default=0)
    vsub.add_parser("all", parents=[vcommon])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hex", help="Hex board tracing")
    hsub = p.add_subparsers(dest="hex_command", required=True)
    h = hsub.add_parser("trace", parents=[common], help="trace a board file ('-' for stdin)")
    h.add_argument("boardfile")
    h.set_defaults(func=cmd_hex_trace)
    h = hsub.add_parser("verify", parents=[vcommon], help="no-draw sweep on one board shape")
    h.add_argument("--rows", type=int, required=True)
    h.add_argument("--cols", type=int, required=True)
    mode = h.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="every colouring (default)")
    mode.add_argument("--samples", type=int, help="number of seeded random colourings")
    h.add_argument("--seed", type=int, default=0)
    h.set_defaults(func=cmd_hex_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, ParseError, OSError) as exc:
        print(f"ferrers: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

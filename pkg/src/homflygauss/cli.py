"""Command-line interface.

Exit status: 0 on success, 2 for unreadable input or bad arguments, 3 when a
cross-check between independent computations fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from .corpus import named_diagrams
from .diagram import GaussDiagram, ParseError, apply_move, load_diagram, random_move, to_gauss_code
from .exactpoly import substitute_exp
from .formulas import evaluate_pkl, generate_Akl, pkl_table, vassiliev_defect
from .statesum import homfly_descending, skein_homfly

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3


class VerificationError(Exception):
    pass


def _fmt(q: Fraction) -> str:
    return str(q)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args: argparse.Namespace) -> GaussDiagram:
    return load_diagram(_read(args.input), args.input_format)


def _emit(args: argparse.Namespace, text: str, payload: object) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_homfly(args: argparse.Namespace) -> int:
    g = _load(args)
    if args.method == "skein":
        p = skein_homfly(g)
    else:
        p = homfly_descending(g)
        if args.method == "both":
            q = skein_homfly(g)
            if p != q:
                raise VerificationError(f"state sum {p.to_text()} != skein {q.to_text()}")
    _emit(args, p.to_text(), {"method": args.method, "polynomial": p.to_json(), "text": p.to_text()})
    return EXIT_OK


def cmd_pkl(args: argparse.Namespace) -> int:
    g = _load(args)
    if args.max_degree is not None:
        values = pkl_table(g, args.max_degree)
    else:
        if args.k is None or args.l is None:
            raise ParseError("give --k and --l, or --max-degree")
        values = {(args.k, args.l): evaluate_pkl(g, args.k, args.l)}
    if args.verify:
        need = max(k for k, _ in values)
        cutoff = need if args.cutoff is None else args.cutoff
        if cutoff < need:
            raise ParseError(f"--cutoff {cutoff} is below the largest requested k = {need}")
        series = substitute_exp(homfly_descending(g), cutoff)
        for (k, l), v in values.items():
            expected = series.coeff(k, l)
            if v != expected:
                raise VerificationError(f"p_{{{k},{l}}}: formula gives {v}, polynomial gives {expected}")
    rows = sorted(values.items())
    if args.max_degree is None:
        text = _fmt(rows[0][1])
    else:
        text = "\n".join(f"p_{{{k},{l}}} = {_fmt(v)}" for (k, l), v in rows)
    payload = {"values": [{"k": k, "l": l, "value": _fmt(v)} for (k, l), v in rows]}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_gen_akl(args: argparse.Namespace) -> int:
    combo = generate_Akl(args.k, args.l, args.m)
    data = combo.to_json(unsigned=args.unsigned)
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
        return EXIT_OK
    if args.unsigned:
        rows = [(t["diagram"], t["coeff"], t["signed"]) for t in combo.unsigned_classes()]
    else:
        rows = [(d, c, False) for d, c in combo.items()]
    if not rows:
        print("0")
    for d, c, signed in rows:
        diagram = " / ".join(to_gauss_code(d).split("\n")[:-1]) or "(no arrows)"
        print(f"{_fmt(c)}\t{diagram}{' [signed]' if signed else ''}")
    return EXIT_OK


def _fuzz(bases: list[tuple[str, GaussDiagram]], seed: int, iters: int, max_arrows: int) -> list[str]:
    """Reidemeister-invariance and finite-type probes; returns report lines or raises."""
    rng = random.Random(seed)
    lines = []
    moves = 0
    for i in range(iters):
        name, g0 = bases[rng.randrange(len(bases))]
        p0 = homfly_descending(g0)
        g = g0
        for _ in range(rng.randint(1, 6)):
            g = apply_move(g, random_move(g, rng, max_arrows=max_arrows))
            moves += 1
            if homfly_descending(g) != p0:
                raise VerificationError(
                    f"iteration {i}: polynomial changed after moves on {name}\n{to_gauss_code(g)}"
                )
    lines.append(f"reidemeister: {iters} sequences, {moves} moves, 0 failures")
    probes = 0
    small = [(n, g) for n, g in bases if g.n <= 6]
    for i in range(iters):
        if not small:
            break
        name, g = small[rng.randrange(len(small))]
        degree = rng.randint(0, 2)
        if g.n < degree + 1:
            continue
        l = rng.randint(1 - g.m, degree) if degree >= 1 - g.m else degree
        k = degree - l
        if k < 0:
            continue
        arrows = sorted(rng.sample(range(g.n), degree + 1))
        d = vassiliev_defect(g, arrows, k, l)
        probes += 1
        if d != 0:
            raise VerificationError(
                f"probe {i}: defect {d} for (k,l)=({k},{l}) at arrows {arrows} on {name}\n{to_gauss_code(g)}"
            )
    lines.append(f"vassiliev: {probes} probes, 0 failures")
    return lines


def cmd_fuzz(args: argparse.Namespace) -> int:
    if args.input is not None:
        bases = [("input", _load(args))]
    else:
        bases = [(n, g) for n, g in sorted(named_diagrams().items()) if g.n <= args.max_arrows]
    lines = _fuzz(bases, args.seed, args.iters, args.max_arrows)
    _emit(args, "\n".join(lines), {"seed": args.seed, "iters": args.iters, "report": lines})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homflygauss",
        description="HOMFLYPT polynomials and their Vassiliev coefficients from Gauss diagrams.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    diagram_in = argparse.ArgumentParser(add_help=False)
    diagram_in.add_argument("--input-format", choices=("auto", "gauss", "pd"), default="auto")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homfly", parents=[common, diagram_in], help="HOMFLYPT polynomial of a diagram")
    p.add_argument("input", help="Gauss-code or PD JSON file, or - for standard input")
    p.add_argument("--method", choices=("statesum", "skein", "both"), default="statesum")
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("pkl", parents=[common, diagram_in], help="coefficients p_{k,l} via Gauss diagram formulas")
    p.add_argument("input")
    p.add_argument("--k", type=_nonneg, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--max-degree", type=_nonneg, default=None)
    p.add_argument("--verify", action="store_true", help="cross-check against the expanded polynomial")
    p.add_argument("--cutoff", type=_nonneg, default=None, help="h-degree cutoff for --verify")
    p.set_defaults(func=cmd_pkl)

    p = sub.add_parser("gen-akl", parents=[common], help="the combination A_{k,l} of arrow diagrams")
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=_positive, default=1)
    p.add_argument("--unsigned", action="store_true", help="group signed diagrams into unsigned classes")
    p.set_defaults(func=cmd_gen_akl)

    p = sub.add_parser("fuzz", parents=[common, diagram_in], help="randomised invariance checks")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=_nonneg, default=100)
    p.add_argument("--max-arrows", type=_nonneg, default=10)
    p.set_defaults(func=cmd_fuzz)
    return parser


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (VerificationError, AssertionError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())

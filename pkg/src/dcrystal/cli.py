"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 undefined operator application,
3 verification failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import kostant as kp
from . import tableaux as tab
from .crystalgraph import (
    DEFAULT_MAX_NODES,
    REALIZATIONS,
    GenerationLimitError,
    VerificationReport,
    check_axioms,
    check_isomorphism,
    check_readings,
    export_dot,
    export_json,
    generate,
)
from .isomorphism import psi, psi_inverse
from .render import render

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNDEFINED = 2
EXIT_VERIFY = 3


class UsageError(ValueError):
    pass


def parse_element(obj: dict):
    if "rows" in obj:
        return tab.MLTableau.from_json(obj)
    if "parts" in obj:
        return kp.KostantPartition.from_json(obj)
    raise UsageError("element JSON needs a 'rows' (tableau) or 'parts' (Kostant partition) field")


def parse_ops(text: str) -> list[tuple[str, int]]:
    """'f1 f2 e4' -> [('f', 1), ('f', 2), ('e', 4)]."""
    out = []
    for tok in text.replace(",", " ").split():
        if len(tok) < 2 or tok[0] not in "ef" or not tok[1:].isdigit():
            raise UsageError(f"bad operator {tok!r}; expected e<i> or f<i>")
        out.append((tok[0], int(tok[1:])))
    return out


def apply_ops(x, ops: Sequence[tuple[str, int]], reading: str = tab.MIDDLE):
    """Apply operators left to right; None as soon as some e_i is undefined."""
    for op, i in ops:
        if not 1 <= i <= x.n:
            raise UsageError(f"index {i} out of range 1..{x.n}")
        if isinstance(x, tab.MLTableau):
            x = tab.f(x, i, reading) if op == "f" else tab.e(x, i, reading)
        else:
            x = kp.f_kp(x, i) if op == "f" else kp.e_kp(x, i)
        if x is None:
            return None
    return x


def dump_element(x) -> str:
    return json.dumps(None if x is None else x.to_json(), sort_keys=True) + "\n"


def _read_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    g = generate(args.realization, args.n, args.depth, reading=args.reading, max_nodes=args.max_nodes)
    _emit(export_dot(g) if args.format == "dot" else export_json(g), args.out)
    return EXIT_OK


def cmd_apply(args) -> int:
    x = parse_element(_read_json(args.element))
    y = apply_ops(x, parse_ops(args.ops), args.reading)
    _emit(dump_element(y), args.out)
    return EXIT_UNDEFINED if y is None else EXIT_OK


def cmd_map(args) -> int:
    x = parse_element(_read_json(args.element))
    if args.direction == "t2kp":
        if not isinstance(x, tab.MLTableau):
            raise UsageError("t2kp expects a tableau")
        y = psi(x)
    else:
        if not isinstance(x, kp.KostantPartition):
            raise UsageError("kp2t expects a Kostant partition")
        y = psi_inverse(x)
    _emit(dump_element(y), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports: list[tuple[str, VerificationReport]] = [
        ("isomorphism", check_isomorphism(args.n, args.depth, max_nodes=args.max_nodes))
    ]
    if args.readings:
        reports.append(("readings", check_readings(args.n, args.depth, max_nodes=args.max_nodes)))
    if args.axioms:
        for name in REALIZATIONS:
            g = generate(name, args.n, args.depth, max_nodes=args.max_nodes)
            reports.append((f"axioms[{name}]", check_axioms(g, VerificationReport(args.n, args.depth))))
    text = "\n".join(f"{label}: {r.summary()}" for label, r in reports) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(r.ok for _, r in reports) else EXIT_VERIFY


def cmd_render(args) -> int:
    x = parse_element(_read_json(args.element))
    if args.style == "stack" and not isinstance(x, kp.KostantPartition):
        raise UsageError("stack style needs a Kostant partition")
    text = render(x, args.style, unicode=args.unicode)
    _emit(text + "\n" if text else "", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dcrystal", description="B(infinity) in type D_n: tableaux and Kostant partitions")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, reading=False):
        sp.add_argument("--out", default=None, help="write to FILE instead of stdout")
        if reading:
            sp.add_argument("--reading", choices=tab.READINGS, default=tab.MIDDLE)

    g = sub.add_parser("gen", help="generate a crystal-graph ball")
    g.add_argument("--realization", choices=REALIZATIONS, default="tableaux")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--depth", type=int, required=True)
    g.add_argument("--format", choices=("dot", "json"), default="json")
    g.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    common(g, reading=True)
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("apply", help="apply an operator string such as 'f1 f2 e4'")
    a.add_argument("element", help="element JSON file, or - for stdin")
    a.add_argument("--ops", required=True)
    common(a, reading=True)
    a.set_defaults(func=cmd_apply)

    m = sub.add_parser("map", help="map between realizations")
    m.add_argument("direction", choices=("t2kp", "kp2t"))
    m.add_argument("element")
    common(m)
    m.set_defaults(func=cmd_map)

    v = sub.add_parser("verify", help="check the isomorphism on BFS balls")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--depth", type=int, required=True)
    v.add_argument("--readings", action="store_true", help="also compare the two reading words")
    v.add_argument("--axioms", action="store_true", help="also check crystal axioms in both models")
    v.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    common(v)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="render an element as text")
    r.add_argument("element")
    r.add_argument("--style", choices=("ascii", "reduced", "stack"), default="ascii")
    r.add_argument("--unicode", action="store_true", help="overlined barred letters")
    common(r)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GenerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

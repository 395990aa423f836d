"""Command-line interface.

Exit codes: 0 success, 1 property or oracle failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import InternalInvariant, InvalidFilling, ReconstructionFailed, ShapeError
from .reading import format_word, height_vector, parse_word, reading_word, reconstruct
from .rpp_crystal import crystal_graph, lower_rpp, raise_rpp, to_dot
from .shapes import parse_shape
from .symfunc import (
    expand_in_schur, format_expansion, g_poly, g_refined, h_coeffs, h_coeffs_refined,
)
from .tableaux import Filling, ceq, enumerate_elegant, enumerate_ssyt, enumerate_rpp, rpp_weight
from .verify import SUITES, run_suite
from .word_crystal import is_lattice


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _load_tableau(args) -> Filling:
    if args.tableau is not None:
        raw = args.tableau
    elif args.input is not None:
        raw = Path(args.input).read_text()
    else:
        raise UsageError("a tableau is required (--tableau JSON or --input PATH)")
    try:
        t = Filling.from_json(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed tableau JSON: {exc}") from None
    if getattr(args, "shape", None) is not None and parse_shape(args.shape) != t.shape:
        raise UsageError(f"tableau shape {t.shape} does not match --shape {args.shape}")
    if getattr(args, "max_entry", None) is not None and args.max_entry != t.max_entry:
        raise UsageError(f"tableau max_entry {t.max_entry} does not match --max-entry {args.max_entry}")
    return t


def _require_rpp(t: Filling) -> None:
    problem = t.violation("rpp")
    if problem:
        raise UsageError(f"not a reverse plane partition: {problem}")


def cmd_enumerate(args) -> int:
    shape = parse_shape(args.shape)
    if args.elegant:
        tableaux = list(enumerate_elegant(shape.outer, shape.inner))
    elif args.ssyt:
        tableaux = list(enumerate_ssyt(shape, args.max_entry))
    else:
        tableaux = list(enumerate_rpp(shape, args.max_entry))
    if args.format == "json":
        _emit(args, json.dumps({"count": len(tableaux), "tableaux": [t.to_json() for t in tableaux]}))
    else:
        lines = [json.dumps([list(r) for r in t.rows]) for t in tableaux]
        lines.append(f"count: {len(tableaux)}")
        _emit(args, "\n".join(lines))
    return 0


def cmd_word(args) -> int:
    t = _load_tableau(args)
    word = reading_word(t)
    info = {
        "word": list(word),
        "heights": list(height_vector(t)),
        "weight": list(rpp_weight(t)),
        "ceq": list(ceq(t)),
        "lattice": is_lattice(word),
    }
    if args.format == "json":
        _emit(args, json.dumps(info))
    else:
        _emit(args, "\n".join([
            f"word: {format_word(word, t.max_entry)}",
            f"heights: {','.join(map(str, info['heights']))}",
            f"weight: {','.join(map(str, info['weight']))}",
            f"ceq: {','.join(map(str, info['ceq']))}",
            f"lattice: {'yes' if info['lattice'] else 'no'}",
        ]))
    return 0


def cmd_reconstruct(args) -> int:
    shape = parse_shape(args.shape)
    try:
        word = parse_word(args.word)
        heights = parse_word(args.heights)
    except ValueError:
        raise UsageError("word and heights must be comma-separated integers") from None
    try:
        t = reconstruct(shape, word, heights, args.max_entry)
    except ReconstructionFailed as exc:
        print(f"reconstruction failed: {exc}", file=sys.stderr)
        return 1
    _emit(args, json.dumps(t.to_json()))
    return 0


def cmd_crystal(args) -> int:
    if args.action == "graph":
        if args.shape is None or args.max_entry is None:
            raise UsageError("crystal graph needs --shape and --max-entry")
        graph = crystal_graph(parse_shape(args.shape), args.max_entry)
        if args.format == "dot":
            _emit(args, to_dot(graph).rstrip("\n"))
        elif args.format == "json":
            _emit(args, json.dumps({
                "vertices": [t.to_json() for t in graph.vertices],
                "edges": [{"source": s, "index": i, "target": t} for s, i, t in graph.edges],
                "components": [
                    {"vertices": list(c.vertices), "highest": list(c.highest),
                     "highest_weight": None if c.highest_weight is None else list(c.highest_weight),
                     "size": c.size}
                    for c in graph.components
                ],
            }))
        else:
            lines = [graph.summary()]
            for k, comp in enumerate(graph.components):
                lines.append(f"component {k}: size {comp.size}, highest weight {comp.highest_weight}")
            _emit(args, "\n".join(lines))
        bad = [c for c in graph.components if len(c.highest) != 1]
        return 1 if bad else 0

    if args.op is None or args.index is None:
        raise UsageError("crystal needs --op and --index")
    t = _load_tableau(args)
    _require_rpp(t)
    if not 1 <= args.index < t.max_entry:
        raise UsageError(f"--index must lie in [1, {t.max_entry - 1}]")
    op = raise_rpp if args.op == "e" else lower_rpp
    result = op(t, args.index)
    _emit(args, "0" if result is None else json.dumps(result.to_json()))
    return 0


def cmd_expand(args) -> int:
    shape = parse_shape(args.shape)
    m = args.max_entry
    rule = h_coeffs(shape, m)
    poly = g_poly(shape, m)
    oracle = expand_in_schur(poly)
    status = "match" if oracle == rule else "MISMATCH"
    if args.format == "json":
        data = {
            "shape": str(shape),
            "max_entry": m,
            "coefficients": json.loads(format_expansion(rule, as_json=True)),
            "oracle": status,
        }
        if args.show_poly:
            data["g"] = poly.to_json()
        if args.refined:
            data["refined"] = json.loads(format_expansion(h_coeffs_refined(shape, m), as_json=True))
            if args.show_poly:
                data["g_refined"] = g_refined(shape, m).to_json()
        _emit(args, json.dumps(data))
    else:
        lines = []
        if args.show_poly:
            lines.append(f"g = {poly}")
        lines.append(format_expansion(rule))
        if args.refined:
            lines.append("refined:")
            lines.append(format_expansion(h_coeffs_refined(shape, m)))
            if args.show_poly:
                lines.append(f"g~ = {g_refined(shape, m)}")
        lines.append(f"oracle: {status}")
        _emit(args, "\n".join(lines))
    return 0 if status == "match" else 1


def cmd_verify(args) -> int:
    results = run_suite(
        args.suite,
        max_cells=args.max_cells,
        max_entry=args.max_entry,
        seed=args.seed,
        max_len=args.max_len,
    )
    _emit(args, "\n".join(r.report() for r in results))
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rppcrystal",
        description="Crystal operators on reverse plane partitions and the LR rule for "
                    "dual stable Grothendieck polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape_required=False, entry_default=None):
        p.add_argument("--shape", required=shape_required,
                       help='skew shape such as "4,4,3/2,1"; inner part optional')
        p.add_argument("--max-entry", "-m", type=int, default=entry_default)
        p.add_argument("--output", "-o", help="write to a file instead of stdout")

    def tableau_input(p):
        p.add_argument("--tableau", help="tableau JSON string")
        p.add_argument("--input", "-i", help="path to a tableau JSON file")

    p = sub.add_parser("enumerate", help="list tableaux of a shape")
    common(p, shape_required=True, entry_default=1)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--ssyt", action="store_true", help="semistandard tableaux")
    kind.add_argument("--elegant", action="store_true", help="elegant fillings of outer/inner")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("word", help="reading word, heights, weight and ceq of a tableau")
    common(p)
    tableau_input(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("reconstruct", help="rebuild an RPP from its reading word and heights")
    common(p, shape_required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--heights", required=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("crystal", help="apply e_i / f_i, or build the crystal graph")
    p.add_argument("action", nargs="?", choices=["apply", "graph"], default="apply")
    common(p)
    tableau_input(p)
    p.add_argument("--op", choices=["e", "f"])
    p.add_argument("--index", type=int)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("expand", help="Schur expansion of g with the lattice-word rule")
    common(p, shape_required=True, entry_default=3)
    p.add_argument("--refined", action="store_true", help="also print the ceq-refined table")
    p.add_argument("--show-poly", action="store_true", help="print the polynomial itself")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run an exhaustive property suite")
    p.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    p.add_argument("--max-cells", type=int, default=6)
    p.add_argument("--max-entry", "-m", type=int, default=3)
    p.add_argument("--max-len", type=int, default=8, help="word length bound for the words suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_entry", None) is not None and args.max_entry < 1:
        parser.error("--max-entry must be positive")
    try:
        return args.func(args)
    except (UsageError, ShapeError, InvalidFilling) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariant as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (reported as JSON), 2 on a
usage error.
"""

import argparse
import json
import sys
from pathlib import Path

from . import explorer
from .ascent import ascent_of_order, order_from_ascent, parse_ascent_sequence
from .construct2 import two_count_for_coloring, two_count_permutation
from .errors import IntervaliaError, ParseError
from .height3 import two_count_height3
from .intervals import SCHEMA, IntervalFamily, format_rational
from .kcount import is_k_count_order, is_k_count_perm
from .order import (IntervalOrder, canonical_representation, depth_order,
                    find_chain_plus_one, find_springs, height, is_semiorder, pp_graph)
from .perm import (SortedColoring, mirsky_sorted_coloring,
                   nesting_pairs, parse_permutation, perm_depth)
from .render import RenderSpec, render_hasse, render_ppgraph, render_representation


def _read_json(path):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {path}: {exc}") from None


def _order_arg(args):
    if getattr(args, "ascent", None):
        return order_from_ascent(parse_ascent_sequence(args.ascent))
    if getattr(args, "order", None):
        return IntervalOrder.from_json(_read_json(args.order))
    return None


def _add_order_inputs(p, perm=False):
    g = p.add_argument_group("input")
    g.add_argument("--ascent", help="ascent sequence, e.g. 0,1,2,0")
    g.add_argument("--order", metavar="FILE", help='order JSON {"n": .., "relation": [[i, j], ..]}')
    if perm:
        g.add_argument("--perm", help="permutation in one-line notation, e.g. [2,1]")


def _text(data, indent=""):
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text(value, indent + "  "))
        else:
            if isinstance(value, list):
                value = " ".join(json.dumps(v, separators=(",", ":")) for v in value)
            lines.append(f"{indent}{key}: {value}")
    return lines


# ---------------------------------------------------------------------------
# commands; each returns a JSON-able dict, or (dict, svg) when it can draw


def cmd_parse(args):
    if args.perm:
        perm = parse_permutation(args.perm)
        return {"schema": SCHEMA, "perm": list(perm), "n": len(perm)}
    order = _order_arg(args)
    if order is None:
        raise ParseError("one of --ascent, --order, --perm is required")
    out = order.to_json()
    out["ascent"] = str(ascent_of_order(order))
    return out


def analyze_order(order):
    graph = pp_graph(order)
    canon = canonical_representation(order)
    return {"schema": SCHEMA, "n": order.n, "ascent": str(ascent_of_order(order)),
            "height": height(order), "depth": depth_order(order),
            "magnitude": canon.magnitude,
            "four_plus_one_free": find_chain_plus_one(order, 4) is None,
            "semiorder": is_semiorder(order),
            "pp_arcs": graph.to_json()["arcs"],
            "springs": len(find_springs(order)),
            "canonical": canon.to_json()}


def analyze_perm(perm):
    return {"schema": SCHEMA, "perm": list(perm), "depth": perm_depth(perm),
            "nesting_pairs": sorted([list(p) for p in nesting_pairs(perm)]),
            "mirsky_coloring": mirsky_sorted_coloring(perm).to_json()["classes"]}


def cmd_analyze(args):
    if args.perm:
        return analyze_perm(parse_permutation(args.perm))
    order = _order_arg(args)
    if order is None:
        raise ParseError("one of --ascent, --order, --perm is required")
    return analyze_order(order)


def cmd_twocount_perm(args):
    perm = parse_permutation(args.perm)
    if args.coloring:
        data = json.loads(args.coloring) if args.coloring.lstrip().startswith("{") \
            else _read_json(args.coloring)
        fam = two_count_for_coloring(perm, SortedColoring.from_json(data))
    else:
        fam = two_count_permutation(perm)
    out = fam.to_json()
    out["perm"] = list(perm)
    out["lengths"] = sorted({format_rational(v) for v in fam.lengths()}, key=int)
    return out, fam


def cmd_twocount_order(args):
    order = _order_arg(args)
    if order is None:
        raise ParseError("one of --ascent, --order is required")
    fam = two_count_height3(order)
    out = fam.to_json()
    out["lengths"] = sorted({format_rational(v) for v in fam.lengths()}, key=int)
    return out, fam


def cmd_kcount(args):
    if args.perm:
        verdict = is_k_count_perm(parse_permutation(args.perm), args.k, exact=args.exact)
    else:
        order = _order_arg(args)
        if order is None:
            raise ParseError("one of --ascent, --order, --perm is required")
        verdict = is_k_count_order(order, args.k, prune=not args.no_prune, exact=args.exact,
                                   allow_large=args.allow_large)
    return verdict.to_json(), verdict.witness


def cmd_search(args):
    common = {"jobs": args.jobs, "allow_large": args.allow_large, "n_min": args.min_n}
    if args.what == "orders":
        report = explorer.search_non_2count_orders(
            args.max_n, four_plus_one_free=not args.no_filter,
            depth_at_most_2=not args.no_filter, **common)
    elif args.what == "perms":
        report = explorer.search_non_3count_perms(args.max_n, shortcuts=not args.no_shortcuts,
                                                  **common)
    else:
        report = explorer.search_conjecture(args.max_n, **common)
    out = report.to_json()
    if args.results:
        out["report_file"] = str(report.save(args.results))
    return out


def cmd_render(args):
    spec = RenderSpec(args.target, args.width, args.height)
    if args.rep:
        family = IntervalFamily.from_json(_read_json(args.rep))
        if args.target != "representation":
            raise ParseError("--rep can only be drawn as a representation")
        return render_representation(family, spec)
    if args.perm:
        if args.target != "representation":
            raise ParseError("permutations can only be drawn as a representation")
        return render_representation(two_count_permutation(parse_permutation(args.perm)), spec)
    order = _order_arg(args)
    if order is None:
        raise ParseError("one of --ascent, --order, --perm, --rep is required")
    if args.target == "hasse":
        return render_hasse(order, spec)
    if args.target == "ppgraph":
        return render_ppgraph(order, spec)
    return render_representation(canonical_representation(order).family(), spec)


def build_parser():
    parser = argparse.ArgumentParser(prog="intervalia",
                                     description="Interval orders with few interval lengths.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "svg"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="validate and normalise an input")
    _add_order_inputs(p, perm=True)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("analyze", parents=[common], help="structural statistics")
    _add_order_inputs(p, perm=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("twocount-perm", parents=[common],
                       help="2-count representation of a depth-2 permutation")
    p.add_argument("perm")
    p.add_argument("--coloring", help="sorted 2-colouring JSON (inline or FILE)")
    p.set_defaults(func=cmd_twocount_perm)

    p = sub.add_parser("twocount-order", parents=[common],
                       help="2-count representation of a height-3, depth-2 order")
    _add_order_inputs(p)
    p.set_defaults(func=cmd_twocount_order)

    p = sub.add_parser("kcount", parents=[common], help="decide k-count representability")
    _add_order_inputs(p, perm=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="exactly k lengths instead of at most k")
    p.add_argument("--no-prune", action="store_true", help="disable PP-arc pruning")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_kcount)

    p = sub.add_parser("search", parents=[common], help="exhaustive searches")
    p.add_argument("what", choices=("orders", "perms", "conjecture"))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--no-shortcuts", action="store_true", help="perms: test every depth")
    p.add_argument("--no-filter", action="store_true", help="orders: test every order")
    p.add_argument("--results", metavar="DIR", help="also save the report in DIR")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", parents=[common], help="draw as SVG")
    _add_order_inputs(p, perm=True)
    p.add_argument("--rep", metavar="FILE", help="representation JSON")
    p.add_argument("--target", choices=("representation", "hasse", "ppgraph"),
                   default="representation")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=0)
    p.set_defaults(func=cmd_render)
    return parser


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except IntervaliaError as exc:
        _emit(json.dumps(exc.to_json()) + "\n", None)
        return 1
    drawable = None
    if isinstance(result, tuple):
        result, drawable = result
    if isinstance(result, str):
        _emit(result, args.out)
    elif args.format == "svg":
        if drawable is None:
            parser.error(f"{args.command} has no SVG output")
        _emit(render_representation(drawable), args.out)
    elif args.format == "text":
        _emit("\n".join(_text(result)) + "\n", args.out)
    else:
        _emit(json.dumps(result, indent=2) + "\n", args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

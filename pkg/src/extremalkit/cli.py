"""Command-line entry point.

Exit codes: 0 success, 1 usage or malformed input, 2 infeasible or over an
oracle cap, 3 internal assertion (including a failed selftest criterion).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .anneal import AnnealParams, PlacementError, anneal_max_crossings
from .drawings import ConstructionFailed, draw_diam4, formula_value, maxcr_diam4, maxcr_spider
from .geometry import Drawing, crossing_count, is_legal, missed_nontrivial_crossings
from .graphs import (
    Caterpillar,
    Diam4,
    Diam4Descriptor,
    GraphError,
    Spider,
    SpiderDescriptor,
    build_complete_multipartite,
    classify_tree,
    thrackle_bound,
)
from .multipartite import HostSpec, ex_multipartite
from .oracle import (
    CapExceeded,
    Infeasible,
    max_edges_clique_free_subgraph,
    max_weight_clique_free,
    max_weight_clique_free_with_t_edges,
)
from .rationals import as_rational, format_rational
from .svg import SvgOptions, export_svg
from .weighted import VertexWeighting, ex_min, ex_prod, min_weight, product_weight


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# argument parsing helpers
# ---------------------------------------------------------------------------


def _int_list(text: str, kind: str, minimum: int) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed {kind} {text!r}: expected comma-separated integers (schema: extremalkit.io.SCHEMAS['tree'])")
    if any(v < minimum for v in vals):
        raise UsageError(f"malformed {kind} {text!r}: entries must be >= {minimum}")
    return vals


def _weights(args) -> VertexWeighting:
    if args.weights_file:
        return io.weights_from_json(Path(args.weights_file))
    if args.weights is None:
        raise UsageError("give --weights or --weights-file")
    try:
        return VertexWeighting(tuple(as_rational(x) for x in args.weights.split(",")))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed weights {args.weights!r}: {exc} (schema: extremalkit.io.SCHEMAS['weights'])")


def _tree(args):
    if getattr(args, "spider", None):
        return SpiderDescriptor(_int_list(args.spider, "spider legs", 1)).tree()
    if getattr(args, "diam4", None):
        return Diam4Descriptor(_int_list(args.diam4, "diam4 type", 0)).tree()
    if getattr(args, "tree", None):
        return io.tree_from_json(Path(args.tree))
    raise UsageError("give one of --spider, --diam4 or --tree")


def _emit(args, text_lines: list[str], doc: dict) -> None:
    if args.format == "json":
        print(io.dumps(doc))
    else:
        print("\n".join(text_lines))


def _write_outputs(args, d: Drawing, title: str) -> None:
    if getattr(args, "svg", None):
        Path(args.svg).write_bytes(export_svg(d, SvgOptions(mark_crossings=True, title=title)))
    if getattr(args, "json", None):
        Path(args.json).write_text(io.dumps(io.drawing_to_json(d)) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _oracle_weighted(args, kind: str):
    W = _weights(args)
    w = min_weight(W) if kind == "min" else product_weight(W)
    if getattr(args, "edges", None) is not None:
        if kind != "min":
            raise UsageError("--edges is only available for the min-weight oracle")
        value = max_weight_clique_free_with_t_edges(W.n, W, args.clique, args.edges)
        _emit(args, [format_rational(value)], {"value": format_rational(value), "edges": args.edges})
        return
    value, g = max_weight_clique_free(W.n, w, args.clique)
    _emit(
        args,
        [format_rational(value), f"witness edges: {[list(e) for e in g.edge_list]}"],
        {"value": format_rational(value), "witness": io.graph_to_json(g)},
    )


def _oracle_multipartite(args):
    spec = HostSpec(_int_list(args.parts, "part sizes", 1), args.clique)
    value, g = max_edges_clique_free_subgraph(build_complete_multipartite(*spec.part_sizes), spec.clique)
    _emit(
        args,
        [str(value), f"witness edges: {[list(e) for e in g.edge_list]}"],
        {"value": value, "witness": io.graph_to_json(g)},
    )


def cmd_ex_min(args):
    if args.brute_force:
        return _oracle_weighted(args, "min")
    value = ex_min(_weights(args), args.clique)
    _emit(args, [format_rational(value)], {"value": format_rational(value)})


def cmd_ex_prod(args):
    if args.brute_force:
        return _oracle_weighted(args, "prod")
    value, part = ex_prod(_weights(args), args.clique)
    _emit(
        args,
        [format_rational(value), f"partition: {part.as_lists()}"],
        {"value": format_rational(value), "partition": io.partition_to_json(part)},
    )


def cmd_ex_multipartite(args):
    if args.brute_force:
        return _oracle_multipartite(args)
    value, part = ex_multipartite(HostSpec(_int_list(args.parts, "part sizes", 1), args.clique))
    _emit(args, [str(value), f"partition: {part.as_lists()}"], {"value": value, "partition": io.partition_to_json(part)})


def cmd_oracle(args):
    if args.problem == "ex-multipartite":
        return _oracle_multipartite(args)
    return _oracle_weighted(args, "min" if args.problem == "ex-min" else "prod")


def _label_name(lab) -> str:
    if isinstance(lab, Spider):
        return f"spider {list(lab.descriptor.legs)}"
    if isinstance(lab, Diam4):
        return f"diam4 {list(lab.descriptor.children)}"
    return "caterpillar" if isinstance(lab, Caterpillar) else "other"


def cmd_maxcr(args):
    if args.spider:
        value = maxcr_spider(_int_list(args.spider, "spider legs", 1))
        _emit(args, [str(value)], {"value": value, "kind": "exact"})
        return
    if args.diam4:
        value = maxcr_diam4(Diam4Descriptor(_int_list(args.diam4, "diam4 type", 0)))
        _emit(args, [str(value)], {"value": value, "kind": "exact"})
        return
    tree = _tree(args)
    labels = classify_tree(tree)
    value = formula_value(tree, labels)
    names = [_label_name(l) for l in labels]
    if value is not None:
        _emit(args, [str(value), f"class: {', '.join(names)}"], {"value": value, "kind": "exact", "class": names})
        return
    _, lower = anneal_max_crossings(tree, AnnealParams(seed=args.seed))
    upper = thrackle_bound(tree)
    _emit(
        args,
        [f"lower bound (annealed): {lower}", f"upper bound (thrackle): {upper}", "class: other"],
        {"kind": "bounds", "lower": lower, "upper": upper, "class": names},
    )


def cmd_draw(args):
    desc = Diam4Descriptor(_int_list(args.diam4, "diam4 type", 0))
    d = draw_diam4(desc)
    cr, missed = crossing_count(d), missed_nontrivial_crossings(d)
    _write_outputs(args, d, f"diameter-4 tree of type {list(desc.children)}")
    _emit(
        args,
        [f"crossings: {cr}", f"missed pairs: {len(missed)}", f"formula: {maxcr_diam4(desc)}"],
        {"crossings": cr, "missed": [[list(e), list(f)] for e, f in missed], "formula": maxcr_diam4(desc),
         "drawing": io.drawing_to_json(d)},
    )


def cmd_anneal(args):
    tree = _tree(args)
    params = AnnealParams(
        grid=args.grid, iterations=args.iters, restarts=args.restarts, seed=args.seed, target=args.target
    )
    d, count = anneal_max_crossings(tree, params)
    formula = formula_value(tree, classify_tree(tree))
    _write_outputs(args, d, "annealed drawing")
    lines = [f"crossings: {count}", f"thrackle bound: {thrackle_bound(tree)}"]
    if formula is not None:
        lines.append(f"formula: {formula}")
    _emit(args, lines, {"crossings": count, "thrackle_bound": thrackle_bound(tree), "formula": formula,
                        "drawing": io.drawing_to_json(d)})


def cmd_verify(args):
    d = io.drawing_from_json(Path(args.drawing))
    report = is_legal(d)
    tb = thrackle_bound(d.graph)
    if not report.ok:
        lines = ["legal: no"] + [f"  {v.rule}: vertices {list(v.vertices)} edges {[list(e) for e in v.edges]}"
                                 for v in report.violations]
        _emit(args, lines + [f"thrackle bound: {tb}"], {
            "legal": False,
            "violations": [{"rule": v.rule, "vertices": list(v.vertices), "edges": [list(e) for e in v.edges]}
                           for v in report.violations],
            "thrackle_bound": tb,
        })
        return
    cr, missed = crossing_count(d), missed_nontrivial_crossings(d)
    _emit(
        args,
        ["legal: yes", f"crossings: {cr}", f"missed pairs: {len(missed)}"]
        + [f"  {list(e)} x {list(f)}" for e, f in missed]
        + [f"thrackle bound: {tb}"],
        {"legal": True, "crossings": cr, "missed": [[list(e), list(f)] for e, f in missed], "thrackle_bound": tb},
    )


def cmd_selftest(args):
    from .acceptance import run_all

    results = run_all(echo=print if args.format == "text" else None)
    if args.format == "json":
        print(io.dumps([{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail,
                         "seconds": round(r.seconds, 3)} for r in results]))
    return 0 if all(r.passed for r in results) else 3


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # --format and --verbose are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    p = _Parser(prog="extremalkit", description="Weighted Turán numbers and maximum rectilinear crossing numbers.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add(name, subparsers=None, **kw):
        return (subparsers.add_parser if subparsers else _add)(name, parents=[common], **kw)

    def weighted(sp, brute=True):
        sp.add_argument("--weights", help="comma-separated integers or p/q rationals")
        sp.add_argument("--weights-file", help="JSON document {\"weights\": [...]}")
        sp.add_argument("--clique", type=int, required=True, help="order of the forbidden clique")
        if brute:
            sp.add_argument("--brute-force", action="store_true", help="use the exhaustive oracle")

    def multi(sp, brute=True):
        sp.add_argument("--parts", required=True, help="comma-separated part sizes")
        sp.add_argument("--clique", type=int, required=True)
        if brute:
            sp.add_argument("--brute-force", action="store_true")

    for name, fn, helptext, setup in (
        ("ex-min", cmd_ex_min, "max min-weight of a clique-free graph", weighted),
        ("ex-prod", cmd_ex_prod, "max product-weight of a clique-free graph", weighted),
        ("ex-multipartite", cmd_ex_multipartite, "clique-free subgraphs of a complete multipartite host", multi),
    ):
        sp = add(name, help=helptext)
        setup(sp)
        sp.set_defaults(fn=fn)

    orc = add("oracle", help="exhaustive search, small inputs only")
    osub = orc.add_subparsers(dest="problem", required=True, parser_class=_Parser)
    o_min = add("ex-min", osub)
    weighted(o_min, brute=False)
    o_min.add_argument("--edges", type=int, help="restrict to graphs with exactly this many edges")
    weighted(add("ex-prod", osub), brute=False)
    multi(add("ex-multipartite", osub), brute=False)
    orc.set_defaults(fn=cmd_oracle)

    def tree_opts(sp, file_flag=True):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--spider", help="leg lengths, e.g. 2,2,2")
        g.add_argument("--diam4", help="child counts, e.g. 3,2,2,1")
        if file_flag:
            g.add_argument("--tree", help="tree JSON file")

    mx = add("maxcr", help="maximum rectilinear crossing number")
    tree_opts(mx)
    mx.add_argument("--seed", type=int, default=0, help="annealer seed for trees without a closed form")
    mx.set_defaults(fn=cmd_maxcr)

    dr = add("draw", help="optimal two-line drawing of a diameter-4 tree")
    dr.add_argument("--diam4", required=True)
    dr.add_argument("--svg")
    dr.add_argument("--json")
    dr.set_defaults(fn=cmd_draw)

    an = add("anneal", help="search for drawings with many crossings")
    tree_opts(an)
    defaults = AnnealParams()
    an.add_argument("--seed", type=int, default=defaults.seed)
    an.add_argument("--iters", type=int, default=defaults.iterations)
    an.add_argument("--restarts", type=int, default=defaults.restarts)
    an.add_argument("--grid", type=int, default=defaults.grid)
    an.add_argument("--target", type=int, help="stop once this many crossings are reached")
    an.add_argument("--svg")
    an.add_argument("--json")
    an.set_defaults(fn=cmd_anneal)

    ve = add("verify", help="legality and crossing report for a drawing JSON file")
    ve.add_argument("--drawing", required=True)
    ve.set_defaults(fn=cmd_verify)

    st = add("selftest", help="run the acceptance checks")
    st.set_defaults(fn=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        code = args.fn(args)
    except (CapExceeded, Infeasible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3
    except (UsageError, io.SchemaError, GraphError, ValueError, OSError) as exc:
        # ValueError covers bad descriptors, weights and parameters
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (PlacementError, ConstructionFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())

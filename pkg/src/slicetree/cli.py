"""Command-line interface.

Exit codes: 0 a result was produced, 2 bad input or violated precondition,
3 an internal certificate failed (for example a non-tree with its witness).
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import io
from .errors import CapExceededError, GraphInputError, PreconditionError, VerificationError
from .generators import KINDS, generate
from .graph import CutPair, Graph, block_cut_tree, enumerate_cut_pairs
from .pipeline import run_pipeline
from .slices import minimal_slice_containing, slices_of_pair
from .symmetry import MAX_N, automorphisms

log = logging.getLogger("slicetree")


def _read_graph(args) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {args.input}: {exc.strerror}") from None
    return io.ingest(text, args.input_format, args.max_n)


def _vertex(g: Graph, label: str) -> int:
    try:
        return g.labels.index(label)
    except ValueError:
        raise GraphInputError(f"unknown vertex label {label!r}") from None


def _family_arg(g: Graph, value: str):
    if value in ("orbit", "all-noncrossing"):
        return value
    try:
        with open(value, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphInputError(f"--family: expected orbit, all-noncrossing or a file ({exc.strerror})") from None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) != 2:
            raise GraphInputError(f"family file: expected two vertex labels, got {len(body)} tokens", lineno)
        pairs.append(CutPair.of(_vertex(g, body[0]), _vertex(g, body[1])))
    return pairs


def _need_json(args, what: str) -> None:
    if args.format not in (None, "json"):
        raise GraphInputError(f"{what} supports --format json only")


def cmd_classify(args) -> str:
    g = _read_graph(args)
    res = run_pipeline(g, _family_arg(g, args.family), max_n=args.max_n)
    res.report.check_consistency()
    if args.format == "dot":
        if res.block_cut_tree is not None:
            return io.block_cut_tree_to_dot(res.block_cut_tree, g)
        return io.tree_to_dot(res.tree, g)
    return io.dumps(io.report_to_json(res.report, res.tree, g, res.block_cut_tree))


def cmd_tree(args) -> str:
    g = _read_graph(args)
    res = run_pipeline(g, _family_arg(g, args.family), max_n=args.max_n)
    if args.format == "dot":
        return io.tree_to_dot(res.tree, g)
    r = res.report
    return io.dumps(
        {
            "vertices": list(g.labels),
            "verdict": r.verdict,
            "family_provenance": r.family_provenance,
            "family": r.family if r.fallback_family is None else r.fallback_family,
            "tree_check": r.tree_check,
            "tree": io.tree_to_json(res.tree),
        }
    )


def cmd_cut_pairs(args) -> str:
    _need_json(args, "cut-pairs")
    g = _read_graph(args)
    return io.dumps({"vertices": list(g.labels), "cut_pairs": [[p.a, p.b] for p in enumerate_cut_pairs(g)]})


def cmd_slices(args) -> str:
    _need_json(args, "slices")
    g = _read_graph(args)
    p = CutPair.of(_vertex(g, args.pair[0]), _vertex(g, args.pair[1]))
    slices = [{"interior": sorted(s.interior), "closure": sorted(s.closure)} for s in slices_of_pair(g, p)]
    return io.dumps({"vertices": list(g.labels), "pair": [p.a, p.b], "slices": slices})


def cmd_minimal_slice(args) -> str:
    _need_json(args, "minimal-slice")
    g = _read_graph(args)
    a = _vertex(g, args.vertex)
    s = minimal_slice_containing(g, a, enumerate_cut_pairs(g))
    return io.dumps(
        {
            "vertices": list(g.labels),
            "vertex": a,
            "boundary": [s.boundary.a, s.boundary.b],
            "interior": sorted(s.interior),
            "closure": sorted(s.closure),
        }
    )


def cmd_block_cut_tree(args) -> str:
    g = _read_graph(args)
    bct = block_cut_tree(g)
    if args.format == "dot":
        return io.block_cut_tree_to_dot(bct, g)
    return io.dumps({"vertices": list(g.labels), **io.block_cut_tree_to_json(bct)})


def cmd_aut(args) -> str:
    _need_json(args, "aut")
    g = _read_graph(args)
    G = automorphisms(g, max_n=args.max_n)
    return io.dumps({"vertices": list(g.labels), "order": len(G), "elements": [list(a.image) for a in G]})


def cmd_gen(args) -> str:
    g = generate(args.kind, *args.params, seed=args.seed)
    if args.format == "edge-list":
        return io.graph_to_edge_list(g)
    if args.format not in (None, "json"):
        raise GraphInputError("gen supports --format json or edge-list")
    # JSON keeps the vertex numbering; an edge list renumbers by first appearance
    return io.dumps(io.graph_to_json(g))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "dot", "edge-list"], default=None, help="output format (default json)")
    common.add_argument("--max-n", type=int, default=MAX_N, help="vertex cap for automorphism search")
    common.add_argument("--seed", type=int, default=None, help="seed for random generators")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", default="-", help="graph file (edge list or JSON); '-' reads stdin")
    source.add_argument("--input-format", choices=["auto", "edge-list", "json"], default="auto")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument(
        "--family", default="orbit", help="orbit (default), all-noncrossing, or a file of vertex pairs"
    )

    parser = argparse.ArgumentParser(prog="slicetree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common, source, family], help="full pipeline report")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("tree", parents=[common, source, family], help="slice tree of a pair family")
    p.set_defaults(func=cmd_tree)
    p = sub.add_parser("cut-pairs", parents=[common, source], help="all 2-vertex cuts")
    p.set_defaults(func=cmd_cut_pairs)
    p = sub.add_parser("slices", parents=[common, source], help="slices of one vertex pair")
    p.add_argument("--pair", nargs=2, metavar=("A", "B"), required=True)
    p.set_defaults(func=cmd_slices)
    p = sub.add_parser("minimal-slice", parents=[common, source], help="minimal slice containing a vertex")
    p.add_argument("--vertex", metavar="A", required=True)
    p.set_defaults(func=cmd_minimal_slice)
    p = sub.add_parser("block-cut-tree", parents=[common, source], help="blocks and cut vertices")
    p.set_defaults(func=cmd_block_cut_tree)
    p = sub.add_parser("aut", parents=[common, source], help="automorphism group")
    p.set_defaults(func=cmd_aut)
    p = sub.add_parser("gen", parents=[common], help=f"generate a graph ({', '.join(KINDS)})")
    p.add_argument("kind", choices=sorted(KINDS))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="slicetree: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (GraphInputError, PreconditionError, CapExceededError) as exc:
        print(f"slicetree: error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"slicetree: verification failed: {exc}", file=sys.stderr)
        if exc.diagnostics is not None:
            print(f"slicetree: witness: {exc.diagnostics}", file=sys.stderr)
        return 3
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

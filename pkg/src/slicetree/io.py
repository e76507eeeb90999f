"""Reading graphs and writing reports, trees and graphs as JSON, DOT or edge lists.

Edge-list format: one edge per line, two whitespace-separated labels, ``#``
starts a comment. JSON format: ``{"vertices": [...], "edges": [[a, b], ...]}``
where ``vertices`` is optional and edges refer to labels. Vertices are
numbered densely in order of first appearance.
"""

from __future__ import annotations

import dataclasses
import json
import logging
from typing import Iterable

from .errors import GraphInputError
from .graph import BlockCutTree, Graph
from .pairtree import PairNode, SliceTree

log = logging.getLogger(__name__)


def _build(edges: Iterable[tuple[str, str, int | None]], vertices: list[str] | None) -> Graph:
    index: dict[str, int] = {}
    labels: list[str] = []
    if vertices is not None:
        for v in vertices:
            if v in index:
                raise GraphInputError(f"vertex {v!r} listed twice")
            index[v] = len(labels)
            labels.append(v)
    pairs = []
    seen = set()
    for a, b, line in edges:
        for x in (a, b):
            if x not in index:
                if vertices is not None:
                    raise GraphInputError(f"edge uses undeclared vertex {x!r}", line)
                index[x] = len(labels)
                labels.append(x)
        u, v = index[a], index[b]
        if u == v:
            raise GraphInputError(f"loop at {a!r} rejected", line)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"multi-edge {a!r} -- {b!r} rejected", line)
        seen.add(key)
        pairs.append((u, v))
    return Graph.from_edges(len(labels), pairs, labels)


def parse_edge_list(text: str) -> Graph:
    def rows():
        for lineno, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0].split()
            if not body:
                continue
            if len(body) != 2:
                raise GraphInputError(f"expected two vertex labels, got {len(body)} tokens", lineno)
            yield body[0], body[1], lineno

    return _build(rows(), None)


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise GraphInputError('JSON graph must be an object with an "edges" list')
    vertices = data.get("vertices")
    if vertices is not None:
        vertices = [str(v) for v in vertices]
    edges = []
    for i, e in enumerate(data["edges"]):
        if not isinstance(e, list) or len(e) != 2:
            raise GraphInputError(f"edge #{i} must be a two-element list")
        edges.append((str(e[0]), str(e[1]), None))
    return _build(edges, vertices)


def ingest(text: str, fmt: str = "auto", max_n: int | None = None) -> Graph:
    """Parse ``text`` as an edge list or JSON; ``auto`` sniffs a leading ``{``."""
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "edge-list"
    if fmt == "json":
        g = parse_json(text)
    elif fmt == "edge-list":
        g = parse_edge_list(text)
    else:
        raise GraphInputError(f"unknown input format {fmt!r}")
    if max_n is not None and g.n > max_n:
        log.warning("graph has %d vertices, above the cap of %d; automorphism search will refuse it", g.n, max_n)
    return g


def graph_to_json(g: Graph) -> dict:
    return {"vertices": list(g.labels), "edges": [[g.labels[u], g.labels[v]] for u, v in g.edge_list()]}


def graph_to_edge_list(g: Graph) -> str:
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edge_list())


def tree_to_json(t: SliceTree | None):
    if t is None:
        return None
    nodes = []
    for node in t.nodes:
        if isinstance(node, PairNode):
            nodes.append({"kind": "pair", "pair": [node.pair.a, node.pair.b]})
        else:
            nodes.append({"kind": "set", "members": [[p.a, p.b] for p in node.vset.members]})
    return {"nodes": nodes, "edges": [list(e) for e in t.edges]}


def block_cut_tree_to_json(bct: BlockCutTree | None):
    if bct is None:
        return None
    return {
        "blocks": [sorted(b) for b in bct.blocks],
        "cut_vertices": list(bct.cut_vertices),
        "edges": [list(e) for e in bct.edges],
    }


def report_to_json(report, tree: SliceTree | None = None, g: Graph | None = None, bct: BlockCutTree | None = None) -> dict:
    out = {}
    if g is not None:
        out["vertices"] = list(g.labels)
    out.update(dataclasses.asdict(report))
    for key, value in out.items():
        if isinstance(value, tuple):
            out[key] = list(value)
    out["tree"] = tree_to_json(tree)
    out["block_cut_tree"] = block_cut_tree_to_json(bct)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _pair_label(g: Graph, p) -> str:
    return "{" + f"{g.labels[p.a]},{g.labels[p.b]}" + "}"


def tree_to_dot(t: SliceTree | None, g: Graph) -> str:
    lines = ["graph slicetree {"]
    if t is not None:
        for i, node in enumerate(t.nodes):
            if isinstance(node, PairNode):
                lines.append(f"  n{i} [shape=box, label={_q(_pair_label(g, node.pair))}];")
            else:
                label = "[" + ", ".join(_pair_label(g, p) for p in node.vset.members) + "]"
                lines.append(f"  n{i} [shape=ellipse, label={_q(label)}];")
        for u, v in t.edges:
            lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def block_cut_tree_to_dot(bct: BlockCutTree, g: Graph) -> str:
    lines = ["graph blockcut {"]
    for i, block in enumerate(bct.blocks):
        label = "{" + ",".join(g.labels[v] for v in sorted(block)) + "}"
        lines.append(f"  b{i} [shape=ellipse, label={_q(label)}];")
    for c in bct.cut_vertices:
        lines.append(f"  c{c} [shape=box, label={_q(g.labels[c])}];")
    for i, c in bct.edges:
        lines.append(f"  b{i} -- c{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"

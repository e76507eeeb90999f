"""End-to-end classification: route the graph, build the family and the tree, check the action."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .errors import VerificationError
from .graph import (
    BlockCutTree,
    CutPair,
    Graph,
    block_cut_tree,
    cut_vertices,
    enumerate_cut_pairs,
    is_connected,
    is_cycle,
)
from .pairtree import (
    PairFamily,
    SliceTree,
    TreeCheck,
    check_incidence,
    incidence_graph,
    path_separator_check,
    verify_tree,
)
from .slices import Slice, family_is_noncrossing, find_inseparable_pair, greedy_noncrossing, minimal_slice_containing, pair_crosses
from .symmetry import (
    MAX_N,
    AutomorphismGroup,
    TreeAction,
    action_on_tree,
    automorphisms,
    edge_stabilizer_check,
    global_fixed_point_check,
    orbit_of_pair,
    setwise_stabilizer,
)

log = logging.getLogger(__name__)

VERDICTS = ("disconnected", "has-cut-point", "circle", "splits-over-pair", "rigid", "degenerate")


@dataclass
class ClassificationReport:
    n: int
    m: int
    connected: bool
    cut_vertices: list = field(default_factory=list)
    two_connected: bool = False
    cycle: bool = False
    cut_pair_count: int = 0
    inseparable_pair: tuple | None = None
    anchor: int | None = None
    minimal_slice: list | None = None
    family_provenance: str | None = None
    family: list | None = None
    noncrossing: bool | None = None
    crossing_witness: list | None = None
    fallback_family: list | None = None
    tree_nodes: int = 0
    tree_edges: int = 0
    tree_check: str | None = None
    path_separator_ok: bool | None = None
    group_order: int | None = None
    acting_group_order: int | None = None
    edge_stabilizer_ok: bool | None = None
    global_fixed_nodes: list | None = None
    verdict: str = "degenerate"
    notes: list = field(default_factory=list)

    def check_consistency(self) -> None:
        """Verdict/field rules; raises AssertionError on a mismatch."""
        v = self.verdict
        assert v in VERDICTS, v
        assert (v == "disconnected") == (not self.connected)
        assert (v == "has-cut-point") == bool(self.connected and self.cut_vertices)
        assert (v == "circle") == self.cycle
        assert (v == "rigid") == (self.two_connected and self.cut_pair_count == 0 and not self.cycle)
        if v == "splits-over-pair":
            assert self.two_connected and self.tree_check == "ok"
            assert len(self.family) >= 2 and self.tree_edges == self.tree_nodes - 1
            assert self.path_separator_ok and self.edge_stabilizer_ok is not False


@dataclass
class PipelineResult:
    report: ClassificationReport
    graph: Graph
    tree: SliceTree | None = None
    family: PairFamily | None = None
    group: AutomorphismGroup | None = None
    block_cut_tree: BlockCutTree | None = None
    minimal_slice: Slice | None = None
    tree_diagnostics: TreeCheck | None = None
    action: TreeAction | None = None


def noncrossing_cut_pairs(g: Graph, cut_pairs: Sequence[CutPair]) -> list[CutPair]:
    """Cut pairs that cross no other cut pair in either direction."""
    return [
        p for p in cut_pairs if not any(q != p and (pair_crosses(g, p, q) or pair_crosses(g, q, p)) for q in cut_pairs)
    ]


def _pairs(ps) -> list:
    return [[p.a, p.b] for p in ps]


def run_pipeline(g: Graph, family: str | Sequence = "orbit", max_n: int = MAX_N) -> PipelineResult:
    """Classify ``g``.

    ``family`` is ``"orbit"`` (orbit of the minimal-slice boundary pair),
    ``"all-noncrossing"`` or a sequence of vertex pairs supplied by the user.
    """
    connected = is_connected(g)
    rep = ClassificationReport(n=g.n, m=g.m, connected=connected)
    res = PipelineResult(rep, g)
    if not connected:
        rep.verdict = "disconnected"
        return res
    rep.cut_vertices = cut_vertices(g)
    if rep.cut_vertices:
        rep.verdict = "has-cut-point"
        res.block_cut_tree = block_cut_tree(g)
        return res
    rep.two_connected = g.n >= 3
    rep.cycle = is_cycle(g)
    if not rep.two_connected:
        rep.verdict = "degenerate"
        rep.notes.append("fewer than 3 vertices")
        return res
    cut_pairs = enumerate_cut_pairs(g) if g.n >= 4 else []
    rep.cut_pair_count = len(cut_pairs)
    if rep.cycle:
        rep.verdict = "circle"
        return res
    if not cut_pairs:
        rep.verdict = "rigid"
        return res

    ins = find_inseparable_pair(g, cut_pairs)
    if ins is not None:
        rep.inseparable_pair = (ins.a, ins.b)
        rep.anchor = ins.a
    else:
        rep.anchor = 0
        rep.notes.append("every nonadjacent pair is separated by a cut pair although the graph is not a cycle; anchoring at vertex 0")
    c = minimal_slice_containing(g, rep.anchor, cut_pairs)
    res.minimal_slice = c
    rep.minimal_slice = sorted(c.closure)

    need_group = family == "orbit"
    G = None
    if need_group or g.n <= max_n:
        G = automorphisms(g, max_n=max_n)
        rep.group_order = len(G)
    else:
        rep.notes.append(f"n = {g.n} exceeds the automorphism cap {max_n}; symmetry checks skipped")

    if family == "orbit":
        S = orbit_of_pair(G, c.boundary)
    elif family == "all-noncrossing":
        S = PairFamily(g, tuple(noncrossing_cut_pairs(g, cut_pairs)), "all-noncrossing")
    else:
        S = PairFamily(g, tuple(family), "user")
    rep.family_provenance = S.provenance
    rep.family = _pairs(S.members)
    ok, witness = family_is_noncrossing(g, S.members)
    rep.noncrossing = ok
    if not ok:
        rep.crossing_witness = _pairs(witness)
        kept = greedy_noncrossing(g, S.members)
        rep.fallback_family = _pairs(kept)
        rep.notes.append(f"family crosses at {witness[0]} / {witness[1]}; using greedy non-crossing subfamily")
        S = PairFamily(g, tuple(kept), S.provenance)
    res.family = S

    if not len(S):
        rep.verdict = "degenerate"
        rep.notes.append("empty family: no splitting tree")
        return res
    t = incidence_graph(g, S)
    check_incidence(t)
    check = verify_tree(t)
    res.tree_diagnostics = check
    rep.tree_check = check.reason
    if check.reason == "cycle":
        raise VerificationError(f"incidence graph has a cycle through nodes {list(check.witness)}", diagnostics=check)
    if not check.ok:
        rep.verdict = "degenerate"
        rep.notes.append(f"incidence graph is a forest ({len(t.nodes)} nodes, {len(t.edges)} edges): no splitting tree")
        return res
    res.tree = t
    rep.tree_nodes, rep.tree_edges = len(t.nodes), len(t.edges)
    ok, failure = path_separator_check(g, S, t)
    rep.path_separator_ok = ok
    if not ok:
        raise VerificationError(f"separator sets disagree with tree paths at {failure[0]}, {failure[1]}", diagnostics=failure)

    if G is not None:
        H = G if rep.fallback_family is None and S.provenance != "user" else setwise_stabilizer(G, S)
        res.group = H
        rep.acting_group_order = len(H)
        action = res.action = action_on_tree(H, S, t)
        ok, failure = edge_stabilizer_check(H, S, t, action)
        rep.edge_stabilizer_ok = ok
        if not ok:
            raise VerificationError(f"element {failure[0]} stabilises edge {failure[1]} without fixing its pair", diagnostics=failure)
        rep.global_fixed_nodes = global_fixed_point_check(H, t, action)

    if len(S) <= 1:
        rep.verdict = "degenerate"
        rep.notes.append("family has a single pair: the tree is one edge")
    else:
        rep.verdict = "splits-over-pair"
    if rep.global_fixed_nodes:
        rep.notes.append("finite model: the action fixes tree nodes, as every finite group acting on a finite tree does")
    return res

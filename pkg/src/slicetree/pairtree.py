"""Separation and adjacency on a family of cut pairs, and the tree they span.

Family members are joined to the maximal sets of pairwise-adjacent members
("vertex sets"); the result is a bipartite incidence graph that must be a
tree. A tripod of three mutually adjacent pairs becomes a star around one
vertex set, and a chain of pairs becomes its barycentric subdivision.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceededError, PreconditionError, VerificationError
from .graph import CutPair, Graph, as_pair
from .slices import slices_of_pair

PROVENANCES = ("orbit", "all-noncrossing", "user")
MAX_FAMILY = 64


@dataclass(frozen=True)
class PairFamily:
    graph: Graph = field(repr=False, compare=False)
    members: tuple
    provenance: str = "user"

    def __post_init__(self):
        members = tuple(sorted(as_pair(p) for p in self.members))
        if len(set(members)) != len(members):
            dup = next(p for i, p in enumerate(members[1:]) if p == members[i])
            raise PreconditionError(f"family members must be distinct; {dup} repeats", witness=dup)
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, p):
        return as_pair(p) in self.members


@dataclass(frozen=True, order=True)
class VertexSet:
    members: tuple

    def __contains__(self, p):
        return p in self.members

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class PairNode:
    pair: CutPair


@dataclass(frozen=True)
class SetNode:
    vset: VertexSet


@dataclass(frozen=True)
class SliceTree:
    """Bipartite incidence graph; ``edges`` hold (PairNode index, SetNode index)."""

    nodes: tuple
    edges: tuple

    def pair_index(self) -> dict:
        return {node.pair: i for i, node in enumerate(self.nodes) if isinstance(node, PairNode)}

    def neighbours(self) -> list[list[int]]:
        adj = [[] for _ in self.nodes]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class TreeCheck:
    ok: bool
    reason: str
    witness: tuple = ()


class _Closures:
    """Slice closures per family member, computed once."""

    def __init__(self, g: Graph, members: Iterable[CutPair]):
        self.g = g
        self._cache = {p: [s.closure for s in slices_of_pair(g, p)] for p in members}

    def separates(self, r: CutPair, p: CutPair, q: CutPair) -> bool:
        if r not in self._cache:
            self._cache[r] = [s.closure for s in slices_of_pair(self.g, r)]
        four = {p.a, p.b, q.a, q.b}
        return not any(four <= c for c in self._cache[r])


def pair_separates_pairs(g: Graph, r, p, q) -> bool:
    """True iff no slice closure of ``r`` holds all four vertices of ``p`` and ``q``."""
    r, p, q = as_pair(r), as_pair(p), as_pair(q)
    if r == p or r == q:
        raise PreconditionError(f"separating pair {r} must differ from {p} and {q}", witness=r)
    return _Closures(g, ()).separates(r, p, q)


def _separators(S: PairFamily, closures: _Closures, p: CutPair, q: CutPair) -> list[CutPair]:
    return [r for r in S.members if r != p and r != q and closures.separates(r, p, q)]


def separator_set(g: Graph, S: PairFamily, p, q) -> list[CutPair]:
    """Members of ``S`` other than ``p``, ``q`` that separate them, sorted."""
    p, q = as_pair(p), as_pair(q)
    for x in (p, q):
        if x not in S:
            raise PreconditionError(f"{x} is not a member of the family", witness=x)
    if p == q:
        raise PreconditionError(f"separator_set needs two distinct members, got {p} twice", witness=p)
    return _separators(S, _Closures(g, S.members), p, q)


def _check_cap(S: PairFamily) -> None:
    if len(S) > MAX_FAMILY:
        raise CapExceededError(f"family has {len(S)} members; the cap is {MAX_FAMILY}")


def adjacency_graph(g: Graph, S: PairFamily) -> dict:
    """Map each member to the sorted tuple of members adjacent to it."""
    _check_cap(S)
    closures = _Closures(g, S.members)
    adj = {p: [] for p in S.members}
    ms = S.members
    for i, p in enumerate(ms):
        for q in ms[i + 1:]:
            if not _separators(S, closures, p, q):
                adj[p].append(q)
                adj[q].append(p)
    return {p: tuple(sorted(v)) for p, v in adj.items()}


def _maximal_cliques(n: int, nbrs: list[set]) -> list[list[int]]:
    # Bron-Kerbosch with Tomita pivoting
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(sorted(r))
            return
        pivot = max(p | x, key=lambda u: len(p & nbrs[u]))
        for v in sorted(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return out


def vertex_sets(g: Graph, S: PairFamily, adjacency: dict | None = None) -> list[VertexSet]:
    """Maximal sets of pairwise-adjacent members, isolated members included."""
    if adjacency is None:
        adjacency = adjacency_graph(g, S)
    ms = list(S.members)
    index = {p: i for i, p in enumerate(ms)}
    nbrs = [{index[q] for q in adjacency[p]} for p in ms]
    cliques = _maximal_cliques(len(ms), nbrs)
    return sorted(VertexSet(tuple(ms[i] for i in c)) for c in cliques)


def incidence_graph(g: Graph, S: PairFamily, sets: Sequence[VertexSet] | None = None) -> SliceTree:
    """The unverified member/vertex-set incidence graph."""
    if sets is None:
        sets = vertex_sets(g, S)
    nodes = [PairNode(p) for p in S.members] + [SetNode(v) for v in sets]
    offset = len(S)
    index = {p: i for i, p in enumerate(S.members)}
    edges = [(index[p], offset + j) for j, v in enumerate(sets) for p in v.members]
    return SliceTree(tuple(nodes), tuple(sorted(edges)))


def _find_cycle(adj: list[list[int]]) -> tuple:
    parent = [-2] * len(adj)
    for root in range(len(adj)):
        if parent[root] != -2:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w == parent[v]:
                    continue
                if parent[w] == -2:
                    parent[w] = v
                    stack.append(w)
                else:
                    # v and w are both reached: splice their root paths
                    pv, pw = [v], [w]
                    while pv[-1] != -1:
                        pv.append(parent[pv[-1]])
                    while pw[-1] != -1:
                        pw.append(parent[pw[-1]])
                    common = set(pv) & set(pw)
                    pv = pv[: next(i for i, x in enumerate(pv) if x in common) + 1]
                    pw = pw[: next(i for i, x in enumerate(pw) if x in common)]
                    return tuple(pv + pw[::-1])
    return ()


def verify_tree(t: SliceTree) -> TreeCheck:
    """Connected with |edges| = |nodes| - 1; otherwise name a cycle or a cut-off node."""
    n = len(t.nodes)
    if n == 0:
        return TreeCheck(False, "empty")
    adj = t.neighbours()
    seen = {0}
    queue = deque([0])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    multi = len(set(map(tuple, map(sorted, t.edges)))) != len(t.edges)
    if len(t.edges) != n - 1 or multi:
        cycle = _find_cycle(adj)
        if cycle or multi:
            return TreeCheck(False, "cycle", cycle)
    if len(seen) != n:
        other = next(v for v in range(n) if v not in seen)
        return TreeCheck(False, "disconnected", (0, other))
    return TreeCheck(True, "ok")


def _tree_path(adj: list[list[int]], src: int, dst: int) -> list[int]:
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for w in adj[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def check_incidence(t: SliceTree) -> None:
    """Every edge joins a PairNode to a SetNode containing its pair."""
    for u, v in t.edges:
        a, b = t.nodes[u], t.nodes[v]
        if not (isinstance(a, PairNode) and isinstance(b, SetNode) and a.pair in b.vset):
            raise VerificationError(f"edge ({u}, {v}) is not a pair-in-set incidence", diagnostics=(u, v))


def build_tree(g: Graph, S: PairFamily) -> SliceTree:
    """Assemble and certify the slice tree of ``S``.

    Raises VerificationError carrying the TreeCheck witness when the
    incidence graph is not a tree.
    """
    if not len(S):
        raise PreconditionError("build_tree needs a nonempty family")
    t = incidence_graph(g, S)
    check_incidence(t)
    check = verify_tree(t)
    if not check.ok:
        raise VerificationError(f"incidence graph is not a tree ({check.reason})", diagnostics=check)
    return t


def path_separator_check(g: Graph, S: PairFamily, t: SliceTree):
    """Separator sets must be exactly the pair nodes strictly inside tree paths.

    Returns ``(True, None)`` or ``(False, (p, q, separators, between))`` for
    the first mismatch.
    """
    if not verify_tree(t).ok:
        raise PreconditionError("path_separator_check needs a verified tree")
    closures = _Closures(g, S.members)
    adj = t.neighbours()
    where = t.pair_index()
    ms = S.members
    for i, p in enumerate(ms):
        for q in ms[i + 1:]:
            path = _tree_path(adj, where[p], where[q])
            between = sorted(t.nodes[k].pair for k in path[1:-1] if isinstance(t.nodes[k], PairNode))
            seps = _separators(S, closures, p, q)
            if seps != between:
                return False, (p, q, seps, between)
    return True, None

"""Finite simple graphs and exact connectivity primitives.

A graph plays the role of the continuum: vertices are points, "connected"
means connected in the induced subgraph, and the closure of a vertex set adds
every deleted vertex that has a neighbour in it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import GraphInputError, PreconditionError

# Re-check every ComponentPartition as it is produced (the test suite turns this on).
CHECK_INVARIANTS = bool(os.environ.get("SLICETREE_CHECK_INVARIANTS"))


@dataclass(frozen=True, order=True)
class CutPair:
    """Unordered vertex pair stored as ``a < b``."""

    a: int
    b: int

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"CutPair needs a < b, got ({self.a}, {self.b})")

    @classmethod
    def of(cls, x: int, y: int) -> "CutPair":
        if x == y:
            raise PreconditionError(f"pair members must differ, got {x} twice", witness=x)
        return cls(x, y) if x < y else cls(y, x)

    @property
    def members(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __iter__(self):
        yield self.a
        yield self.b

    def __contains__(self, v) -> bool:
        return v == self.a or v == self.b

    def __repr__(self) -> str:
        return f"{{{self.a},{self.b}}}"


def as_pair(p) -> CutPair:
    """Accept a CutPair or any 2-sequence of vertex ids."""
    if isinstance(p, CutPair):
        return p
    x, y = p
    return CutPair.of(int(x), int(y))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    adjacency: tuple = field(repr=False)
    labels: tuple = field(default=(), compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> "Graph":
        """Build a graph on vertices ``0..n-1``; loops and repeated edges are rejected."""
        if n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        nbrs = [[] for _ in range(n)]
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u} rejected")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphInputError(f"multi-edge {key} rejected")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        if labels is None:
            labels = tuple(str(v) for v in range(n))
        elif len(labels) != n:
            raise GraphInputError(f"{len(labels)} labels for {n} vertices")
        return cls(n, frozenset(seen), tuple(tuple(sorted(x)) for x in nbrs), tuple(str(x) for x in labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter((w for a in self.adjacency for w in a), dtype=np.int32, count=int(indptr[-1]))
        return indptr, indices

    @cached_property
    def matrix(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges:
            adj[u, v] = adj[v, u] = 1
        return adj


@dataclass(frozen=True)
class ComponentPartition:
    removed: frozenset
    parts: tuple  # of frozensets, ordered by smallest vertex

    def part_of(self, v: int) -> int:
        """Index of the part holding ``v``; -1 for removed vertices."""
        for i, part in enumerate(self.parts):
            if v in part:
                return i
        if v in self.removed:
            return -1
        raise KeyError(v)


def _check_vertices(g: Graph, vs: Iterable[int]) -> frozenset:
    out = frozenset(int(v) for v in vs)
    bad = sorted(v for v in out if not 0 <= v < g.n)
    if bad:
        raise GraphInputError(f"unknown vertex id {bad[0]} (graph has {g.n} vertices)")
    return out


def _label_array(g: Graph, removed: frozenset) -> tuple[np.ndarray, int]:
    mask = np.zeros(g.n, dtype=np.uint8)
    for v in removed:
        mask[v] = 1
    indptr, indices = g.csr
    return _kernels.active.component_labels(indptr, indices, mask)


def _assert_partition(g: Graph, cp: ComponentPartition) -> None:
    union = set()
    for part in cp.parts:
        assert part and not (union & part), "parts must be nonempty and disjoint"
        union |= part
        # connected inside the induced subgraph
        start = min(part)
        seen, stack = {start}, [start]
        while stack:
            for w in g.adjacency[stack.pop()]:
                if w in part and w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert seen == part, "part not induced-connected"
    assert union == set(range(g.n)) - cp.removed, "parts must cover the surviving vertices"
    where = {v: i for i, part in enumerate(cp.parts) for v in part}
    for u, v in g.edges:
        if u in where and v in where:
            assert where[u] == where[v], f"edge {u}-{v} joins two parts"
    mins = [min(p) for p in cp.parts]
    assert mins == sorted(mins), "parts must be ordered by smallest vertex"


def components(g: Graph, removed: Iterable[int] = ()) -> ComponentPartition:
    """Connected components of ``g`` with the ``removed`` vertices deleted."""
    gone = _check_vertices(g, removed)
    labels, count = _label_array(g, gone)
    buckets = [[] for _ in range(count)]
    for v, lab in enumerate(labels.tolist()):
        if lab >= 0:
            buckets[lab].append(v)
    cp = ComponentPartition(gone, tuple(frozenset(b) for b in buckets))
    if CHECK_INVARIANTS:
        _assert_partition(g, cp)
    return cp


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _label_array(g, frozenset())[1] == 1


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        parts = components(g).parts
        raise PreconditionError(
            f"{what} needs a connected graph; vertices {min(parts[0])} and {min(parts[1])} are disconnected",
            witness=(min(parts[0]), min(parts[1])),
        )


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose removal disconnects ``g`` (sorted)."""
    _require_connected(g, "cut_vertices")
    indptr, indices = g.csr
    return list(_kernels.active.articulation_points(indptr, indices, -1))


@dataclass(frozen=True)
class BlockCutTree:
    """Bipartite tree of blocks (2-connected pieces or bridges) and cut vertices."""

    blocks: tuple  # frozensets of vertices, sorted by their sorted tuples
    cut_vertices: tuple
    edges: tuple  # (block index, cut vertex)

    @property
    def node_count(self) -> int:
        return len(self.blocks) + len(self.cut_vertices)


def _biconnected_blocks(g: Graph) -> list[frozenset]:
    disc = [-1] * g.n
    low = [0] * g.n
    blocks = []
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adjacency[root]:
            blocks.append(frozenset([root]))
            disc[root] = clock
            clock += 1
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack = []
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block = set()
                while True:
                    x, y = edge_stack.pop()
                    block.update((x, y))
                    if (x, y) == (u, v):
                        break
                blocks.append(frozenset(block))
    return blocks


def block_cut_tree(g: Graph) -> BlockCutTree:
    _require_connected(g, "block_cut_tree")
    blocks = sorted(_biconnected_blocks(g), key=lambda b: sorted(b))
    cuts = cut_vertices(g)
    edges = tuple((i, c) for c in cuts for i, b in enumerate(blocks) if c in b)
    return BlockCutTree(tuple(blocks), tuple(cuts), tuple(sorted(edges, key=lambda e: (e[0], e[1]))))


def enumerate_cut_pairs(g: Graph) -> list[CutPair]:
    """All 2-vertex cuts of a 2-connected graph with at least 4 vertices, sorted."""
    if g.n < 4:
        raise PreconditionError(f"cut-pair enumeration needs n >= 4, got n = {g.n}", witness=g.n)
    _require_connected(g, "enumerate_cut_pairs")
    cuts = cut_vertices(g)
    if cuts:
        raise PreconditionError(f"graph is not 2-connected: {cuts[0]} is a cut vertex", witness=cuts[0])
    indptr, indices = g.csr
    return [CutPair(a, b) for a, b in _kernels.active.cut_pairs(indptr, indices)]


def separates(g: Graph, p, a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` lie in different components of ``g - p``."""
    p = as_pair(p)
    _check_vertices(g, (a, b, p.a, p.b))
    if a in p or b in p:
        raise PreconditionError(f"vertices {a}, {b} must avoid the pair {p}", witness=(a, b))
    labels, _ = _label_array(g, frozenset(p.members))
    return bool(labels[a] != labels[b])


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(a) == 2 for a in g.adjacency) and is_connected(g)

"""Graph automorphisms standing in for the group, and their action on the slice tree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import CapExceededError, VerificationError
from .graph import CutPair, Graph
from .pairtree import PairFamily, PairNode, SliceTree, VertexSet

MAX_N = 12
MAX_ORDER = 100_000
FULL_CLOSURE_ORDER = 5000
CLOSURE_SAMPLE = 64


@dataclass(frozen=True)
class Automorphism:
    image: tuple

    def __call__(self, v: int) -> int:
        return self.image[v]

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self`` after ``other``."""
        return Automorphism(tuple(self.image[x] for x in other.image))

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Automorphism(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.image))

    def on_pair(self, p: CutPair) -> CutPair:
        return CutPair.of(self.image[p.a], self.image[p.b])


@dataclass(frozen=True)
class AutomorphismGroup:
    graph: Graph = field(repr=False, compare=False)
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @classmethod
    def trivial(cls, g: Graph) -> "AutomorphismGroup":
        return cls(g, (Automorphism(tuple(range(g.n))),))


def refine_colours(g: Graph) -> list[int]:
    """Stable colour refinement starting from degrees; automorphisms preserve it."""
    colours = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colours[v], tuple(sorted(colours[w] for w in g.neighbors(v)))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colours)):
            return new
        colours = new


def _search_order(g: Graph, colours: list[int]) -> list[int]:
    # BFS from the rarest colour keeps each new vertex tied to an assigned one
    size = {}
    for c in colours:
        size[c] = size.get(c, 0) + 1
    order, seen = [], set()
    for start in sorted(range(g.n), key=lambda v: (size[colours[v]], v)):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.neighbors(v), key=lambda u: (size[colours[u]], u)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _keys(rows: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(n, dtype=np.int64)
    return rows.astype(np.int64) @ weights


def _verify_group(g: Graph, perms: np.ndarray) -> None:
    k, n = perms.shape
    if k == 0 or not np.array_equal(perms[0], np.arange(n)):
        raise VerificationError("identity missing from automorphism list")
    edges = np.array(sorted(g.edges), dtype=np.int64).reshape(-1, 2)
    if len(edges):
        mapped = np.sort(perms[:, edges], axis=2)  # k x m x 2
        ekeys = np.sort(edges[:, 0] * n + edges[:, 1])
        mkeys = np.sort(mapped[..., 0] * n + mapped[..., 1], axis=1)
        if not (mkeys == ekeys).all():
            raise VerificationError("an enumerated permutation does not preserve the edge set")
    if n == 0:
        return
    if n > 15:
        table = {tuple(r) for r in perms.tolist()}
        for a in perms.tolist():
            if tuple(sorted(range(n), key=a.__getitem__)) not in table:
                raise VerificationError("automorphisms not closed under inverse")
            for b in perms.tolist():
                if tuple(a[x] for x in b) not in table:
                    raise VerificationError("automorphisms not closed under composition")
        return
    known = np.sort(_keys(perms, n))
    inverses = np.argsort(perms, axis=1)
    if not np.isin(_keys(inverses, n), known).all():
        raise VerificationError("automorphisms not closed under inverse")
    right = np.arange(k)
    if k > FULL_CLOSURE_ORDER:
        right = np.sort(np.random.default_rng(0).choice(k, size=CLOSURE_SAMPLE, replace=False))
    # key(a after b) = sum_y a[y] * w[b^-1(y)]: one matrix product per block of b's;
    # closure holds iff every column, sorted, is exactly the key list
    weights = n ** np.arange(n, dtype=np.int64)
    exact_float = float(n) ** n < 2.0**53
    left = perms.astype(np.float64 if exact_float else np.int64)
    step = max(1, 2_000_000 // k)
    for lo in range(0, len(right), step):
        cols = weights[inverses[right[lo:lo + step]]].T  # n x blk
        keys = left @ (cols.astype(np.float64) if exact_float else cols)
        if not (np.sort(keys, axis=0).astype(np.int64) == known[:, None]).all():
            raise VerificationError("automorphisms not closed under composition")


def automorphisms(g: Graph, max_n: int = MAX_N, max_order: int = MAX_ORDER) -> AutomorphismGroup:
    """Full automorphism group by colour-refined backtracking.

    Identity first, the rest sorted by image array. Closure under
    composition and inverse is verified before returning.
    """
    if g.n > max_n:
        raise CapExceededError(f"automorphism search capped at n = {max_n}; graph has n = {g.n}")
    colours = refine_colours(g)
    order = _search_order(g, colours)
    found = _kernels.active.automorphisms(
        np.ascontiguousarray(g.matrix),
        np.asarray(colours, dtype=np.int32),
        np.asarray(order, dtype=np.int32),
        max_order,
    )
    if len(found) > max_order:
        raise CapExceededError(f"automorphism group has more than {max_order} elements")
    ident = tuple(range(g.n))
    rest = sorted(p for p in found if p != ident)
    perms = np.array([ident] + rest, dtype=np.int64).reshape(len(rest) + 1, g.n)
    _verify_group(g, perms)
    return AutomorphismGroup(g, tuple(Automorphism(tuple(p)) for p in [ident] + rest))


def orbit_of_pair(G: AutomorphismGroup, p: CutPair) -> PairFamily:
    return PairFamily(G.graph, tuple({a.on_pair(p) for a in G}), "orbit")


def setwise_stabilizer(G: AutomorphismGroup, S: PairFamily) -> AutomorphismGroup:
    """Automorphisms mapping the family onto itself."""
    members = set(S.members)
    keep = tuple(a for a in G if all(a.on_pair(p) in members for p in members))
    return AutomorphismGroup(G.graph, keep)


def _image_set(a: Automorphism, v: VertexSet) -> VertexSet:
    return VertexSet(tuple(sorted(a.on_pair(p) for p in v.members)))


@dataclass(frozen=True)
class TreeAction:
    """``perms[i][node]`` is the image of ``node`` under group element ``i``."""

    group: AutomorphismGroup = field(repr=False)
    perms: tuple

    def image(self, element: int, node: int) -> int:
        return self.perms[element][node]


def action_on_tree(G: AutomorphismGroup, S: PairFamily, t: SliceTree) -> TreeAction:
    """Induced permutation of tree nodes; verified to preserve the edge set."""
    members = set(S.members)
    index = {}
    for i, node in enumerate(t.nodes):
        index[node.pair if isinstance(node, PairNode) else node.vset] = i
    edges = {frozenset(e) for e in t.edges}
    perms = []
    for k, a in enumerate(G):
        perm = []
        for node in t.nodes:
            if isinstance(node, PairNode):
                img = a.on_pair(node.pair)
                if img not in members:
                    raise VerificationError(
                        f"family not closed under the action: {node.pair} maps to {img}", diagnostics=(k, node.pair)
                    )
            else:
                img = _image_set(a, node.vset)
                if img not in index:
                    raise VerificationError(
                        f"image of vertex set {node.vset.members} is not a vertex set", diagnostics=(k, node.vset)
                    )
            perm.append(index[img])
        if len(set(perm)) != len(perm):
            raise VerificationError(f"element {k} does not permute the tree nodes", diagnostics=k)
        for u, v in t.edges:
            if frozenset((perm[u], perm[v])) not in edges:
                raise VerificationError(f"element {k} maps edge ({u}, {v}) off the tree", diagnostics=(k, (u, v)))
        perms.append(tuple(perm))
    return TreeAction(G, tuple(perms))


def edge_stabilizer(action: TreeAction, edge: tuple[int, int]) -> list[int]:
    """Indices of the group elements mapping ``edge`` to itself (as a node set)."""
    target = frozenset(edge)
    return [k for k, perm in enumerate(action.perms) if frozenset(perm[x] for x in edge) == target]


def edge_stabilizer_check(G: AutomorphismGroup, S: PairFamily, t: SliceTree, action: TreeAction | None = None):
    """Every element stabilising an edge fixes that edge's vertex pair setwise.

    Returns ``(True, None)`` or ``(False, (element index, edge))``.
    """
    if action is None:
        action = action_on_tree(G, S, t)
    elements = G.elements
    for u, v in t.edges:
        pair_end = u if isinstance(t.nodes[u], PairNode) else v
        pair = t.nodes[pair_end].pair
        for k in edge_stabilizer(action, (u, v)):
            if action.perms[k][pair_end] != pair_end or elements[k].on_pair(pair) != pair:
                return False, (k, (u, v))
    return True, None


def global_fixed_point_check(G: AutomorphismGroup, t: SliceTree, action: TreeAction | None = None) -> list[int]:
    """Tree nodes fixed by every group element.

    A finite group acting on a finite tree always fixes a node or an edge, so
    for finite models this list is usually nonempty; callers report it rather
    than read a splitting off it.
    """
    if action is None:
        pairs = tuple(n.pair for n in t.nodes if isinstance(n, PairNode))
        action = action_on_tree(G, PairFamily(G.graph, pairs, "user"), t)
    return [i for i in range(len(t.nodes)) if all(perm[i] == i for perm in action.perms)]

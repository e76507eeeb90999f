"""Naive reference implementations used as ground truth in tests.

Nothing here calls into ``graph``'s connectivity code or the kernels: the
functions read only ``g.n`` and ``g.edges`` and work by brute force.
"""

from __future__ import annotations

from itertools import combinations

from .graph import ComponentPartition, CutPair, Graph


def naive_components(g: Graph, removed=()) -> ComponentPartition:
    """Components by label propagation: every vertex takes the least label it can see."""
    gone = frozenset(removed)
    for v in gone:
        if not 0 <= v < g.n:
            raise ValueError(f"unknown vertex id {v}")
    label = {v: v for v in range(g.n) if v not in gone}
    live = [(u, v) for u, v in g.edges if u not in gone and v not in gone]
    changed = True
    while changed:
        changed = False
        for u, v in live:
            lo = min(label[u], label[v])
            if label[u] != lo or label[v] != lo:
                label[u] = label[v] = lo
                changed = True
    groups: dict[int, set] = {}
    for v, lab in label.items():
        groups.setdefault(lab, set()).add(v)
    parts = sorted((frozenset(s) for s in groups.values()), key=min)
    return ComponentPartition(gone, tuple(parts))


def naive_cut_pairs(g: Graph) -> list[CutPair]:
    return [CutPair(a, b) for a, b in combinations(range(g.n), 2) if len(naive_components(g, {a, b}).parts) >= 2]


def naive_tree_check(nodes, edges) -> bool:
    """Connected by exhaustive path search and exactly |V| - 1 edges."""
    nodes = list(nodes)
    if not nodes:
        return False
    edges = [tuple(e) for e in edges]
    if len(edges) != len(nodes) - 1:
        return False
    reached = {nodes[0]}
    grew = True
    while grew:
        grew = False
        for u, v in edges:
            if (u in reached) != (v in reached):
                reached.update((u, v))
                grew = True
    return reached == set(nodes)

"""Pure-Python kernels.

Same signatures and results as the compiled ``_ckernels`` module. Graphs are
passed in CSR form (``indptr``, ``indices``) with sorted neighbour lists.
"""

from __future__ import annotations

import numpy as np


def component_labels(indptr, indices, removed):
    """Label the components of the graph minus the ``removed`` mask.

    Returns ``(labels, count)``. Removed vertices get label -1; components are
    numbered in order of their smallest vertex.
    """
    ptr = indptr.tolist()
    nbr = indices.tolist()
    gone = removed.tolist()
    n = len(ptr) - 1
    labels = [-1] * n
    count = 0
    for root in range(n):
        if gone[root] or labels[root] != -1:
            continue
        labels[root] = count
        stack = [root]
        while stack:
            v = stack.pop()
            for i in range(ptr[v], ptr[v + 1]):
                w = nbr[i]
                if labels[w] == -1 and not gone[w]:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return np.asarray(labels, dtype=np.int32), count


def _articulation(ptr, nbr, n, skip):
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_ap = [False] * n
    clock = 0
    for root in range(n):
        if root == skip or disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [[root, ptr[root]]]
        while stack:
            frame = stack[-1]
            v, i = frame
            if i < ptr[v + 1]:
                frame[1] = i + 1
                w = nbr[i]
                if w == skip:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append([w, ptr[w]])
                elif w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if u != root and low[v] >= disc[u]:
                        is_ap[u] = True
        if root_children >= 2:
            is_ap[root] = True
    return [v for v in range(n) if is_ap[v]]


def articulation_points(indptr, indices, skip=-1):
    """Sorted cut vertices of the graph with vertex ``skip`` deleted (-1: none)."""
    n = len(indptr) - 1
    return _articulation(indptr.tolist(), indices.tolist(), n, skip)


def cut_pairs(indptr, indices):
    """All pairs ``(a, b)``, ``a < b``, that are articulation points of each other's deletion.

    On a 2-connected graph these are exactly the 2-vertex cuts, in
    lexicographic order.
    """
    ptr = indptr.tolist()
    nbr = indices.tolist()
    n = len(ptr) - 1
    out = []
    for a in range(n):
        for b in _articulation(ptr, nbr, n, a):
            if b > a:
                out.append((a, b))
    return out


def automorphisms(adj, colors, order, max_count):
    """Backtracking search for all colour-preserving automorphisms.

    ``adj`` is a dense 0/1 matrix, ``order`` the vertex search order. Stops
    after ``max_count + 1`` results so callers can detect overflow.
    """
    n = adj.shape[0]
    a = adj.tolist()
    col = colors.tolist()
    seq = order.tolist()
    img = [-1] * n
    used = [False] * n
    found = []

    def extend(k):
        if k == n:
            found.append(tuple(img))
            return len(found) > max_count
        v = seq[k]
        row_v = a[v]
        for w in range(n):
            if used[w] or col[w] != col[v]:
                continue
            row_w = a[w]
            ok = True
            for j in range(k):
                u = seq[j]
                if row_v[u] != row_w[img[u]]:
                    ok = False
                    break
            if not ok:
                continue
            img[v] = w
            used[w] = True
            stop = extend(k + 1)
            used[w] = False
            img[v] = -1
            if stop:
                return True
        return False

    if n:
        extend(0)
    else:
        found.append(())
    return found

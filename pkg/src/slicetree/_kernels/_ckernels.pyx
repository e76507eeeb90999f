# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; drop-in replacement for ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


def component_labels(const int[::1] indptr, const int[::1] indices,
                     const unsigned char[::1] removed):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    labels_arr = np.full(n, -1, dtype=np.int32)
    cdef int[::1] labels = labels_arr
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    cdef int count = 0, top, v, w, root, i
    if stack == NULL:
        raise MemoryError()
    try:
        for root in range(n):
            if removed[root] or labels[root] != -1:
                continue
            labels[root] = count
            stack[0] = root
            top = 1
            while top:
                top -= 1
                v = stack[top]
                for i in range(indptr[v], indptr[v + 1]):
                    w = indices[i]
                    if labels[w] == -1 and not removed[w]:
                        labels[w] = count
                        stack[top] = w
                        top += 1
            count += 1
    finally:
        free(stack)
    return labels_arr, count


cdef int _articulation(const int[::1] indptr, const int[::1] indices, int n,
                       int skip, int *disc, int *low, int *parent,
                       int *pos, int *stack, unsigned char *is_ap) nogil:
    cdef int clock = 0, top, root, root_children, v, w, u, i
    for i in range(n):
        disc[i] = -1
        is_ap[i] = 0
    for root in range(n):
        if root == skip or disc[root] != -1:
            continue
        disc[root] = clock
        low[root] = clock
        clock += 1
        parent[root] = -1
        root_children = 0
        stack[0] = root
        pos[root] = indptr[root]
        top = 1
        while top:
            v = stack[top - 1]
            i = pos[v]
            if i < indptr[v + 1]:
                pos[v] = i + 1
                w = indices[i]
                if w == skip:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = clock
                    low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    pos[w] = indptr[w]
                    stack[top] = w
                    top += 1
                elif w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                top -= 1
                if top:
                    u = stack[top - 1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if u != root and low[v] >= disc[u]:
                        is_ap[u] = 1
        if root_children >= 2:
            is_ap[root] = 1
    return 0


cdef class _Workspace:
    cdef int *disc
    cdef int *low
    cdef int *parent
    cdef int *pos
    cdef int *stack
    cdef unsigned char *is_ap

    def __cinit__(self, int n):
        cdef int m = n + 1
        self.disc = <int *> malloc(m * sizeof(int))
        self.low = <int *> malloc(m * sizeof(int))
        self.parent = <int *> malloc(m * sizeof(int))
        self.pos = <int *> malloc(m * sizeof(int))
        self.stack = <int *> malloc(m * sizeof(int))
        self.is_ap = <unsigned char *> malloc(m)
        if (self.disc == NULL or self.low == NULL or self.parent == NULL
                or self.pos == NULL or self.stack == NULL or self.is_ap == NULL):
            raise MemoryError()

    def __dealloc__(self):
        free(self.disc)
        free(self.low)
        free(self.parent)
        free(self.pos)
        free(self.stack)
        free(self.is_ap)


def articulation_points(const int[::1] indptr, const int[::1] indices, int skip=-1):
    cdef int n = indptr.shape[0] - 1
    cdef _Workspace ws = _Workspace(n)
    cdef int v
    _articulation(indptr, indices, n, skip, ws.disc, ws.low, ws.parent,
                  ws.pos, ws.stack, ws.is_ap)
    return [v for v in range(n) if ws.is_ap[v]]


def cut_pairs(const int[::1] indptr, const int[::1] indices):
    cdef int n = indptr.shape[0] - 1
    cdef _Workspace ws = _Workspace(n)
    cdef int a, b
    out = []
    for a in range(n):
        _articulation(indptr, indices, n, a, ws.disc, ws.low, ws.parent,
                      ws.pos, ws.stack, ws.is_ap)
        for b in range(a + 1, n):
            if ws.is_ap[b]:
                out.append((a, b))
    return out


def automorphisms(const unsigned char[:, ::1] adj, const int[::1] colors,
                  const int[::1] order, Py_ssize_t max_count):
    cdef int n = adj.shape[0]
    cdef int *img
    cdef int *used
    cdef int *cand
    cdef int k, v, w, j, u, ok
    found = []
    if n == 0:
        return [()]
    img = <int *> malloc(n * sizeof(int))
    used = <int *> malloc(n * sizeof(int))
    cand = <int *> malloc(n * sizeof(int))
    if img == NULL or used == NULL or cand == NULL:
        free(img)
        free(used)
        free(cand)
        raise MemoryError()
    try:
        for j in range(n):
            img[j] = -1
            used[j] = 0
            cand[j] = 0
        k = 0
        while k >= 0:
            v = order[k]
            if img[v] != -1:
                used[img[v]] = 0
                img[v] = -1
            w = cand[k]
            while w < n:
                if not used[w] and colors[w] == colors[v]:
                    ok = 1
                    for j in range(k):
                        u = order[j]
                        if adj[v, u] != adj[w, img[u]]:
                            ok = 0
                            break
                    if ok:
                        break
                w += 1
            if w == n:
                cand[k] = 0
                k -= 1
                continue
            cand[k] = w + 1
            img[v] = w
            used[w] = 1
            if k == n - 1:
                found.append(tuple([img[j] for j in range(n)]))
                if len(found) > max_count:
                    break
            else:
                k += 1
    finally:
        free(img)
        free(used)
        free(cand)
    return found

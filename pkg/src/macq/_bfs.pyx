# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled all-pairs BFS over a CSR digraph; same contract as ``_bfs_py``."""
import numpy as np
cimport numpy as cnp


def all_pairs_bfs(int n, indptr, indices, mask=None):
    cdef cnp.int32_t[:] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef cnp.int32_t[:] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef Py_ssize_t m = ix.shape[0]
    cdef cnp.uint8_t[:] keep
    if mask is None:
        keep = np.ones(m, dtype=np.uint8)
    else:
        keep = np.ascontiguousarray(mask, dtype=np.uint8)
    dist_arr = np.full((n, n), -1, dtype=np.int32)
    parent_arr = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.int32_t[:, :] dist = dist_arr
    cdef cnp.int32_t[:, :] parent = parent_arr
    cdef cnp.int32_t[:] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int s, head, tail, u, v, e, du
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u] + 1
            for e in range(ip[u], ip[u + 1]):
                if not keep[e]:
                    continue
                v = ix[e]
                if dist[s, v] < 0:
                    dist[s, v] = du
                    parent[s, v] = e
                    queue[tail] = v
                    tail += 1
    return dist_arr, parent_arr

"""Pure-Python all-pairs BFS over a CSR digraph (fallback for ``_bfs``)."""
import numpy as np


def all_pairs_bfs(n, indptr, indices, mask=None):
    """Distances and parent edges from every source.

    ``dist[s, v]`` is -1 when v is unreachable; ``parent[s, v]`` is the CSR
    position of the edge through which v was first reached.  Sources are
    scanned in edge order so the resulting BFS tree is deterministic.
    """
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    keep = None if mask is None else [bool(x) for x in mask]
    dist = np.full((n, n), -1, dtype=np.int32)
    parent = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        d = [-1] * n
        p = [-1] * n
        d[s] = 0
        queue = [s]
        for u in queue:
            du = d[u] + 1
            for e in range(indptr[u], indptr[u + 1]):
                if keep is not None and not keep[e]:
                    continue
                v = indices[e]
                if d[v] < 0:
                    d[v] = du
                    p[v] = e
                    queue.append(v)
        dist[s] = d
        parent[s] = p
    return dist, parent

"""Compare the compiled and pure-Python all-pairs BFS on quantum Bruhat graphs.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from macq import _bfs_py
from macq.qbg import build_qbg
from macq.rootdata import build_root_datum

try:
    from macq import _bfs
except ImportError:
    _bfs = None

CASES = [("B3", ()), ("A4", ()), ("A4", (2,)), ("C4", ()), ("F4", ())]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _bfs is None:
        print("compiled kernel not built; only the Python timings are shown")
    print(f"{'graph':<10}{'|V|':>6}{'|E|':>8}{'python s':>12}{'cython s':>12}{'speedup':>9}")
    for t, S in CASES:
        g = build_qbg(build_root_datum(t[0], int(t[1:])), S)
        indptr, indices, _ = g._csr
        n = len(g.vertices)
        py = min(timeit.repeat(lambda: _bfs_py.all_pairs_bfs(n, indptr, indices),
                               number=1, repeat=args.repeat))
        label = t + (f"/{','.join(map(str, S))}" if S else "")
        if _bfs is None:
            print(f"{label:<10}{n:>6}{len(indices):>8}{py:>12.4f}")
            continue
        cy = min(timeit.repeat(lambda: _bfs.all_pairs_bfs(n, indptr, indices),
                               number=1, repeat=args.repeat))
        a, b = _bfs_py.all_pairs_bfs(n, indptr, indices), _bfs.all_pairs_bfs(n, indptr, indices)
        assert all(np.array_equal(x, y) for x, y in zip(a, b))
        print(f"{label:<10}{n:>6}{len(indices):>8}{py:>12.4f}{cy:>12.4f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()

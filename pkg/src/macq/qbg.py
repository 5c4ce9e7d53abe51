"""Quantum Bruhat graphs, full and parabolic.

Edges ``u -> floor(u s_b)`` labelled by positive roots ``b`` outside the
parabolic subsystem.  A Bruhat edge raises length by one; a quantum edge
lowers it by ``2<rho - rho_S, b^vee> - 1`` and carries weight ``b^vee``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import ArgumentError, InternalConsistencyError
from .rootdata import Coroot, Root, Weight

BRUHAT = "bruhat"
QUANTUM = "quantum"


class QbgEdge(NamedTuple):
    source: object
    target: object
    label: Root
    kind: str


class Qbg:
    """Quantum Bruhat graph on W^S (S empty gives the full graph)."""

    def __init__(self, datum, S=()):
        self.datum = D = datum
        self.S = S = frozenset(S)
        self.W = W = datum.weyl
        self.vertices = W.min_reps(S)
        self.labels = D.positive_roots_outside(S)
        self.vertex_pos = {v: k for k, v in enumerate(self.vertices)}
        shift = D.rho - D.rho_of(S)
        edges, out = [], {v: [] for v in self.vertices}
        for u in self.vertices:
            for b in self.labels:
                v = W.floor(u * W.reflection(b), S)
                if v.length == u.length + 1:
                    kind = BRUHAT
                elif v.length == u.length - 2 * D.pair(shift, D.coroot(b)) + 1:
                    kind = QUANTUM
                else:
                    continue
                e = QbgEdge(u, v, b, kind)
                edges.append(e)
                out[u].append(e)
        self.edges = edges
        self.out = out
        self._by_label = {(e.source, e.label): e for e in edges}

    def __repr__(self):
        return f"Qbg({self.datum.name}, S={sorted(self.S)}, {len(self.edges)} edges)"

    def edge(self, u, label):
        return self._by_label.get((u, Root(label)))

    def edge_weight(self, e):
        return self.datum.coroot(e.label) if e.kind == QUANTUM else self.datum.zero_coroot()

    def project(self, w):
        return self.W.floor(w, self.S)

    @cached_property
    def _csr(self):
        pos = self.vertex_pos
        indptr, indices, flat = [0], [], []
        for u in self.vertices:
            for e in self.out[u]:
                indices.append(pos[e.target])
                flat.append(e)
            indptr.append(len(indices))
        return np.array(indptr, dtype=np.int32), np.array(indices, dtype=np.int32), flat

    @cached_property
    def _apsp(self):
        indptr, indices, flat = self._csr
        dist, parent = kernels.all_pairs_bfs(len(self.vertices), indptr, indices)
        return dist.tolist(), parent.tolist()

    def distance(self, u, v):
        d = self._apsp[0][self.vertex_pos[u]][self.vertex_pos[v]]
        if d < 0:
            raise InternalConsistencyError(f"{v} unreachable from {u}")
        return d

    def shortest_path(self, u, v):
        """The BFS-tree shortest path from u to v, as a list of edges."""
        flat = self._csr[2]
        parent = self._apsp[1][self.vertex_pos[u]]
        path, x = [], self.vertex_pos[v]
        src = self.vertex_pos[u]
        while x != src:
            e = flat[parent[x]]
            path.append(e)
            x = self.vertex_pos[e.source]
        path.reverse()
        return path

    def path_weight(self, path):
        total = self.datum.zero_coroot()
        for e in path:
            total = total + self.edge_weight(e)
        return total

    def all_shortest_paths(self, u, v):
        dist = self._apsp[0]
        pos = self.vertex_pos
        tv = pos[v]

        def rec(x):
            if x == v:
                yield []
                return
            dx = dist[pos[x]][tv]
            for e in self.out[x]:
                if dist[pos[e.target]][tv] == dx - 1:
                    for rest in rec(e.target):
                        yield [e] + rest

        yield from rec(u)

    def same_class(self, xi, zeta):
        """Equality of coroots modulo the coroot lattice of S."""
        return all(a == b for j, (a, b) in enumerate(zip(xi, zeta)) if j + 1 not in self.S)

    def _reach(self, allowed):
        key = frozenset(allowed)
        cache = self.__dict__.setdefault("_reach_cache", {})
        if key not in cache:
            indptr, indices, flat = self._csr
            mask = np.array([e.label in key for e in flat], dtype=np.uint8)
            dist, _ = kernels.all_pairs_bfs(len(self.vertices), indptr, indices, mask)
            cache[key] = (dist >= 0).tolist()
        return cache[key]

    def sigma_labels(self, sigma, lam):
        D = self.datum
        return frozenset(b for b in self.labels
                         if (Fraction(sigma) * D.pair(lam, D.coroot(b))).denominator == 1)

    def to_dot(self):
        def name(w):
            return "*".join(f"s{i}" for i in w.word) or "e"

        lines = ["digraph QBG {"]
        for k, v in enumerate(self.vertices):
            lines.append(f'  v{k} [label="{name(v)}"];')
        pos = self.vertex_pos
        for e in self.edges:
            lab = "(" + ",".join(str(c) for c in e.label) + ")"
            lines.append(f'  v{pos[e.source]} -> v{pos[e.target]} [kind={e.kind}, label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


_GRAPHS = {}


def build_qbg(datum, S=()):
    key = (datum, frozenset(S))
    if key not in _GRAPHS:
        _GRAPHS[key] = Qbg(datum, S)
    return _GRAPHS[key]


def shortest_path_data(g, u, v):
    """(distance, weight of the canonical shortest path)."""
    path = g.shortest_path(u, v)
    return len(path), g.path_weight(path)


def wt_lambda(g, u, v, lam):
    if g.datum.stabilizer(lam) != g.S:
        raise ArgumentError("the graph's parabolic subset must be the stabilizer of lam")
    return g.datum.pair(lam, shortest_path_data(g, u, v)[1])


def label_increasing_path(g, start, targets, order, allowed_labels=None, check_unique=False):
    """Path from ``start`` into ``targets`` with strictly increasing labels.

    ``order`` lists the positive roots from smallest to largest.  Labels are
    taken from ``allowed_labels`` (default: all labels of the graph).  The
    search explores labels in increasing order, so the path returned is the
    lexicographically smallest one; with ``check_unique`` every increasing
    path is enumerated and anything other than exactly one raises.
    """
    targets = set(targets)
    rank = {Root(b): k for k, b in enumerate(order)}
    allowed = set(g.labels if allowed_labels is None else map(Root, allowed_labels))
    steps = {u: sorted((e for e in g.out[u] if e.label in allowed), key=lambda e: rank[e.label])
             for u in g.vertices}

    def search(x, last):
        if x in targets:
            yield []
        for e in steps[x]:
            if rank[e.label] > last:
                for rest in search(e.target, rank[e.label]):
                    yield [e] + rest

    found = search(start, -1)
    if not check_unique:
        path = next(found, None)
        if path is None:
            raise InternalConsistencyError("no label-increasing path")
        return path
    paths = list(found)
    if len(paths) != 1:
        raise InternalConsistencyError(f"{len(paths)} label-increasing paths from {start}")
    return paths[0]


def tilted_min(g_full, coset, pivot):
    """The unique minimum of ``coset`` in the order tilted at ``pivot``."""
    d = g_full.distance
    coset = list(coset)
    mins = [y for y in coset
            if all(d(pivot, z) == d(pivot, y) + d(y, z) for z in coset)]
    if len(mins) != 1:
        raise InternalConsistencyError(f"{len(mins)} tilted minima")
    return mins[0]


def has_sigma_path(g, u, v, sigma, lam):
    if u == v:
        return True
    reach = g._reach(g.sigma_labels(sigma, lam))
    return reach[g.vertex_pos[u]][g.vertex_pos[v]]


def word_roots(datum, word):
    """The roots s_{i_p}...s_{i_{k+1}} alpha_{i_k}, k = 1..p, for a word i_1..i_p."""
    roots = []
    for k, i in enumerate(word):
        a = datum.simple_root(i)
        for j in word[k + 1:]:
            a = datum.reflect_root(j, a)
        roots.append(a)
    return roots


def eqb(datum, w, word):
    """Endpoints of QBG paths from w using the roots of ``word`` in position order."""
    word = tuple(word)
    W = datum.weyl
    if W.from_word(word) != w or len(word) != w.length:
        raise ArgumentError(f"{word} is not a reduced word for {w}")
    g = build_qbg(datum)
    labels = word_roots(datum, word)
    seen, ends = set(), set()

    def rec(x, j):
        if (x, j) in seen:
            return
        seen.add((x, j))
        ends.add(x)
        for k in range(j, len(labels)):
            e = g.edge(x, labels[k])
            if e is not None:
                rec(e.target, k + 1)

    rec(w, 0)
    return ends


def reflection_order(datum, word):
    """Positive roots ordered by a reduced word of the longest element."""
    return word_roots(datum, word)

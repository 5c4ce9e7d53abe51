"""Affine Weyl group W t(Q^vee), Peterson coset representatives and the
semi-infinite Bruhat order.

Real affine roots are ``alpha + n*delta`` with alpha a finite root; an
element ``w t(xi)`` sends it to ``w alpha + (n - <alpha, xi>) delta``, and
``s_{alpha + n delta} = s_alpha t(n alpha^vee)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .errors import InconclusiveError, InternalConsistencyError
from .qbg import build_qbg
from .rootdata import Coroot, WeylElement


class AffWeylElement(NamedTuple):
    """finite * t(trans)."""

    finite: WeylElement
    trans: Coroot

    def __mul__(self, other):
        # w1 t(x1) w2 t(x2) = w1 w2 t(w2^-1 x1 + x2)
        w2 = other.finite
        return AffWeylElement(self.finite * w2, w2.inverse().act(self.trans) + other.trans)

    def inverse(self):
        return AffWeylElement(self.finite.inverse(), -self.finite.act(self.trans))

    def act(self, alpha, n):
        """Image of alpha + n delta, as (finite root, degree)."""
        datum = self.finite.group.datum
        return self.finite.act(alpha), n - datum.root_pair(alpha, self.trans)

    def __repr__(self):
        return f"{self.finite!r}.t({','.join(map(str, self.trans))})"


def aff(w, xi=None):
    datum = w.group.datum
    return AffWeylElement(w, Coroot(xi) if xi is not None else datum.zero_coroot())


def sell(x):
    return x.finite.length + 2 * sum(x.trans)


def _positive_aff(datum, alpha, n):
    return n > 0 or (n == 0 and datum.is_positive(alpha))


def in_peterson_set(x, S):
    """Membership in (W^S)_aff.

    The degree of x(gamma + n delta) is n - <gamma, xi>, increasing in n, so
    positivity for every n >= 1 follows from positivity at n = 1; together
    with gamma in Delta_S^+ at n = 0 this covers all of (Delta_S)_aff^+.
    """
    datum = x.finite.group.datum
    for g in datum.positive_roots_in(S):
        if not _positive_aff(datum, *x.act(g, 0)):
            return False
        if not _positive_aff(datum, *x.act(g, 1)) or not _positive_aff(datum, *x.act(-g, 1)):
            return False
    return True


@lru_cache(maxsize=None)
def _cartan_inverse(datum, S):
    idx = sorted(S)
    n = len(idx)
    C = datum.cartan
    # solve sum_i C[j][i] c_i = b_j for j in S: rows j, columns i
    M = [[Fraction(C[j - 1][i - 1]) for i in idx] + [Fraction(int(r == k)) for r in range(n)]
         for k, j in enumerate(idx)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return idx, [row[n:] for row in M]


def is_adjusted(xi, S, datum):
    return all(datum.root_pair(g, xi) in (-1, 0) for g in datum.positive_roots_in(S))


def phi_S(xi, S, datum):
    """The unique element of Q_S^vee making xi S-adjusted.

    Solved exactly: <alpha_j, xi + c> = t_j for j in S with t in {-1, 0}^S,
    then every candidate is checked on all of Delta_S^+.
    """
    S = frozenset(S)
    xi = Coroot(xi)
    if not S:
        return datum.zero_coroot()
    idx, inv = _cartan_inverse(datum, S)
    found = []
    for t in product((-1, 0), repeat=len(idx)):
        rhs = [t[k] - datum.root_pair(datum.simple_root(j), xi) for k, j in enumerate(idx)]
        c = [sum(inv[a][b] * rhs[b] for b in range(len(idx))) for a in range(len(idx))]
        if any(Fraction(v).denominator != 1 for v in c):
            continue
        corr = [0] * datum.rank
        for k, j in enumerate(idx):
            corr[j - 1] = int(c[k])
        corr = Coroot(corr)
        if is_adjusted(xi + corr, S, datum) and corr not in found:
            found.append(corr)
    if len(found) != 1:
        raise InternalConsistencyError(f"{len(found)} adjustments of {xi} for S={sorted(S)}")
    return found[0]


def phi_S_bruteforce(xi, S, datum, box=None):
    """All c in Q_S^vee with xi + c adjusted, searched over a coefficient box."""
    S = sorted(S)
    xi = Coroot(xi)
    if box is None:
        box = max((abs(datum.root_pair(g, xi)) for g in datum.positive_roots_in(S)), default=0) + 2
    out = []
    for cs in product(range(-box, box + 1), repeat=len(S)):
        corr = [0] * datum.rank
        for j, c in zip(S, cs):
            corr[j - 1] = c
        if is_adjusted(xi + Coroot(corr), S, datum):
            out.append(Coroot(corr))
    return out


def z_of(xi, S, datum):
    """The W_S part z with z t(xi + phi_S(xi)) in (W^S)_aff."""
    adj = Coroot(xi) + phi_S(xi, S, datum)
    hits = [u for u in datum.weyl.parabolic_subgroup(S) if in_peterson_set(aff(u, adj), S)]
    if len(hits) != 1:
        raise InternalConsistencyError(f"{len(hits)} candidates for z at {tuple(xi)}")
    return hits[0]


def pi_S(x, S):
    """Peterson projection: (floor(w), z, adjusted translation) for x = w t(xi)."""
    S = frozenset(S)
    W = x.finite.group
    datum = W.datum
    xi = x.trans
    adj = xi + phi_S(xi, S, datum)
    top = W.floor(x.finite, S)
    z = z_of(xi, S, datum)
    x1 = aff(top * z, adj)
    x2 = x1.inverse() * x
    if not (in_peterson_set(x1, S) and x2.finite in set(W.parabolic_subgroup(S))
            and datum.in_span(x2.trans, S)):
        raise InternalConsistencyError(f"bad Peterson factorization of {x}")
    return top, z, adj


def peterson_bruteforce(x, S, window):
    """Every factorization x = x1 x2 with x2 in (W_S)_aff, translation coefficients in the window."""
    S = sorted(S)
    W = x.finite.group
    datum = W.datum
    out = []
    for u in W.parabolic_subgroup(S):
        for cs in product(range(-window, window + 1), repeat=len(S)):
            zeta = [0] * datum.rank
            for j, c in zip(S, cs):
                zeta[j - 1] = c
            x2 = aff(u, zeta)
            x1 = x * x2.inverse()
            if in_peterson_set(x1, S):
                out.append((x1, x2))
    return out


def xi_xy(x, y, S, datum):
    """Adjusted weight of a shortest path x -> y in the parabolic quantum Bruhat graph."""
    g = build_qbg(datum, S)
    wt = g.path_weight(g.shortest_path(x, y))
    return wt + phi_S(wt, S, datum)


def class_of(xi, S):
    """Projection [xi] onto the coordinates outside S."""
    return tuple(c for j, c in enumerate(xi, 1) if j not in S)


def class_ge(xi, zeta, S):
    return all(a >= b for a, b in zip(class_of(xi, S), class_of(zeta, S)))


def peterson_element(w, xi, S, datum):
    """w z_xi t(xi) for w in W^S and xi adjusted."""
    return aff(w * z_of(xi, S, datum), xi)


class SemiInfiniteGraph:
    """Lazily explored semi-infinite Bruhat graph on (W^S)_aff."""

    def __init__(self, datum, S):
        self.datum = datum
        self.S = frozenset(S)
        self._succ = {}

    def successors(self, x):
        if x in self._succ:
            return self._succ[x]
        D = self.datum
        W = D.weyl
        w, xi = x
        winv = w.inverse()
        out = []
        for alpha in D.roots:
            sw = W.reflection(alpha) * w
            dl = sw.length - w.length
            back = winv.act(D.coroot(alpha))
            slope = 2 * sum(back)
            # sell(s_beta x) - sell(x) = dl + n * slope must equal 1
            if slope == 0 or (1 - dl) % slope:
                continue
            n = (1 - dl) // slope
            if n < 0 or (n == 0 and not D.is_positive(alpha)):
                continue
            y = AffWeylElement(sw, xi + back * n)
            if in_peterson_set(y, self.S):
                out.append(y)
        self._succ[x] = out
        return out

    def layers(self, x, depth):
        """Sets of vertices reachable from x in exactly k steps, k = 0..depth."""
        out = [{x}]
        for _ in range(depth):
            nxt = set()
            for y in out[-1]:
                nxt.update(self.successors(y))
            out.append(nxt)
        return out


_SBG = {}


def semi_infinite_graph(datum, S):
    key = (datum, frozenset(S))
    if key not in _SBG:
        _SBG[key] = SemiInfiniteGraph(datum, S)
    return _SBG[key]


def si_le(x, y, S, bound):
    """x precedes y in the semi-infinite Bruhat order.

    Every edge raises sell by one, so a path from x to y has exactly
    sell(y) - sell(x) steps; raises InconclusiveError past ``bound``.
    """
    depth = sell(y) - sell(x)
    if depth < 0:
        return False
    if depth > bound:
        raise InconclusiveError(f"needs depth {depth} > bound {bound}")
    datum = x.finite.group.datum
    for s in (x, y):
        if not in_peterson_set(s, S):
            raise InternalConsistencyError(f"{s} is not a Peterson representative")
    return y in semi_infinite_graph(datum, S).layers(x, depth)[depth]

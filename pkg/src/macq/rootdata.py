"""Finite root systems and Weyl group arithmetic.

Coordinates: roots in the simple-root basis, coroots in the simple-coroot
basis, weights in the fundamental-weight basis.  With these choices
``<weight, coroot>`` is a plain dot product and ``<alpha_i, alpha_j^vee>`` is
``cartan[i][j]``.  Simple indices are 1-based in every public interface
(words, parabolic subsets); coordinate tuples are positional.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial

from .errors import ArgumentError, ConfigurationError, OrbitError


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


class _Vec(tuple):
    """Coordinate vector with componentwise arithmetic."""

    __slots__ = ()

    def __new__(cls, coords=()):
        return super().__new__(cls, [_clean(c) for c in coords])

    def __add__(self, other):
        return type(self)(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return type(self)(a - b for a, b in zip(self, other))

    def __neg__(self):
        return type(self)(-a for a in self)

    def __mul__(self, c):
        return type(self)(c * a for a in self)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self)})"


class Root(_Vec):
    __slots__ = ()


class Coroot(_Vec):
    __slots__ = ()


class Weight(_Vec):
    __slots__ = ()


def _gram_matrix(series, n):
    """Symmetric form on simple roots, Bourbaki numbering."""
    B = [[0] * n for _ in range(n)]

    def link(i, j, v):
        B[i - 1][j - 1] = B[j - 1][i - 1] = v

    if series in "ADE":
        for i in range(n):
            B[i][i] = 2
        if series == "A":
            for i in range(1, n):
                link(i, i + 1, -1)
        elif series == "D":
            for i in range(1, n - 1):
                link(i, i + 1, -1)
            link(n - 2, n, -1)
        else:
            for i, j in [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]:
                link(i, j, -1)
    elif series == "B":
        for i in range(n - 1):
            B[i][i] = 4
        B[n - 1][n - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -2)
    elif series == "C":
        for i in range(n - 1):
            B[i][i] = 2
        B[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif series == "F":
        B[0][0] = B[1][1] = 4
        B[2][2] = B[3][3] = 2
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif series == "G":
        B[0][0], B[1][1] = 2, 6
        link(1, 2, -3)
    return B


_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def weyl_group_order(series, n):
    if series == "A":
        return factorial(n + 1)
    if series in "BC":
        return 2 ** n * factorial(n)
    if series == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[series, n]


def _size_limits():
    env = os.environ.get("MACQ_MAX_W")
    if env:
        return None, int(env)
    return 4, 1152


class RootDatum:
    """Root system of a finite type, with its Weyl group built on demand."""

    def __init__(self, series, rank):
        series = str(series).upper()
        if series not in _VALID or not isinstance(rank, int) or not _VALID[series](rank):
            raise ConfigurationError(f"not a finite type: {series}{rank}")
        self.series = series
        self.rank = n = rank
        self.gram = B = _gram_matrix(series, n)
        self.cartan = tuple(
            tuple(2 * B[i][j] // B[j][j] for j in range(n)) for i in range(n))

        simple = [Root(int(i == j) for j in range(n)) for i in range(n)]
        simple_co = [Coroot(int(i == j) for j in range(n)) for i in range(n)]
        coroot = {simple[i]: simple_co[i] for i in range(n)}
        queue = list(simple)
        while queue:
            a = queue.pop()
            ca = coroot[a]
            for i in range(n):
                b = self.reflect_root(i + 1, a)
                cb = self.reflect_coroot(i + 1, ca)
                if any(c < 0 for c in b):
                    continue
                if b in coroot:
                    if coroot[b] != cb:
                        raise ConfigurationError("coroot depends on presentation")
                    continue
                coroot[b] = cb
                queue.append(b)
        pos = sorted(coroot, key=lambda r: (sum(r), r))
        self.positive_roots = tuple(pos)
        self.roots = self.positive_roots + tuple(-r for r in pos)
        self._coroot = dict(coroot)
        for r in pos:
            self._coroot[-r] = -coroot[r]
        self._root_of = {c: r for r, c in self._coroot.items()}
        self.root_index = {r: k for k, r in enumerate(self.roots)}
        self.rho = Weight([1] * n)
        self.theta = max(pos, key=sum)
        longest = max(self.norm(r) for r in pos)
        short = [r for r in pos if self.norm(r) < longest]
        self.theta_short = max(short, key=sum) if short else self.theta

    def __repr__(self):
        return f"RootDatum({self.series}{self.rank})"

    @property
    def name(self):
        return f"{self.series}{self.rank}"

    @property
    def index_set(self):
        return range(1, self.rank + 1)

    def simple_root(self, i):
        return Root(int(i - 1 == j) for j in range(self.rank))

    def simple_coroot(self, i):
        return Coroot(int(i - 1 == j) for j in range(self.rank))

    def fundamental_weight(self, i):
        return Weight(int(i - 1 == j) for j in range(self.rank))

    def zero_weight(self):
        return Weight([0] * self.rank)

    def zero_coroot(self):
        return Coroot([0] * self.rank)

    # pairings and conversions

    def norm(self, a):
        """(a, a) for a root in simple-root coordinates."""
        B, n = self.gram, self.rank
        return sum(a[i] * B[i][j] * a[j] for i in range(n) for j in range(n))

    def root_to_weight(self, a):
        C, n = self.cartan, self.rank
        return Weight(sum(a[i] * C[i][j] for i in range(n)) for j in range(n))

    def pair(self, lam, xi):
        """<weight, coroot>."""
        return _clean(sum(a * b for a, b in zip(lam, xi)))

    def root_pair(self, a, xi):
        """<root, coroot>."""
        return self.pair(self.root_to_weight(a), xi)

    def coroot(self, a):
        return self._coroot[a]

    def root_of_coroot(self, xi):
        return self._root_of[xi]

    def is_root(self, a):
        return a in self.root_index

    def is_positive(self, v):
        return any(v) and all(c >= 0 for c in v)

    def height(self, v):
        return _clean(sum(v))

    def reflect_root(self, i, a):
        C = self.cartan
        c = sum(a[k] * C[k][i - 1] for k in range(self.rank))
        out = list(a)
        out[i - 1] -= c
        return Root(out)

    def reflect_coroot(self, i, xi):
        C = self.cartan
        c = sum(C[i - 1][j] * xi[j] for j in range(self.rank))
        out = list(xi)
        out[i - 1] -= c
        return Coroot(out)

    def reflect_weight(self, i, lam):
        row = self.cartan[i - 1]
        c = lam[i - 1]
        return Weight(lam[j] - c * row[j] for j in range(self.rank))

    # parabolic data

    def in_span(self, v, S):
        return all(c == 0 for j, c in enumerate(v) if j + 1 not in S)

    def positive_roots_in(self, S):
        return tuple(r for r in self.positive_roots if self.in_span(r, S))

    def positive_roots_outside(self, S):
        return tuple(r for r in self.positive_roots if not self.in_span(r, S))

    def rho_of(self, S):
        """Half the sum of the positive roots of the parabolic subsystem S."""
        total = self.zero_weight()
        for r in self.positive_roots_in(S):
            total = total + self.root_to_weight(r)
        return total * Fraction(1, 2)

    def stabilizer(self, lam):
        return frozenset(i + 1 for i, c in enumerate(lam) if c == 0)

    def is_dominant(self, lam):
        return all(c >= 0 for c in lam)

    def two_rho_vee(self):
        total = self.zero_coroot()
        for r in self.positive_roots:
            total = total + self._coroot[r]
        return total

    @cached_property
    def weyl(self):
        max_rank, max_w = _size_limits()
        size = weyl_group_order(self.series, self.rank)
        if (max_rank is not None and self.rank > max_rank) or size > max_w:
            raise ConfigurationError(
                f"{self.name}: |W|={size} exceeds the configured limit "
                f"(set MACQ_MAX_W to raise it)")
        return WeylGroup(self)


def _matvec(M, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def _matmul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


class WeylGroup:
    """All elements of W, indexed in (length, lex-min reduced word) order.

    An element is identified by its image of rho, which is regular, so the
    identity of an element is its action.
    """

    def __init__(self, datum):
        self.datum = D = datum
        n = D.rank
        start = tuple([1] * n)
        images, index = [start], {start: 0}
        q = 0
        while q < len(images):
            v = images[q]
            for i in range(1, n + 1):
                u = tuple(D.reflect_weight(i, v))
                if u not in index:
                    index[u] = len(images)
                    images.append(u)
            q += 1

        def lexmin_word(v):
            word = []
            while True:
                neg = [i for i, c in enumerate(v) if c < 0]
                if not neg:
                    return tuple(word)
                word.append(neg[0] + 1)
                v = tuple(D.reflect_weight(neg[0] + 1, v))

        words = {v: lexmin_word(v) for v in images}
        images.sort(key=lambda v: (len(words[v]), words[v]))
        self._img = images
        self._index = {v: k for k, v in enumerate(images)}
        self._word = [words[v] for v in images]
        self._len = [len(w) for w in self._word]
        N = len(images)
        self._lmul = [[self._index[tuple(D.reflect_weight(i, v))] for i in range(1, n + 1)]
                      for v in images]

        def simple_matrix(f, i):
            cols = [f(i, tuple(int(j == k) for k in range(n))) for j in range(n)]
            return tuple(zip(*cols))

        Sw = [simple_matrix(D.reflect_weight, i) for i in range(1, n + 1)]
        Sr = [simple_matrix(D.reflect_root, i) for i in range(1, n + 1)]
        Sc = [simple_matrix(D.reflect_coroot, i) for i in range(1, n + 1)]
        ident = tuple(tuple(int(j == k) for k in range(n)) for j in range(n))
        self._M, self._R, self._K = [ident] * N, [ident] * N, [ident] * N
        for k in range(1, N):
            i = self._word[k][0] - 1
            rest = self._lmul[k][i]
            self._M[k] = _matmul(Sw[i], self._M[rest])
            self._R[k] = _matmul(Sr[i], self._R[rest])
            self._K[k] = _matmul(Sc[i], self._K[rest])
        alpha_w = [tuple(D.root_to_weight(D.simple_root(i))) for i in range(1, n + 1)]
        self._rmul = []
        for k in range(N):
            v, M = images[k], self._M[k]
            row = []
            for i in range(n):
                wa = _matvec(M, alpha_w[i])
                row.append(self._index[tuple(a - b for a, b in zip(v, wa))])
            self._rmul.append(row)
        self._inv = []
        for k in range(N):
            x = 0
            for i in self._word[k]:
                x = self._lmul[x][i - 1]
            self._inv.append(x)
        self._mul = {}
        self._elements = [WeylElement(self, k) for k in range(N)]
        self._refl = {}

    def __len__(self):
        return len(self._img)

    def __iter__(self):
        return iter(self._elements)

    @property
    def elements(self):
        return list(self._elements)

    @property
    def e(self):
        return self._elements[0]

    def element(self, k):
        return self._elements[k]

    def from_word(self, word):
        x = 0
        for i in reversed(tuple(word)):
            if not 1 <= i <= self.datum.rank:
                raise ArgumentError(f"simple index {i} out of range")
            x = self._lmul[x][i - 1]
        return self._elements[x]

    def is_reduced(self, word):
        return self.from_word(word).length == len(word)

    def mul_index(self, a, b):
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            if a == 0:
                r = b
            elif b == 0:
                r = a
            else:
                r = self._index[_matvec(self._M[a], self._img[b])]
            self._mul[key] = r
        return r

    def reflection(self, a):
        """s_a for a root a (either sign)."""
        a = Root(a)
        if a in self._refl:
            return self._refl[a]
        D = self.datum
        h = D.height(D.coroot(a))
        aw = D.root_to_weight(a)
        img = tuple(c - h * x for c, x in zip(self._img[0], aw))
        el = self._elements[self._index[img]]
        self._refl[a] = self._refl[-a] = el
        return el

    def from_rho_image(self, v):
        return self._elements[self._index[tuple(v)]]

    def longest(self, S=None):
        S = set(self.datum.index_set) if S is None else set(S)
        x = 0
        grew = True
        while grew:
            grew = False
            for i in sorted(S):
                y = self._rmul[x][i - 1]
                if self._len[y] > self._len[x]:
                    x, grew = y, True
                    break
        return self._elements[x]

    @cached_property
    def w0(self):
        return self.longest()

    def floor(self, w, S):
        x = w.index
        S = sorted(S)
        moved = True
        while moved:
            moved = False
            for i in S:
                y = self._rmul[x][i - 1]
                if self._len[y] < self._len[x]:
                    x, moved = y, True
                    break
        return self._elements[x]

    def is_min_rep(self, w, S):
        return all(self._len[self._rmul[w.index][i - 1]] > self._len[w.index] for i in S)

    def parabolic_subgroup(self, S):
        seen, queue = {0}, [0]
        while queue:
            x = queue.pop()
            for i in S:
                y = self._rmul[x][i - 1]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return [self._elements[k] for k in sorted(seen)]

    def min_reps(self, S):
        return [w for w in self._elements if self.is_min_rep(w, S)]

    def coset(self, w, S):
        return [w * u for u in self.parabolic_subgroup(S)]

    def reduced_words(self, w):
        memo = {}

        def rec(k):
            if k in memo:
                return memo[k]
            if k == 0:
                out = {()}
            else:
                out = set()
                v = self._img[k]
                for i, c in enumerate(v):
                    if c < 0:
                        for tail in rec(self._lmul[k][i]):
                            out.add((i + 1,) + tail)
            memo[k] = out
            return out

        return set(rec(w.index))


class WeylElement:
    """Element of a finite Weyl group; equality is equality of actions."""

    __slots__ = ("group", "index")

    def __init__(self, group, index):
        self.group = group
        self.index = index

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and other.group is self.group
                and other.index == self.index)

    def __hash__(self):
        return hash(self.index)

    def __lt__(self, other):
        return self.index < other.index

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        g = self.group
        return g._elements[g.mul_index(self.index, other.index)]

    def inverse(self):
        return self.group._elements[self.group._inv[self.index]]

    @property
    def length(self):
        return self.group._len[self.index]

    @property
    def word(self):
        return self.group._word[self.index]

    def is_identity(self):
        return self.index == 0

    def act(self, v):
        g = self.group
        if isinstance(v, Weight):
            return Weight(_matvec(g._M[self.index], v))
        if isinstance(v, Root):
            return Root(_matvec(g._R[self.index], v))
        if isinstance(v, Coroot):
            return Coroot(_matvec(g._K[self.index], v))
        raise TypeError("expected a Root, Coroot or Weight")

    def left_descents(self):
        return [i + 1 for i, c in enumerate(self.group._img[self.index]) if c < 0]

    def right_descents(self):
        g, k = self.group, self.index
        return [i + 1 for i in range(g.datum.rank) if g._len[g._rmul[k][i]] < g._len[k]]

    def mul_simple(self, i):
        return self.group._elements[self.group._rmul[self.index][i - 1]]

    def __repr__(self):
        return "*".join(f"s{i}" for i in self.word) or "e"


# functional interface

@lru_cache(maxsize=None)
def build_root_datum(series, rank):
    return RootDatum(series, rank)


def parse_type(text):
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise ArgumentError(f"cannot parse type {text!r}")
    return build_root_datum(text[0].upper(), int(text[1:]))


def act(w, v):
    return w.act(v)


def longest_element(datum, S=None):
    return datum.weyl.longest(S)


def min_coset_rep(w, S):
    return w.group.floor(w, S)


def v_of(mu, lam, datum):
    """Minimal-length w with w(lam) = mu."""
    lam, mu = Weight(lam), Weight(mu)
    if not datum.is_dominant(lam):
        raise ArgumentError(f"{lam} is not dominant")
    word, nu = [], mu
    while True:
        neg = [i for i, c in enumerate(nu) if c < 0]
        if not neg:
            break
        word.append(neg[0] + 1)
        nu = datum.reflect_weight(neg[0] + 1, nu)
    if nu != lam:
        raise OrbitError(f"{mu} is not in the orbit of {lam}")
    W = datum.weyl
    return W.floor(W.from_word(word), datum.stabilizer(lam))


def all_reduced_words(w):
    return w.group.reduced_words(w)


def orbit(lam, datum):
    """The Weyl orbit of a dominant weight, sorted."""
    seen, queue = {Weight(lam)}, [Weight(lam)]
    while queue:
        v = queue.pop()
        for i in datum.index_set:
            u = datum.reflect_weight(i, v)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(seen)

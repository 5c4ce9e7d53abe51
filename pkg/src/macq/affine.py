"""Extended affine Weyl group on the dual side and the ordered inversion set.

Affine roots are ``b + a*d`` with ``b`` a coroot of the finite system and
``d`` the dual null root.  Group elements ``t(wt) dir`` act by
``t(nu) v (b + r d) = v b + (r - <nu, v b>) d``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import ArgumentError, DomainError, InternalConsistencyError
from .qbg import reflection_order
from .rootdata import Coroot, Root, Weight, WeylElement, v_of


class AffRootDual(NamedTuple):
    bar: Coroot
    deg: int

    def is_positive(self):
        return self.deg > 0 or (self.deg == 0 and all(c >= 0 for c in self.bar))

    def __repr__(self):
        return f"({','.join(map(str, self.bar))})+{self.deg}d"


class ExtAffWeyl(NamedTuple):
    """t(wt) dir."""

    wt: Weight
    dir: WeylElement

    def __mul__(self, other):
        return ExtAffWeyl(self.wt + self.dir.act(other.wt), self.dir * other.dir)

    def act(self, beta):
        datum = self.dir.group.datum
        b = self.dir.act(beta.bar)
        return AffRootDual(b, beta.deg - datum.pair(self.wt, b))

    def inverse(self):
        inv = self.dir.inverse()
        return ExtAffWeyl(-inv.act(self.wt), inv)


def identity(datum):
    return ExtAffWeyl(datum.zero_weight(), datum.weyl.e)


def reflection(beta, datum):
    """s_beta = t(a * (-alpha)) s_alpha where alpha is the root dual to the finite part."""
    if not any(beta.bar):
        raise ArgumentError("finite part of an affine root must be nonzero")
    alpha = datum.root_of_coroot(Coroot(beta.bar))
    return ExtAffWeyl(datum.root_to_weight(alpha) * (-beta.deg), datum.weyl.reflection(alpha))


def lam_minus(lam, datum):
    return datum.weyl.w0.act(Weight(lam))


def m_of(mu, lam, datum):
    """The shortest element of t(mu)W."""
    v_mu = v_of(mu, lam, datum)
    v_lm = v_of(lam_minus(lam, datum), lam, datum)
    return ExtAffWeyl(Weight(mu), v_mu * v_lm.inverse())


def inversion_set(mu, lam, datum):
    """Positive affine roots sent to negative ones by m_mu, in closed form."""
    W = datum.weyl
    d = m_of(mu, lam, datum).dir
    w0 = W.w0
    out = set()
    for alpha in datum.positive_roots:
        a_neg = -alpha
        image = d.act(a_neg)
        sign = 1 if not datum.is_positive(image) else 0
        bound = sign + datum.pair(lam, w0.act(datum.coroot(a_neg)))
        for a in range(1, bound):
            out.add(AffRootDual(datum.coroot(a_neg), a))
    return out


def inversion_set_bruteforce(u, datum, max_deg):
    """Positive affine roots b with u b negative, degrees up to ``max_deg``."""
    out = set()
    for r in datum.roots:
        for a in range(0, max_deg + 1):
            b = AffRootDual(datum.coroot(r), a)
            if b.is_positive() and not u.act(b).is_positive():
                out.add(b)
    return out


def phi(beta, lam, datum):
    """(fractional position, finite label) used to sort the inversion set."""
    p = datum.pair(lam_minus(lam, datum), beta.bar)
    if p <= 0:
        raise DomainError(f"{beta} is not an inversion of m_lambda-")
    label = datum.weyl.w0.act(datum.root_of_coroot(Coroot(beta.bar)))
    return Fraction(p - beta.deg, p), label


@dataclass(frozen=True, eq=False)
class OsOrder:
    lam: Weight
    datum: object
    word: tuple
    order: tuple
    roots: tuple
    d: tuple
    labels: tuple
    position: dict = field(repr=False)

    @property
    def L(self):
        return len(self.roots)

    def index(self, beta):
        """1-based position of an affine root."""
        return self.position[beta] + 1

    def K_index(self, mu):
        inv = inversion_set(mu, self.lam, self.datum)
        K = self.L - len(inv)
        if set(self.roots[K:]) != inv:
            raise ArgumentError(
                f"the inversions of m_mu for mu={tuple(mu)} are not a final segment "
                f"of the order built from the word {self.word}")
        return K

    def to_json(self):
        return [{"coroot": list(b.bar), "deg": b.deg, "d": str(dk)}
                for b, dk in zip(self.roots, self.d)]


def adapted_word(mu, lam, datum):
    """Reduced word of v(lam-) ending with the lex-min word of v(mu)."""
    v_mu = v_of(mu, lam, datum)
    v_lm = v_of(lam_minus(lam, datum), lam, datum)
    return (v_lm * v_mu.inverse()).word + v_mu.word


@lru_cache(maxsize=None)
def _os_order(lam, word, datum):
    W = datum.weyl
    S = datum.stabilizer(lam)
    v_lm = v_of(lam_minus(lam, datum), lam, datum)
    if len(word) != v_lm.length or W.from_word(word) != v_lm:
        raise ArgumentError(f"{word} is not a reduced word for v(lam-) = {v_lm}")
    full = word + W.longest(S).word
    order = tuple(reflection_order(datum, full))
    rank = {b: k for k, b in enumerate(order)}
    keyed = []
    for beta in inversion_set(lam_minus(lam, datum), lam, datum):
        d, label = phi(beta, lam, datum)
        keyed.append(((d, rank[label]), beta, d, label))
    keyed.sort(key=lambda t: t[0])
    for (k1, _, _, _), (k2, _, _, _) in zip(keyed, keyed[1:]):
        if k1 == k2:
            raise InternalConsistencyError("two inversions share a sort key")
    roots = tuple(t[1] for t in keyed)
    return OsOrder(Weight(lam), datum, word, order, roots,
                   tuple(t[2] for t in keyed), tuple(t[3] for t in keyed),
                   {b: k for k, b in enumerate(roots)})


def os_order(lam, datum, word=None):
    lam = Weight(lam)
    if word is None:
        word = v_of(lam_minus(lam, datum), lam, datum).word
    return _os_order(lam, tuple(word), datum)


def order_for(mu, lam, datum, word=None):
    """The order used for walks at mu: ``word`` if given, else the adapted word."""
    return os_order(lam, datum, adapted_word(mu, lam, datum) if word is None else word)

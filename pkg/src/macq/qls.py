"""Quantum Lakshmibai-Seshadri paths."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ArgumentError, InternalConsistencyError
from .laurent import GradedPolynomial
from .qbg import build_qbg, eqb, has_sigma_path, wt_lambda
from .rootdata import Weight, v_of


@dataclass(frozen=True)
class QLSPath:
    dirs: tuple
    sigmas: tuple

    @property
    def kappa(self):
        return self.dirs[-1]

    def __repr__(self):
        return f"QLSPath({', '.join(map(repr, self.dirs))}; {', '.join(map(str, self.sigmas))})"

    def to_json_obj(self, lam=None, mu=None, datum=None):
        obj = {"dirs": [list(w.word) for w in self.dirs],
               "sigmas": [str(s) for s in self.sigmas],
               "kappa": list(self.kappa.word)}
        if lam is not None:
            obj["wt"] = [int(c) for c in wt(self, lam)]
            if mu is not None:
                obj["deg"] = {"mu": [int(c) for c in mu], "value": deg_at(self, mu, lam, datum)}
        return obj


def breakpoints(lam, datum):
    """Rationals a/b in (0,1) with b = <lam, beta^vee> for a label beta.

    Any sigma at which a filtered edge exists has sigma*<lam, beta^vee> integral
    for that label, so sigma = a/b for b = <lam, beta^vee> and 0 < a < b.
    """
    S = datum.stabilizer(lam)
    out = set()
    for b in datum.positive_roots_outside(S):
        n = datum.pair(lam, datum.coroot(b))
        out.update(Fraction(a, n) for a in range(1, n))
    return sorted(out)


def enumerate_qls(lam, datum):
    return list(_enumerate(Weight(lam), datum))


@lru_cache(maxsize=None)
def _enumerate(lam, datum):
    if not any(lam):
        raise ArgumentError("the zero weight has no QLS paths")
    if not datum.is_dominant(lam):
        raise ArgumentError(f"{lam} is not dominant")
    g = build_qbg(datum, datum.stabilizer(lam))
    cuts = breakpoints(lam, datum)
    out = []

    # Built from the last direction backwards: tail holds (w_i, ..., w_s) and
    # the breakpoints sigma_i, ..., sigma_s = 1 in front of them.
    def rec(tail, sig):
        out.append(QLSPath(tuple(tail), (Fraction(0),) + tuple(sig)))
        first = tail[0]
        for s in cuts:
            if s >= sig[0]:
                break
            for w in g.vertices:
                if w != first and has_sigma_path(g, first, w, s, lam):
                    rec([w] + tail, [s] + sig)

    for w in g.vertices:
        rec([w], [Fraction(1)])
    out.sort(key=lambda p: (len(p.dirs), [w.index for w in p.dirs], p.sigmas))
    return tuple(out)


def wt(psi, lam):
    lam = Weight(lam)
    total = Weight([0] * len(lam))
    for k, w in enumerate(psi.dirs, 1):
        total = total + w.act(lam) * (psi.sigmas[k] - psi.sigmas[k - 1])
    if any(isinstance(c, Fraction) for c in total):
        raise InternalConsistencyError(f"non-integral weight {total} for {psi}")
    return total


def deg_at(psi, mu, lam, datum):
    lam = Weight(lam)
    g = build_qbg(datum, datum.stabilizer(lam))
    seq = list(psi.dirs) + [v_of(mu, lam, datum)]
    total = 0
    for i in range(1, len(psi.dirs) + 1):
        term = psi.sigmas[i] * wt_lambda(g, seq[i], seq[i - 1], lam)
        if Fraction(term).denominator != 1:
            raise InternalConsistencyError(f"non-integral degree term in {psi}")
        total += int(term)
    return -total


def final_directions(mu, lam, datum):
    """floor(EQB(v(mu) w0_S)) computed with the word of v(mu) followed by that of w0_S."""
    W = datum.weyl
    S = datum.stabilizer(lam)
    v = v_of(mu, lam, datum)
    w0S = W.longest(S)
    ends = eqb(datum, v * w0S, v.word + w0S.word)
    return {W.floor(x, S) for x in ends}


def qls_infty(mu, lam, datum):
    allowed = final_directions(mu, lam, datum)
    return [p for p in enumerate_qls(lam, datum) if p.kappa in allowed]


def gch_mu(mu, lam, datum):
    return GradedPolynomial.from_monomials(
        (wt(p, lam), deg_at(p, mu, lam, datum)) for p in qls_infty(mu, lam, datum))

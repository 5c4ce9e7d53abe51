"""Quantum alcove walks from m_mu and the walk formula for E_mu(q, infinity)."""
from __future__ import annotations

from dataclasses import dataclass

from .affine import m_of, order_for, reflection
from .errors import ArgumentError
from .laurent import GradedPolynomial
from .qbg import QUANTUM, build_qbg
from .rootdata import Coroot, Weight


@dataclass(frozen=True)
class AlcoveWalk:
    mu: Weight
    J: tuple
    chain: tuple
    labels: tuple
    quantum: tuple
    order: object

    @property
    def end(self):
        return self.chain[-1]

    def to_json_obj(self):
        steps = [{"beta": {"coroot": list(b.bar), "deg": b.deg},
                  "kind": "quantum" if q else "bruhat"}
                 for b, q in zip(self.labels, self.quantum)]
        return {"mu": list(self.mu), "J": list(self.J), "steps": steps,
                "end": {"wt": list(self.end.wt), "dir_word": list(self.end.dir.word)}}


def _step(z, beta, datum, g):
    """Extend by one affine reflection; None if the direction change is not a QBG edge."""
    alpha = -datum.root_of_coroot(Coroot(beta.bar))
    if not datum.is_positive(alpha):
        return None
    nxt = z * reflection(beta, datum)
    e = g.edge(nxt.dir, alpha)
    if e is None or e.target != z.dir:
        return None
    return nxt, e.kind == QUANTUM


def walk_from_indices(mu, lam, datum, J, order=None):
    """Build the walk with index set J (1-based), checking every step."""
    order = order or order_for(mu, lam, datum)
    K = order.K_index(mu)
    J = tuple(J)
    if any(j <= K or j > order.L for j in J) or list(J) != sorted(set(J)):
        raise ArgumentError(f"index set {J} is not increasing inside the inversions of m_mu")
    g = build_qbg(datum)
    chain, quantum = [m_of(mu, lam, datum)], []
    for j in J:
        res = _step(chain[-1], order.roots[j - 1], datum, g)
        if res is None:
            raise ArgumentError(f"step {j} of {J} is not a quantum Bruhat edge")
        chain.append(res[0])
        quantum.append(res[1])
    return AlcoveWalk(Weight(mu), J, tuple(chain),
                      tuple(order.roots[j - 1] for j in J), tuple(quantum), order)


def enumerate_qb(mu, lam, datum, order=None):
    """All quantum alcove walks from m_mu, depth first over increasing indices."""
    mu = Weight(mu)
    order = order or order_for(mu, lam, datum)
    K = order.K_index(mu)
    g = build_qbg(datum)
    out = []

    def rec(start, J, chain, quantum):
        out.append(AlcoveWalk(mu, tuple(J), tuple(chain),
                              tuple(order.roots[j - 1] for j in J), tuple(quantum), order))
        for j in range(start, order.L + 1):
            res = _step(chain[-1], order.roots[j - 1], datum, g)
            if res is not None:
                rec(j + 1, J + [j], chain + [res[0]], quantum + [res[1]])

    rec(K + 1, [], [m_of(mu, lam, datum)], [])
    return out


def end_weight(p):
    return p.end.wt


def qwt_deg(p):
    return sum(b.deg for b, q in zip(p.labels, p.quantum) if q)


def e_os(mu, lam, datum, word=None):
    walks = enumerate_qb(mu, lam, datum, order_for(mu, lam, datum, word))
    return GradedPolynomial.from_monomials((end_weight(p), -qwt_deg(p)) for p in walks)

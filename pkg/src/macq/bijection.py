"""The bijection between quantum alcove walks from m_mu and QLS paths with
final direction in floor(EQB(v(mu) w0_S)), in both directions."""
from __future__ import annotations

from fractions import Fraction

from .affine import AffRootDual, lam_minus, order_for
from .errors import ArgumentError, InternalConsistencyError
from .oswalk import AlcoveWalk, walk_from_indices
from .qbg import build_qbg, label_increasing_path
from .qls import QLSPath, final_directions
from .rootdata import Weight, v_of


def _check_walk(p, datum):
    lam = p.order.lam
    ref = walk_from_indices(p.mu, lam, datum, p.J, p.order)
    if ref.chain != p.chain:
        raise ArgumentError("inconsistent alcove walk")


def xi(p, lam, datum):
    """Walk -> QLS path."""
    if not isinstance(p, AlcoveWalk):
        raise ArgumentError("expected an AlcoveWalk")
    _check_walk(p, datum)
    W = datum.weyl
    S = datum.stabilizer(Weight(lam))
    w0 = W.w0
    x = [z.dir for z in p.chain]
    ds = [p.order.d[j - 1] for j in p.J]
    r = len(ds)
    zeros = sum(1 for d in ds if d == 0)
    bounds, sigmas = [0, zeros], [Fraction(0)]
    k = zeros
    while k < r:
        val = ds[k]
        while k < r and ds[k] == val:
            k += 1
        sigmas.append(val)
        bounds.append(k)
    s = len(bounds) - 1
    ws = [W.floor(x[bounds[q]] * w0, S) for q in range(1, s + 1)]
    dirs = tuple(reversed(ws))
    taus = tuple(1 - t for t in reversed(sigmas[1:]))
    return QLSPath(dirs, (Fraction(0),) + taus + (Fraction(1),))


def theta(psi, mu, lam, datum, order=None):
    """QLS path -> walk, through tilted minima and label-increasing paths."""
    lam, mu = Weight(lam), Weight(mu)
    W = datum.weyl
    S = datum.stabilizer(lam)
    if psi.kappa not in final_directions(mu, lam, datum):
        raise ArgumentError(f"{psi} does not lie in the set attached to mu={tuple(mu)}")
    order = order or order_for(mu, lam, datum)
    g = build_qbg(datum)
    w0 = W.w0
    allowed = datum.positive_roots_outside(S)
    lm = lam_minus(lam, datum)
    current = v_of(mu, lam, datum) * W.longest(S)
    found = []
    for p in range(len(psi.dirs), 0, -1):
        tau = psi.sigmas[p]
        path = label_increasing_path(g, current, W.coset(psi.dirs[p - 1], S), order.order, allowed)
        for e in path:
            gamma = -w0.act(e.label)
            a = -tau * datum.pair(lm, datum.coroot(gamma))
            if Fraction(a).denominator != 1 or a <= 0:
                raise InternalConsistencyError(f"degree {a} is not a positive integer")
            found.append(AffRootDual(-datum.coroot(gamma), int(a)))
        if path:
            current = path[-1].target
    if any(b not in order.position for b in found):
        raise InternalConsistencyError("recovered root outside the inversion set")
    J = [order.index(b) for b in found]
    if J != sorted(J) or len(set(J)) != len(J):
        raise InternalConsistencyError(f"recovered indices {J} are not increasing")
    return walk_from_indices(mu, lam, datum, J, order)

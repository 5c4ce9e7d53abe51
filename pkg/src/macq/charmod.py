"""Character formulas: E_mu(q, infinity) and graded Demazure characters."""
from __future__ import annotations

from .errors import ArgumentError, VerificationError
from .laurent import GradedPolynomial, GradedSeries, specialize
from .oswalk import e_os
from .qls import deg_at, enumerate_qls, gch_mu, wt
from .rootdata import Weight

__all__ = ["GradedPolynomial", "GradedSeries", "specialize", "e_t_infinity",
           "gch_quotient", "gch_demazure", "denominator_exponents"]

BACKENDS = ("os", "qls", "both")


def e_t_infinity(mu, lam, datum, backend="both", word=None):
    backend = backend.lower()
    if backend not in BACKENDS:
        raise ArgumentError(f"unknown backend {backend!r}")
    if backend == "os":
        return e_os(mu, lam, datum, word)
    if backend == "qls":
        return gch_mu(mu, lam, datum)
    a = e_os(mu, lam, datum, word)
    b = gch_mu(mu, lam, datum)
    if a != b:
        only_os, only_qls = a.diff(b)
        raise VerificationError(
            f"walk formula and path formula disagree at mu={tuple(mu)}\n"
            f"  walks only: {only_os.to_text()}\n  paths only: {only_qls.to_text()}", a, b)
    return a


def gch_quotient(x, lam, datum):
    """Sum over QLS(lam) of e^wt q^deg, degrees anchored at x(lam)."""
    lam = Weight(lam)
    S = datum.stabilizer(lam)
    if not datum.weyl.is_min_rep(x, S):
        raise ArgumentError(f"{x} is not a minimal coset representative")
    mu = x.act(lam)
    return GradedPolynomial.from_monomials(
        (wt(p, lam), deg_at(p, mu, lam, datum)) for p in enumerate_qls(lam, datum))


def denominator_exponents(lam):
    return sorted(r for m in lam for r in range(1, m + 1))


def gch_demazure(x, lam, datum):
    return GradedSeries(gch_quotient(x, lam, datum), denominator_exponents(lam))

"""Finitely supported sums of ``c * q^k * e^wt`` with integer coefficients."""
from __future__ import annotations

import json
from collections import Counter

from .rootdata import Weight


def _fmt_weight(wt):
    return "(" + ",".join(str(c) for c in wt) + ")"


def _latex_weight(wt):
    parts = []
    for i, c in enumerate(wt, 1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append((sign, f"{mag}\\varpi_{{{i}}}"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class GradedPolynomial:
    """Immutable map (weight, q-exponent) -> nonzero integer."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for (wt, k), c in dict(terms or {}).items():
            if c:
                key = (Weight(wt), int(k))
                clean[key] = clean.get(key, 0) + c
        self._terms = {key: c for key, c in clean.items() if c}

    @classmethod
    def from_monomials(cls, monomials):
        """Sum of ``e^wt q^k`` over an iterable of (wt, k)."""
        return cls(Counter((Weight(wt), int(k)) for wt, k in monomials))

    def terms(self):
        """[(weight, qexp, coeff)] in canonical order."""
        return [(wt, k, c) for (wt, k), c in sorted(self._terms.items(), key=lambda t: (tuple(t[0][0]), t[0][1]))]

    def coefficient(self, wt, k=0):
        return self._terms.get((Weight(wt), k), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, GradedPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return GradedPolynomial(out)

    def __neg__(self):
        return GradedPolynomial({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedPolynomial({key: c * other for key, c in self._terms.items()})
        out = {}
        for (w1, k1), c1 in self._terms.items():
            for (w2, k2), c2 in other._terms.items():
                key = (w1 + w2, k1 + k2)
                out[key] = out.get(key, 0) + c1 * c2
        return GradedPolynomial(out)

    __rmul__ = __mul__

    def q_exponents(self):
        return sorted({k for (_, k) in self._terms})

    def diff(self, other):
        """Terms where the two sides differ: (only here, only there)."""
        mine, theirs = {}, {}
        for key in set(self._terms) | set(other._terms):
            a, b = self._terms.get(key, 0), other._terms.get(key, 0)
            if a > b:
                mine[key] = a - b
            elif b > a:
                theirs[key] = b - a
        return GradedPolynomial(mine), GradedPolynomial(theirs)

    def to_text(self):
        if not self._terms:
            return "0"
        out = []
        for wt, k, c in self.terms():
            parts = []
            if c != 1:
                parts.append(str(c))
            if k:
                parts.append(f"q^{k}")
            parts.append(f"e[{_fmt_weight(wt)}]")
            out.append(" * ".join(parts))
        return " + ".join(out)

    def to_latex(self):
        if not self._terms:
            return "0"
        out = []
        for wt, k, c in self.terms():
            parts = []
            if c != 1:
                parts.append(str(c))
            if k:
                parts.append(f"q^{{{k}}}")
            parts.append(f"e^{{{_latex_weight(wt)}}}")
            out.append(" ".join(parts))
        return " + ".join(out)

    def to_json_obj(self):
        return [{"wt": [int(x) for x in wt], "qexp": k, "coeff": c} for wt, k, c in self.terms()]

    def to_json(self, denominator=()):
        return json.dumps({"terms": self.to_json_obj(), "denominator": list(denominator)})

    def __repr__(self):
        return f"GradedPolynomial({self.to_text()})"


def denominator_series(exponents, order):
    """Coefficients of prod_r (1 - q^-r)^-1 in q^0 .. q^-order, as a list."""
    coeffs = [1] + [0] * order
    for r in exponents:
        for k in range(r, order + 1):
            coeffs[k] += coeffs[k - r]
    return coeffs


class GradedSeries:
    """numerator * prod_r (1 - q^-r)^-1, kept as exact numerator/denominator data."""

    def __init__(self, numerator, denominator_exponents):
        self.numerator = numerator
        self.denominator = tuple(sorted(denominator_exponents))

    def __eq__(self, other):
        return (isinstance(other, GradedSeries) and self.numerator == other.numerator
                and self.denominator == other.denominator)

    def expand(self, order):
        """All terms of the series with q-exponent >= -order (numerators have exponents <= 0)."""
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        top = max(self.numerator.q_exponents(), default=0)
        if top > 0:
            raise ValueError("numerator has positive q-exponents")
        coeffs = denominator_series(self.denominator, order)
        out = {}
        for (wt, k), c in self.numerator._terms.items():
            for j, cj in enumerate(coeffs):
                if cj and k - j >= -order:
                    key = (wt, k - j)
                    out[key] = out.get(key, 0) + c * cj
        return GradedPolynomial(out)

    def denominator_text(self):
        return "".join(f"(1-q^-{r})" for r in self.denominator) or "1"


def specialize(p, q_value=None, forget_weights=False):
    """Set q = 1 (``q_value=1``) and/or e^wt = 1 (``forget_weights``).

    Setting both gives an integer; otherwise a GradedPolynomial, with the
    zero-length weight standing in for forgotten weights.
    """
    if q_value not in (None, 1):
        raise ValueError("only q = 1 is supported")
    out = {}
    for wt, k, c in p.terms():
        key = (Weight(()) if forget_weights else wt, 0 if q_value == 1 else k)
        out[key] = out.get(key, 0) + c
    if q_value == 1 and forget_weights:
        return sum(out.values())
    return GradedPolynomial(out)

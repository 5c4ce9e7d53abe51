"""Cross-checks shared by the ``verify`` command and the test suite.

Each check returns a ``Check`` carrying pass/fail, a count of cases and the
first counterexample found.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .bijection import theta, xi
from .charmod import e_t_infinity, gch_quotient, specialize
from .oswalk import e_os, end_weight, enumerate_qb, qwt_deg
from .qbg import (build_qbg, eqb, has_sigma_path, label_increasing_path,
                  reflection_order)
from .qls import breakpoints, deg_at, enumerate_qls, gch_mu, qls_infty, wt
from .rootdata import Coroot, Weight, orbit


@dataclass
class Check:
    name: str
    cases: int = 0
    failure: object = None
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failure is None

    def fail(self, info):
        if self.failure is None:
            self.failure = info


def subsets(datum):
    idx = list(datum.index_set)
    return [frozenset(c) for k in range(len(idx) + 1) for c in combinations(idx, k)]


def check_os_qls(datum, lam):
    c = Check("walks = paths for every mu")
    for mu in orbit(lam, datum):
        c.cases += 1
        a, b = e_os(mu, lam, datum), gch_mu(mu, lam, datum)
        if a != b:
            c.fail({"mu": list(mu), "walks": a.to_text(), "paths": b.to_text()})
    return c


def check_bijection(datum, lam):
    c = Check("walk/path bijection round trips")
    lam = Weight(lam)
    for mu in orbit(lam, datum):
        walks = enumerate_qb(mu, lam, datum)
        paths = qls_infty(mu, lam, datum)
        if len(walks) != len(paths):
            c.fail({"mu": list(mu), "walks": len(walks), "paths": len(paths)})
        for p in walks:
            c.cases += 1
            psi = xi(p, lam, datum)
            if wt(psi, lam) != end_weight(p):
                c.fail({"mu": list(mu), "J": list(p.J), "problem": "weight"})
            if qwt_deg(p) != -deg_at(psi, mu, lam, datum):
                c.fail({"mu": list(mu), "J": list(p.J), "problem": "degree"})
            if theta(psi, mu, lam, datum).J != p.J:
                c.fail({"mu": list(mu), "J": list(p.J), "problem": "theta(xi(p)) != p"})
        for psi in paths:
            c.cases += 1
            if xi(theta(psi, mu, lam, datum), lam, datum) != psi:
                c.fail({"mu": list(mu), "path": psi.to_json_obj(), "problem": "xi(theta(psi)) != psi"})
    return c


def check_eqb_words(datum):
    c = Check("EQB independent of the reduced word")
    W = datum.weyl
    for w in W:
        results = {frozenset(eqb(datum, w, word)) for word in W.reduced_words(w)}
        c.cases += 1
        if len(results) != 1:
            c.fail({"w": list(w.word), "distinct results": len(results)})
    if frozenset(eqb(datum, W.w0, W.w0.word)) != frozenset(W):
        c.fail({"w": "w0", "problem": "EQB(w0) is not all of W"})
    return c


def count_increasing_paths(g, order):
    """counts[u][v] = number of label-increasing paths u -> v in the full graph."""
    verts = g.vertices
    pos = g.vertex_pos
    n = len(verts)
    f = [[int(i == j) for j in range(n)] for i in range(n)]
    by_label = {b: [] for b in order}
    for e in g.edges:
        by_label[e.label].append(e)
    for b in reversed(order):
        new = [row[:] for row in f]
        for e in by_label[b]:
            s, t = pos[e.source], pos[e.target]
            new[s] = [a + x for a, x in zip(new[s], f[t])]
        f = new
    return {(verts[i], verts[j]): f[i][j] for i in range(n) for j in range(n)}


def check_shellability(datum, max_words=None):
    c = Check("unique label-increasing paths")
    g = build_qbg(datum)
    W = datum.weyl
    words = sorted(W.reduced_words(W.w0))
    if max_words is not None and len(words) > max_words:
        c.notes.append(f"checked {max_words} of {len(words)} reduced words of w0")
        words = words[:max_words]
    for word in words:
        order = reflection_order(datum, word)
        counts = count_increasing_paths(g, order)
        for (u, v), k in counts.items():
            c.cases += 1
            if k != 1:
                c.fail({"word": list(word), "u": list(u.word), "v": list(v.word), "paths": k})
                continue
            path = label_increasing_path(g, u, [v], order)
            if len(path) != g.distance(u, v):
                c.fail({"word": list(word), "u": list(u.word), "v": list(v.word), "problem": "not shortest"})
    return c


def check_path_weights(datum):
    c = Check("shortest-path weights agree")
    for S in subsets(datum):
        g = build_qbg(datum, S)
        for u in g.vertices:
            for v in g.vertices:
                weights = [g.path_weight(p) for p in g.all_shortest_paths(u, v)]
                c.cases += 1
                if not weights or any(not g.same_class(weights[0], x) for x in weights):
                    c.fail({"S": sorted(S), "u": list(u.word), "v": list(v.word)})
    return c


def check_involution(datum):
    c = Check("edges reverse under right multiplication by w0")
    g = build_qbg(datum)
    w0 = datum.weyl.w0
    for e in g.edges:
        c.cases += 1
        f = g.edge(e.target * w0, -w0.act(e.label))
        if f is None or f.target != e.source * w0 or f.kind != e.kind:
            c.fail({"source": list(e.source.word), "label": list(e.label)})
    return c


def check_projection(datum, lam):
    c = Check("filtered edges project to filtered paths")
    lam = Weight(lam)
    S = datum.stabilizer(lam)
    full, par = build_qbg(datum), build_qbg(datum, S)
    W = datum.weyl
    for sigma in breakpoints(lam, datum) + [1]:
        keep = full.sigma_labels(sigma, lam)
        for e in full.edges:
            if e.label not in keep:
                continue
            c.cases += 1
            if not has_sigma_path(par, W.floor(e.source, S), W.floor(e.target, S), sigma, lam):
                c.fail({"sigma": str(sigma), "source": list(e.source.word), "label": list(e.label)})
    return c


def check_demazure(datum, lam):
    c = Check("Demazure identities")
    lam = Weight(lam)
    W = datum.weyl
    S = datum.stabilizer(lam)
    top = W.floor(W.w0, S)
    c.cases += 1
    a = gch_quotient(top, lam, datum)
    b = e_t_infinity(W.w0.act(lam), lam, datum, "both")
    if a != b:
        c.fail({"quotient": a.to_text(), "E": b.to_text()})
    ref = None
    for x in W.min_reps(S):
        c.cases += 1
        at_one = specialize(gch_quotient(x, lam, datum), q_value=1)
        if ref is None:
            ref = at_one
        elif at_one != ref:
            c.fail({"x": list(x.word), "problem": "q=1 specialization depends on x"})
    return c


def check_counts(datum, lam):
    from .affine import inversion_set, lam_minus, os_order
    c = Check("combinatorial counts")
    lam = Weight(lam)
    order = os_order(lam, datum)
    L = datum.pair(lam, datum.two_rho_vee())
    c.cases += 1
    if order.L != L or len(inversion_set(lam_minus(lam, datum), lam, datum)) != L:
        c.fail({"L": order.L, "expected": L})
    if any(not 0 <= d < 1 for d in order.d) or list(order.d) != sorted(order.d):
        c.fail({"d": [str(d) for d in order.d]})
    for mu in orbit(lam, datum):
        c.cases += 1
        if len(enumerate_qb(mu, lam, datum)) != len(qls_infty(mu, lam, datum)):
            c.fail({"mu": list(mu), "problem": "walk and path counts differ"})
        for psi in enumerate_qls(lam, datum):
            if deg_at(psi, mu, lam, datum) > 0:
                c.fail({"mu": list(mu), "path": psi.to_json_obj(), "problem": "positive degree"})
    return c


def class_box(datum, S, box):
    """Adjusted representatives of every class [xi] with outside-S coordinates in the box."""
    from .siaff import phi_S
    n = datum.rank
    out = [i for i in range(1, n + 1) if i not in S]
    reps = []
    for cs in product(range(-box, box + 1), repeat=len(out)):
        v = [0] * n
        for i, c in zip(out, cs):
            v[i - 1] = c
        v = Coroot(v)
        reps.append(v + phi_S(v, S, datum))
    return reps


def check_lemmas(datum, box=3):
    """Semi-infinite lemmas for every S, translations restricted to a box."""
    from .siaff import (aff, class_ge, class_of, pi_S, peterson_bruteforce, peterson_element,
                        phi_S, phi_S_bruteforce, semi_infinite_graph, sell, xi_xy)
    W = datum.weyl
    n = datum.rank
    adj = Check("adjustment exists and is unique")
    pet = Check("Peterson factorization is unique")
    sig0 = Check("edges never lower the class")
    sig1 = Check("x t(zeta) below x t(xi) iff [xi] >= [zeta]")
    min1 = Check("x below y z t(xi_xy)")
    min2 = Check("x below y z t(zeta) forces [zeta] >= [xi_xy]")
    for S in subsets(datum):
        for cs in product(range(-box, box + 1), repeat=n):
            adj.cases += 1
            found = phi_S_bruteforce(Coroot(cs), S, datum, box=2 * box + 2)
            if found != [phi_S(Coroot(cs), S, datum)]:
                adj.fail({"S": sorted(S), "xi": list(cs), "found": [list(c) for c in found]})
        for w in W:
            for cs in product(range(-1, 2), repeat=n):
                pet.cases += 1
                x = aff(w, cs)
                facts = peterson_bruteforce(x, S, box)
                top, z, xa = pi_S(x, S)
                if len(facts) != 1 or facts[0][0] != aff(top * z, xa):
                    pet.fail({"S": sorted(S), "w": list(w.word), "xi": list(cs), "found": len(facts)})
        G = semi_infinite_graph(datum, S)
        reps = W.min_reps(S)
        classes = class_box(datum, S, box)
        for x in reps:
            for zeta in classes:
                src = peterson_element(x, zeta, S, datum)
                for y in G.successors(src):
                    sig0.cases += 1
                    if not class_ge(y.trans, zeta, S):
                        sig0.fail({"S": sorted(S), "source": repr(src), "target": repr(y)})
                targets = {xi: peterson_element(x, xi, S, datum) for xi in classes}
                depth = max(0, max(sell(v) - sell(src) for v in targets.values()))
                layers = G.layers(src, depth)
                for xi, v in targets.items():
                    sig1.cases += 1
                    d = sell(v) - sell(src)
                    if (d >= 0 and v in layers[d]) != class_ge(xi, zeta, S):
                        sig1.fail({"S": sorted(S), "x": list(x.word), "zeta": list(class_of(zeta, S)),
                                   "xi": list(class_of(xi, S))})
        for x in reps:
            src = aff(x)
            targets = [(y, zeta, peterson_element(y, zeta, S, datum)) for y in reps for zeta in classes]
            depth = max(0, max(sell(v) - sell(src) for _, _, v in targets))
            layers = G.layers(src, depth)
            for y in reps:
                min1.cases += 1
                xy = xi_xy(x, y, S, datum)
                v = peterson_element(y, xy, S, datum)
                d = sell(v) - sell(src)
                if not (d >= 0 and v in layers[d]):
                    min1.fail({"S": sorted(S), "x": list(x.word), "y": list(y.word)})
            for y, zeta, v in targets:
                min2.cases += 1
                d = sell(v) - sell(src)
                if d >= 0 and v in layers[d] and not class_ge(zeta, xi_xy(x, y, S, datum), S):
                    min2.fail({"S": sorted(S), "x": list(x.word), "y": list(y.word),
                               "zeta": list(class_of(zeta, S))})
    return [adj, pet, sig0, sig1, min1, min2]


def run_all(datum, lam, max_words=64):
    lam = Weight(lam)
    return [
        check_os_qls(datum, lam),
        check_bijection(datum, lam),
        check_eqb_words(datum),
        check_shellability(datum, max_words),
        check_demazure(datum, lam),
        check_counts(datum, lam),
    ]

from itertools import combinations

import pytest

from macq.affine import AffRootDual, order_for
from macq.errors import ArgumentError
from macq.oswalk import e_os, end_weight, enumerate_qb, qwt_deg, walk_from_indices
from macq.rootdata import Coroot, Weight, build_root_datum, orbit

from configs import CONFIGS, config_id


def walks_bruteforce(mu, lam, D):
    """Oracle: try every increasing index set inside the inversions of m_mu."""
    o = order_for(mu, lam, D)
    K = o.K_index(mu)
    idx = range(K + 1, o.L + 1)
    out = set()
    for k in range(len(idx) + 1):
        for J in combinations(idx, k):
            try:
                walk_from_indices(mu, lam, D, J, o)
            except ArgumentError:
                continue
            out.add(J)
    return out


@pytest.mark.parametrize("cfg", CONFIGS + [("A", 3, (1, 0, 1))], ids=config_id)
def test_enumeration_matches_subsets(cfg):
    s, n, lam = cfg
    D = build_root_datum(s, n)
    lam = Weight(lam)
    for mu in orbit(lam, D):
        assert {p.J for p in enumerate_qb(mu, lam, D)} == walks_bruteforce(mu, lam, D)


def test_walk_count_examples(A1, A2):
    lam = Weight((1,))
    [p] = enumerate_qb(Weight((1,)), lam, A1)
    assert p.J == ()
    walks = enumerate_qb(Weight((-1,)), lam, A1)
    assert [p.J for p in walks] == [(), (1,)]
    assert walks[1].quantum == (True,)
    # directions run e, s1 and the step is the quantum edge s1 -> e
    assert [z.dir for z in walks[1].chain] == [A1.weyl.e, A1.weyl.from_word((1,))]
    assert len(enumerate_qb(Weight((0, -1)), Weight((1, 0)), A2)) == 3


def test_end_weight_and_degree(A1):
    lam = Weight((1,))
    p0, p1 = enumerate_qb(Weight((-1,)), lam, A1)
    assert end_weight(p0) == Weight((-1,)) and qwt_deg(p0) == 0
    assert end_weight(p1) == Weight((1,)) and qwt_deg(p1) == 1
    assert p1.end.dir == A1.weyl.from_word((1,))


def test_two_step_degree(A1):
    lam = Weight((2,))
    walks = {p.J: p for p in enumerate_qb(Weight((-2,)), lam, A1)}
    p = walks[(1, 2)]
    assert p.labels == (AffRootDual(Coroot((-1,)), 2), AffRootDual(Coroot((-1,)), 1))
    assert qwt_deg(p) == sum(b.deg for b, q in zip(p.labels, p.quantum) if q) == 2
    assert p.quantum == (True, False)


def test_walk_rejects_bad_indices(A1):
    lam = Weight((2,))
    with pytest.raises(ArgumentError):
        walk_from_indices(Weight((-2,)), lam, A1, (2, 1))
    with pytest.raises(ArgumentError):
        walk_from_indices(Weight((-2,)), lam, A1, (3,))
    with pytest.raises(ArgumentError):
        walk_from_indices(Weight((2,)), lam, A1, (1,))


def test_e_os_examples(A1, A2):
    assert e_os(Weight((1,)), Weight((1,)), A1).to_text() == "e[(1)]"
    assert e_os(Weight((-1,)), Weight((1,)), A1).to_text() == "e[(-1)] + q^-1 * e[(1)]"
    assert e_os(Weight((0, -1)), Weight((1, 0)), A2).to_text() == \
        "q^-1 * e[(-1,1)] + e[(0,-1)] + q^-1 * e[(1,0)]"


def test_e_os_rank_one_two(A1):
    # frozen from the exhaustive walk enumeration, cross-checked against the path backend
    assert e_os(Weight((-2,)), Weight((2,)), A1).to_text() == \
        "e[(-2)] + q^-2 * e[(0)] + q^-1 * e[(0)] + q^-2 * e[(2)]"


def test_seed_word_must_be_adapted(A2):
    lam = Weight((1, 1))
    assert e_os(Weight((1, -2)), lam, A2, (1, 2, 1)) == e_os(Weight((1, -2)), lam, A2)
    with pytest.raises(ArgumentError):
        e_os(Weight((-2, 1)), lam, A2, (1, 2, 1))

import pytest

from macq import charmod
from macq.charmod import (denominator_exponents, e_t_infinity, gch_demazure, gch_quotient,
                          specialize)
from macq.errors import ArgumentError, VerificationError
from macq.laurent import GradedPolynomial
from macq.qls import enumerate_qls
from macq.rootdata import Weight, build_root_datum, orbit
from macq.verify import check_demazure

from configs import CONFIGS, config_id


@pytest.mark.parametrize("cfg", CONFIGS + [("A", 3, (1, 0, 1)), ("B", 3, (1, 0, 0)),
                                           ("G", 2, (0, 1))], ids=config_id)
def test_backends_agree(cfg):
    s, n, lam = cfg
    D = build_root_datum(s, n)
    lam = Weight(lam)
    for mu in orbit(lam, D):
        assert e_t_infinity(mu, lam, D, "os") == e_t_infinity(mu, lam, D, "qls")


@pytest.mark.parametrize("cfg", CONFIGS, ids=config_id)
def test_demazure_identities(cfg):
    s, n, lam = cfg
    c = check_demazure(build_root_datum(s, n), Weight(lam))
    assert c.ok, c.failure


def test_rank_one_closed_form(A1):
    lam = Weight((1,))
    assert e_t_infinity(Weight((1,)), lam, A1) == GradedPolynomial.from_monomials([(lam, 0)])
    # x^-1 + (1-t)/(1-qt) x tends to x^-1 + q^-1 x as t grows
    assert e_t_infinity(Weight((-1,)), lam, A1) == GradedPolynomial.from_monomials(
        [(Weight((-1,)), 0), (Weight((1,)), -1)])


def test_rank_one_weight_two(A1):
    p = e_t_infinity(Weight((-2,)), Weight((2,)), A1, "both")
    assert len(p) == 4 and max(p.q_exponents()) == 0 and min(p.q_exponents()) <= -1


def test_mismatch_raises(A1, monkeypatch):
    monkeypatch.setattr(charmod, "gch_mu", lambda mu, lam, datum: GradedPolynomial())
    with pytest.raises(VerificationError) as exc:
        e_t_infinity(Weight((-1,)), Weight((1,)), A1, "both")
    assert exc.value.left != exc.value.right


def test_unknown_backend(A1):
    with pytest.raises(ArgumentError):
        e_t_infinity(Weight((1,)), Weight((1,)), A1, "fast")


def test_quotient_examples(A1):
    lam = Weight((1,))
    W = A1.weyl
    assert gch_quotient(W.e, lam, A1).to_text() == "e[(-1)] + e[(1)]"
    assert gch_quotient(W.from_word((1,)), lam, A1).to_text() == "e[(-1)] + q^-1 * e[(1)]"


def test_quotient_rejects_non_minimal(A2):
    with pytest.raises(ArgumentError):
        gch_quotient(A2.weyl.from_word((2,)), Weight((1, 0)), A2)


@pytest.mark.parametrize("cfg", CONFIGS, ids=config_id)
def test_q_one_counts_paths(cfg):
    s, n, lam = cfg
    D = build_root_datum(s, n)
    lam = Weight(lam)
    S = D.stabilizer(lam)
    for x in D.weyl.min_reps(S):
        assert specialize(gch_quotient(x, lam, D), 1, True) == len(enumerate_qls(lam, D))


def test_demazure_series(A1):
    lam = Weight((1,))
    s = gch_demazure(A1.weyl.from_word((1,)), lam, A1)
    assert s.denominator == (1,)
    assert s.numerator == e_t_infinity(Weight((-1,)), lam, A1)
    geometric = GradedPolynomial.from_monomials([(Weight((0,)), -k) for k in range(4)])
    overflow = GradedPolynomial.from_monomials([(Weight((1,)), -4)])
    assert s.expand(3) == s.numerator * geometric - overflow
    assert denominator_exponents(Weight((2,))) == [1, 2]
    assert denominator_exponents(Weight((1, 1))) == [1, 1]

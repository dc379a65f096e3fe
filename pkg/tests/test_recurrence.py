"""Polynomial-coefficient recurrences: verify, extend, guess, scan."""

import pytest

import motzkinrank as mr
from motzkinrank import Recurrence


@pytest.fixture(scope="module")
def motzkin():
    return mr.count_sequence(mr.WeightSpec.all_ones(1), 60)


@pytest.fixture(scope="module")
def rank2():
    return mr.count_sequence(mr.WeightSpec.all_ones(2), 80)


def test_construction_validation():
    with pytest.raises(ValueError):
        Recurrence(((1, 1),))  # order 0
    with pytest.raises(ValueError):
        Recurrence(((1,), ()))  # zero leading polynomial
    rec = Recurrence(((1,), (0, 0, 0), (2, 1)))
    assert rec.order == 2
    assert rec.degree == 1
    assert rec.coeff_polys == ((1,), (), (2, 1))  # inner zeros trim away


def test_normalized_and_proportional():
    rec = mr.motzkin_recurrence()
    tripled = Recurrence(tuple(tuple(3 * c for c in p) for p in rec.coeff_polys))
    negated = Recurrence(tuple(tuple(-c for c in p) for p in rec.coeff_polys))
    assert tripled.normalized() == rec.normalized()
    assert negated.normalized() == rec.normalized()
    assert rec.content() == 1
    assert tripled.content() == 3
    assert rec.proportional_to(tripled)
    assert not rec.proportional_to(mr.prodinger_recurrence())


def test_str_rendering():
    text = str(mr.motzkin_recurrence())
    assert "m[n+2]" in text and "= 0" in text and "n + 4" in text


def test_verify_motzkin(motzkin):
    assert mr.verify_recurrence(mr.motzkin_recurrence(), motzkin)
    corrupted = list(motzkin)
    corrupted[30] += 1
    assert not mr.verify_recurrence(mr.motzkin_recurrence(), corrupted)


def test_verify_rank1_general():
    for u, l, d in ((2, 1, 3), (1, 0, 1), (3, 2, 2)):
        terms = mr.count_sequence(mr.WeightSpec.rank1(u, l, d), 40)
        assert mr.verify_recurrence(mr.rank1_recurrence(u, l, d), terms)


def test_verify_prodinger(rank2):
    assert mr.verify_recurrence(mr.prodinger_recurrence(), rank2)
    assert mr.prodinger_recurrence().order == 6
    assert mr.prodinger_recurrence().degree == 3


def test_apply_extends_dp(motzkin):
    rec = mr.motzkin_recurrence()
    assert mr.apply_recurrence(rec, motzkin[:2], 61) == motzkin
    with pytest.raises(mr.InsufficientTerms):
        mr.apply_recurrence(rec, motzkin[:1], 10)


def test_apply_singular_leading_coefficient():
    # leading polynomial n - 3 vanishes at n = 3
    rec = Recurrence(((1,), (-3, 1)))
    with pytest.raises(mr.SingularLeadingCoefficient) as info:
        mr.apply_recurrence(rec, [6], 10)
    assert info.value.n == 3


def test_apply_non_integral_step():
    rec = Recurrence(((1,), (2,)))  # m[n+1] = -m[n]/2
    with pytest.raises(mr.NonIntegralStep):
        mr.apply_recurrence(rec, [1], 5)
    assert mr.apply_recurrence(rec, [4], 3) == [4, -2, 1]


def test_json_roundtrip():
    rec = mr.prodinger_recurrence()
    data = rec.to_json_dict()
    assert Recurrence.from_json_dict(data) == rec
    data["order"] = 5
    with pytest.raises(ValueError):
        Recurrence.from_json_dict(data)


def test_guess_recovers_motzkin(motzkin):
    rec = mr.guess_recurrence(motzkin, max_order=3, max_degree=2)
    assert rec is not None
    assert rec.order == 2 and rec.degree == 1  # trimmed to the true cell
    assert rec.proportional_to(mr.motzkin_recurrence())
    assert mr.verify_recurrence(rec, motzkin)


def test_guess_returns_none_when_no_relation_fits(motzkin):
    assert mr.guess_recurrence(motzkin[:30], max_order=1, max_degree=1) is None


def test_guess_rank1_general_weights():
    terms = mr.count_sequence(mr.WeightSpec.rank1(2, 1, 3), 60)
    rec = mr.guess_recurrence(terms, max_order=2, max_degree=1)
    assert rec is not None
    assert rec.proportional_to(mr.rank1_recurrence(2, 1, 3))


def test_guess_input_validation(motzkin):
    with pytest.raises(ValueError):
        mr.guess_recurrence(motzkin, max_order=0, max_degree=1)
    with pytest.raises(TypeError):
        mr.guess_recurrence([1.0, 2.0, 3.0], max_order=1, max_degree=0)
    with pytest.raises(mr.InsufficientTerms):
        mr.guess_recurrence(motzkin[:20], max_order=8, max_degree=5)


def test_minimality_scan_motzkin(motzkin):
    report = mr.minimality_scan(motzkin, max_order=3, max_degree=2)
    assert report.hits == ((2, 1), (2, 2), (3, 1), (3, 2))
    assert report.smallest == (2, 1)
    assert report.observed_term_count == 3
    assert report.terms_used == len(motzkin)


def test_minimality_scan_finds_nothing_small(motzkin):
    report = mr.minimality_scan(motzkin, max_order=1, max_degree=2)
    assert report.hits == ()


def test_rank2_shorter_relation_is_genuine(rank2):
    # the guided search over (order + degree, order) finds an order-5
    # degree-4 relation before the classical 7-term one; both verify
    # and both extend the dp sequence correctly
    rec = mr.guess_recurrence(rank2, max_order=6, max_degree=4)
    assert rec is not None
    assert (rec.order, rec.degree) == (5, 4)
    assert mr.verify_recurrence(rec, rank2)
    longer = mr.count_sequence(mr.WeightSpec.all_ones(2), 200)
    assert mr.verify_recurrence(rec, longer)
    assert mr.apply_recurrence(rec, longer[:5], 201) == longer

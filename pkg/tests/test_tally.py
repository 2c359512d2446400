from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deborda.profile import parse_profile
from deborda.scorevec import score_vector
from deborda.tally import (
    Scoring,
    ScoringError,
    borda_estimate,
    named_scoring,
    normalize_scoring,
    winners,
)
from helpers import profiles, scorings


def brute_estimate(pr, s, a):
    """Voter-by-voter tally, expanding each weighted ballot into single voters."""
    total = Fraction(0)
    for b in pr.ballots:
        for _ in range(b.weight):
            total += s[pr.p - 1 - list(b.order).index(a)]
    return total


def test_scoring_validation():
    assert Scoring([0, 1, 2]).is_strict
    assert Scoring([0, 0, 1]).strictness == "weak"
    with pytest.raises(ScoringError):
        Scoring([1, 1, 1])
    with pytest.raises(ScoringError):
        Scoring([0, 2, 1])
    with pytest.raises(ScoringError):
        Scoring([3, 1])
    with pytest.raises(ScoringError):
        Scoring([0])
    with pytest.raises(ScoringError):
        Scoring([0, 0.5, 1])
    assert Scoring(["0", "1/2", "3"])[1] == Fraction(1, 2)


@pytest.mark.parametrize(
    "s, expected",
    [((-1, 0, 0), (0, 1, 1)), ((0, 1, 2), (0, 1, 2)), ((5, 5, 9), (0, 0, 4))],
)
def test_normalize(s, expected):
    out = normalize_scoring(Scoring(s))
    assert out.s == tuple(Fraction(x) for x in expected)
    assert out.strictness == Scoring(s).strictness


def test_golden_estimates(shap):
    std = Scoring([0, 1, 2])
    assert [borda_estimate(shap, std, a) for a in range(3)] == [17, 15, 16]
    # estimate = d . r: 1*2 + 1*15 for candidate a
    assert borda_estimate(shap, std, 0) == 1 * 2 + 1 * 15
    assert borda_estimate(shap, Scoring([0, 0, 1]), 2) == 8


def test_golden_winners(shap):
    t = winners(shap, Scoring([0, 1, 2]))
    assert t.winners == {0}
    assert t.estimates == {0: 17, 1: 15, 2: 16}
    assert winners(shap, named_scoring("plurality", 3)).winners == {2}
    anti = winners(shap, named_scoring("antiplurality", 3))
    assert anti.winners == {0}
    # last places: a once, b seven times, c eight times
    assert anti.estimates == {0: -1, 1: -7, 2: -8}


def test_ties_are_kept():
    pr = parse_profile("1: a > b\n1: b > a")
    assert winners(pr, Scoring([0, 1])).winners == {0, 1}


@pytest.mark.parametrize(
    "name, p, expected",
    [
        ("standard", 3, (0, 1, 2)),
        ("plurality", 4, (0, 0, 0, 1)),
        ("antiplurality", 2, (-1, 0)),
        ("standard", 2, (0, 1)),
    ],
)
def test_named_scoring(name, p, expected):
    assert named_scoring(name, p).s == expected


def test_named_scoring_errors():
    with pytest.raises(ScoringError):
        named_scoring("standard", 1)
    with pytest.raises(ScoringError):
        named_scoring("copeland", 3)


def test_estimate_errors(shap):
    with pytest.raises(IndexError):
        borda_estimate(shap, Scoring([0, 1, 2]), 3)
    with pytest.raises(ScoringError):
        borda_estimate(shap, Scoring([0, 1]), 0)


@given(profiles(max_p=5).flatmap(lambda pr: st.tuples(st.just(pr), scorings(pr.p))))
@settings(max_examples=200, deadline=None)
def test_estimate_matches_voter_by_voter(args):
    pr, s = args
    for a in range(pr.p):
        assert borda_estimate(pr, s, a) == brute_estimate(pr, s, a)
    t = winners(pr, s)
    assert t.winners
    assert all(t.estimates[a] == borda_estimate(pr, s, a) for a in range(pr.p))


@given(
    profiles(max_p=5).flatmap(lambda pr: st.tuples(st.just(pr), scorings(pr.p))),
    st.fractions(min_value=-20, max_value=20, max_denominator=7),
    st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9),
)
@settings(max_examples=200, deadline=None)
def test_translation_and_scaling(args, shift, factor):
    pr, s = args
    base = winners(pr, s)
    shifted = winners(pr, s.shifted(shift))
    assert shifted.winners == base.winners
    for a in range(pr.p):
        assert shifted.estimates[a] == base.estimates[a] + pr.n * shift
    assert winners(pr, s.scaled(factor)).winners == base.winners


@given(profiles(max_p=5).flatmap(lambda pr: st.tuples(st.just(pr), scorings(pr.p))))
@settings(max_examples=200, deadline=None)
def test_estimate_is_difference_weighted_score_vector(args):
    pr, s = args
    s = normalize_scoring(s)
    d = s.differences()
    p = pr.p
    for a in range(p):
        r = score_vector(pr, a)
        assert borda_estimate(pr, s, a) == sum(d[p - k - 1] * r[k - 1] for k in range(1, p))

import random
from fractions import Fraction

from hypothesis import strategies as st

from deborda.profile import Profile
from deborda.tally import Scoring

SHAPOVALOV = """\
2: a > b > c
6: b > a > c
7: c > a > b
1: c > b > a
"""

LABELS = "abcdefgh"


def random_profile(rng: random.Random, p: int, n_max: int) -> Profile:
    labels = list(LABELS[:p])
    n = rng.randint(1, n_max)
    voters = []
    for _ in range(n):
        order = labels[:]
        rng.shuffle(order)
        voters.append((1, order))
    return Profile.from_rankings(labels, voters)


def random_scoring(rng: random.Random, p: int, strict: bool | None = None) -> Scoring:
    """Random valid scoring with s_0 = 0; rational steps."""
    while True:
        steps = [Fraction(rng.randint(0, 6), rng.randint(1, 4)) for _ in range(p - 1)]
        if strict:
            steps = [x + Fraction(1, 3) for x in steps]
        if sum(steps) > 0:
            break
    s = [Fraction(0)]
    for x in steps:
        s.append(s[-1] + x)
    return Scoring(s)


@st.composite
def profiles(draw, max_p=4, max_ballots=6, max_weight=4):
    p = draw(st.integers(2, max_p))
    labels = list(LABELS[:p])
    k = draw(st.integers(1, max_ballots))
    rows = []
    for _ in range(k):
        order = draw(st.permutations(labels))
        rows.append((draw(st.integers(1, max_weight)), list(order)))
    return Profile.from_rankings(labels, rows)


@st.composite
def scorings(draw, p, strict=False):
    lo = 1 if strict else 0
    steps = draw(st.lists(st.fractions(min_value=lo, max_value=10, max_denominator=6), min_size=p - 1, max_size=p - 1))
    if sum(steps) == 0:
        steps[-1] = Fraction(1)
    base = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
    s = [base]
    for x in steps:
        s.append(s[-1] + x)
    return Scoring(s)

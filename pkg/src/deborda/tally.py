"""Positional scorings, de Borda estimates and winner sets.

A scoring ``s = (s_0, ..., s_{p-1})`` pays ``s_{p-1}`` for a top position and
``s_0`` for the bottom one.  Everything here is exact: scores are
:class:`fractions.Fraction` and ties are decided by exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .profile import Profile

__all__ = [
    "ScoringError",
    "Scoring",
    "Tally",
    "normalize_scoring",
    "borda_estimate",
    "estimates",
    "winners",
    "named_scoring",
    "NAMED_RULES",
]

NAMED_RULES = ("standard", "plurality", "antiplurality")


class ScoringError(ValueError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise ScoringError(f"float score {x!r} rejected; pass an int, Fraction or 'p/q' string")
    try:
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ScoringError(f"not a rational number: {x!r}") from None


@dataclass(frozen=True)
class Scoring:
    """A nondecreasing score vector with ``s[0] < s[-1]``."""

    s: tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        s = tuple(_as_fraction(v) for v in values)
        if len(s) < 2:
            raise ScoringError("a scoring needs at least two positions")
        if any(a > b for a, b in zip(s, s[1:])):
            raise ScoringError(f"scores must be nondecreasing: {_fmt(s)}")
        if not s[0] < s[-1]:
            raise ScoringError(f"bottom score must be below top score: {_fmt(s)}")
        object.__setattr__(self, "s", s)

    def __len__(self) -> int:
        return len(self.s)

    def __getitem__(self, k: int) -> Fraction:
        return self.s[k]

    def __iter__(self):
        return iter(self.s)

    @property
    def is_strict(self) -> bool:
        return all(a < b for a, b in zip(self.s, self.s[1:]))

    @property
    def strictness(self) -> str:
        return "strict" if self.is_strict else "weak"

    def differences(self) -> tuple[Fraction, ...]:
        """``(d_1, ..., d_{p-1})`` with ``d_j = s_j - s_{j-1}``."""
        return tuple(b - a for a, b in zip(self.s, self.s[1:]))

    def shifted(self, c) -> "Scoring":
        c = _as_fraction(c)
        return Scoring(x + c for x in self.s)

    def scaled(self, c) -> "Scoring":
        c = _as_fraction(c)
        if c <= 0:
            raise ScoringError("scale factor must be positive")
        return Scoring(x * c for x in self.s)

    def __repr__(self) -> str:
        return f"Scoring({_fmt(self.s)})"


def _fmt(s) -> str:
    return "(" + ", ".join(str(x) for x in s) + ")"


@dataclass(frozen=True)
class Tally:
    estimates: dict[int, Fraction]
    winners: frozenset[int]


def normalize_scoring(s: Scoring) -> Scoring:
    """Translate ``s`` so that the bottom score is zero; the winner sets do not change."""
    return s.shifted(-s[0])


def _check(pr: Profile, s: Scoring) -> None:
    if len(s) != pr.p:
        raise ScoringError(f"scoring has {len(s)} positions but the profile has {pr.p} candidates")


def borda_estimate(pr: Profile, s: Scoring, a: int) -> Fraction:
    """Total points of candidate ``a``, summed ballot by ballot."""
    pr.check_candidate(a)
    _check(pr, s)
    top = pr.p - 1
    return sum((b.weight * s[top - b.position(a)] for b in pr.ballots), Fraction(0))


def estimates(pr: Profile, s: Scoring) -> dict[int, Fraction]:
    _check(pr, s)
    top = pr.p - 1
    out = {c.id: Fraction(0) for c in pr.candidates}
    for b in pr.ballots:
        for pos, a in enumerate(b.order):
            out[a] += b.weight * s[top - pos]
    return out


def winners(pr: Profile, s: Scoring) -> Tally:
    est = estimates(pr, s)
    best = max(est.values())
    return Tally(est, frozenset(a for a, v in est.items() if v == best))


def named_scoring(name: str, p: int) -> Scoring:
    """The standard Borda, plurality and antiplurality scorings on ``p`` positions."""
    if p < 2:
        raise ScoringError(f"need at least two positions, got p={p}")
    if name == "standard":
        return Scoring(range(p))
    if name == "plurality":
        return Scoring([0] * (p - 1) + [1])
    if name == "antiplurality":
        return Scoring([-1] + [0] * (p - 1))
    raise ScoringError(f"unknown rule {name!r}; expected one of {', '.join(NAMED_RULES)}")

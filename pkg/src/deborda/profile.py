"""Candidates, weighted ballots and preference profiles.

Two input formats are understood.  The line-oriented text form::

    # comment
    2: a > b > c
    6: b > a > c

and a JSON mirror::

    {"candidates": ["a", "b", "c"],
     "ballots": [{"weight": 2, "order": ["a", "b", "c"]}]}

Ballots with identical orders are merged by summing their weights, and the
ballot list is kept sorted by order so equal profiles compare equal.
"""

from __future__ import annotations

import json
import re
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Candidate",
    "Ballot",
    "Profile",
    "ProfileError",
    "parse_profile",
    "parse_profile_json",
    "load_profile",
    "profile_to_canonical_text",
    "profile_to_json",
]

_LABEL_RE = re.compile(r"^[^\s>:#]+$")


class ProfileError(ValueError):
    """Raised for malformed profile input.

    ``line`` is the 1-based source line when the error can be pinned to one.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Candidate:
    id: int
    label: str


@dataclass(frozen=True)
class Ballot:
    """A strict ranking of all candidates (top first) held by ``weight`` voters."""

    order: tuple[int, ...]
    weight: int

    def __post_init__(self):
        if not isinstance(self.weight, int) or isinstance(self.weight, bool) or self.weight < 1:
            raise ProfileError(f"ballot weight must be a positive integer, got {self.weight!r}")
        if sorted(self.order) != list(range(len(self.order))):
            raise ProfileError(f"ballot order {self.order!r} is not a permutation")

    def position(self, a: int) -> int:
        """0-based rank of candidate ``a`` on this ballot (0 is the top)."""
        return self.order.index(a)


@dataclass(frozen=True)
class Profile:
    candidates: tuple[Candidate, ...]
    ballots: tuple[Ballot, ...]
    n: int = field(init=False)

    def __post_init__(self):
        p = len(self.candidates)
        if p < 2:
            raise ProfileError(f"a profile needs at least two candidates, got {p}")
        for i, c in enumerate(self.candidates):
            if c.id != i:
                raise ProfileError(f"candidate ids must be dense 0..p-1, got {c.id} at {i}")
            if not _LABEL_RE.match(c.label):
                raise ProfileError(f"invalid candidate label {c.label!r}")
        labels = [c.label for c in self.candidates]
        if len(set(labels)) != p:
            raise ProfileError("candidate labels must be unique")
        if not self.ballots:
            raise ProfileError("profile has no ballots")
        for b in self.ballots:
            if len(b.order) != p:
                raise ProfileError(f"ballot {b.order!r} does not rank all {p} candidates")
        object.__setattr__(self, "n", sum(b.weight for b in self.ballots))

    @property
    def p(self) -> int:
        return len(self.candidates)

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.candidates]

    def index(self, label: str) -> int:
        for c in self.candidates:
            if c.label == label:
                return c.id
        raise KeyError(f"unknown candidate {label!r}")

    def check_candidate(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.p:
            raise IndexError(f"candidate id {a!r} out of range 0..{self.p - 1}")

    @classmethod
    def from_rankings(cls, labels: Sequence[str], rankings: Iterable[tuple[int, Sequence[str]]]) -> "Profile":
        """Build a profile from ``(weight, [label, ...])`` pairs, merging equal orders."""
        ids = {lab: i for i, lab in enumerate(labels)}
        merged: OrderedDict[tuple[int, ...], int] = OrderedDict()
        for weight, order in rankings:
            key = tuple(ids[lab] for lab in order)
            merged[key] = merged.get(key, 0) + weight
        candidates = tuple(Candidate(i, lab) for i, lab in enumerate(labels))
        return cls(candidates, tuple(Ballot(k, w) for k, w in sorted(merged.items())))


def _parse_weight(token: str, line: int | None) -> int:
    token = token.strip()
    if not re.fullmatch(r"[+-]?\d+", token):
        raise ProfileError(f"weight must be an integer, got {token!r}", line)
    w = int(token)
    if w < 1:
        raise ProfileError(f"weight must be at least 1, got {w}", line)
    return w


def _check_order(order: list[str], line: int | None) -> None:
    seen = set()
    for lab in order:
        if not _LABEL_RE.match(lab):
            raise ProfileError(f"invalid candidate label {lab!r}", line)
        if lab in seen:
            raise ProfileError(f"candidate {lab!r} appears twice in one ballot", line)
        seen.add(lab)


def _assemble(rows: list[tuple[int, list[str], int | None]], labels: list[str] | None) -> Profile:
    if not rows:
        raise ProfileError("empty profile: no ballots")
    if labels is None:
        # text input has no roster line: the first ballot names the candidates,
        # ids follow sorted label order so that the canonical text round-trips
        labels = sorted(rows[0][1])
    roster = set(labels)
    if len(roster) != len(labels):
        raise ProfileError("candidate labels must be unique")
    if len(labels) < 2:
        raise ProfileError(f"a profile needs at least two candidates, got {len(labels)}", rows[0][2])
    for _, order, line in rows:
        for lab in order:
            if lab not in roster:
                raise ProfileError(f"unknown candidate {lab!r}", line)
        if len(order) != len(labels):
            missing = sorted(roster - set(order))
            raise ProfileError(f"ballot does not rank every candidate (missing {', '.join(missing)})", line)
    return Profile.from_rankings(labels, ((w, order) for w, order, _ in rows))


def parse_profile(text: str) -> Profile:
    """Parse the line-oriented ``<weight>: a > b > ...`` format."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ProfileError("expected '<weight>: <label> > <label> ...'", lineno)
        weight_part, order_part = line.split(":", 1)
        weight = _parse_weight(weight_part, lineno)
        order = [tok.strip() for tok in order_part.split(">")]
        if any(not tok for tok in order):
            raise ProfileError("empty candidate label", lineno)
        _check_order(order, lineno)
        rows.append((weight, order, lineno))
    return _assemble(rows, None)


def parse_profile_json(text: str | dict) -> Profile:
    """Parse the JSON mirror of the text format."""
    try:
        doc = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError as exc:
        raise ProfileError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or "ballots" not in doc:
        raise ProfileError("JSON profile must be an object with a 'ballots' list")
    labels = doc.get("candidates")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ProfileError("'candidates' must be a list of labels")
        for lab in labels:
            if not _LABEL_RE.match(lab):
                raise ProfileError(f"invalid candidate label {lab!r}")
    rows = []
    for i, b in enumerate(doc["ballots"], start=1):
        if not isinstance(b, dict) or "order" not in b:
            raise ProfileError(f"ballot #{i} must be an object with 'weight' and 'order'")
        weight = b.get("weight", 1)
        if isinstance(weight, bool) or not isinstance(weight, int):
            raise ProfileError(f"ballot #{i}: weight must be an integer, got {weight!r}")
        if weight < 1:
            raise ProfileError(f"ballot #{i}: weight must be at least 1, got {weight}")
        order = b["order"]
        if not isinstance(order, list) or not all(isinstance(x, str) for x in order):
            raise ProfileError(f"ballot #{i}: 'order' must be a list of labels")
        try:
            _check_order(order, None)
        except ProfileError as exc:
            raise ProfileError(f"ballot #{i}: {exc}") from None
        rows.append((weight, list(order), None))
    return _assemble(rows, labels)


def load_profile(path: str, fmt: str = "text") -> Profile:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "json":
        return parse_profile_json(text)
    if fmt == "text":
        return parse_profile(text)
    raise ValueError(f"unknown profile format {fmt!r}")


def _sorted_ballots(pr: Profile) -> list[tuple[list[str], int]]:
    rows = [([pr.candidates[i].label for i in b.order], b.weight) for b in pr.ballots]
    rows.sort(key=lambda r: r[0])
    return rows


def profile_to_canonical_text(pr: Profile) -> str:
    """Deterministic text rendering; ballots sorted lexicographically by label order."""
    return "".join(f"{w}: {' > '.join(order)}\n" for order, w in _sorted_ballots(pr))


def profile_to_json(pr: Profile) -> dict:
    return {
        "candidates": pr.labels,
        "ballots": [{"weight": w, "order": order} for order, w in _sorted_ballots(pr)],
    }

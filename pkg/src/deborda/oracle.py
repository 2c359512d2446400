"""Brute-force cross-check of the eligibility engine.

Enumerates every integer scoring with ``s_0 = 0`` and top score at most
``bound`` and collects whoever wins under at least one of them.  Anyone
collected this way must also be reported eligible by the LP; the converse
only holds once ``bound`` is large enough, so no equality is promised in
general.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator

from .eligibility import MODES, STRICT, eligible_set
from .profile import Profile
from .tally import Scoring, winners

__all__ = [
    "MAX_SCORINGS",
    "OracleError",
    "OracleReport",
    "compare",
    "count_scorings",
    "enumerate_scorings",
    "oracle_eligible",
]

MAX_SCORINGS = 10**7


class OracleError(ValueError):
    pass


@dataclass
class OracleReport:
    mode: str
    bound: int
    scorings_tried: int = 0
    oracle_eligible: set[int] = field(default_factory=set)
    witnesses: dict[int, Scoring] = field(default_factory=dict)

    def is_sound(self, lp_eligible) -> bool:
        return self.oracle_eligible <= set(lp_eligible)


def count_scorings(p: int, mode: str, bound: int) -> int:
    if mode == STRICT:
        # 0 < s_1 < ... < s_{p-1} <= bound
        return math.comb(bound, p - 1)
    # 0 <= s_1 <= ... <= s_{p-1} <= bound, minus the all-zero vector
    return math.comb(bound + p - 1, p - 1) - 1


def enumerate_scorings(p: int, mode: str, bound: int) -> Iterator[Scoring]:
    """Scorings in lexicographic order of ``(s_1, ..., s_{p-1})``."""
    if mode == STRICT:
        tails = itertools.combinations(range(1, bound + 1), p - 1)
    else:
        tails = (t for t in itertools.combinations_with_replacement(range(bound + 1), p - 1) if t[-1] >= 1)
    for tail in tails:
        yield Scoring((0,) + tail)


def oracle_eligible(pr: Profile, mode: str, bound: int) -> OracleReport:
    if mode not in MODES:
        raise OracleError(f"unknown mode {mode!r}")
    if bound < 1:
        raise OracleError(f"bound must be at least 1, got {bound}")
    total = count_scorings(pr.p, mode, bound)
    if total > MAX_SCORINGS:
        raise OracleError(f"{total} scorings to enumerate exceeds the limit of {MAX_SCORINGS}")
    report = OracleReport(mode, bound)
    for s in enumerate_scorings(pr.p, mode, bound):
        report.scorings_tried += 1
        for a in winners(pr, s).winners:
            if a not in report.oracle_eligible:
                report.oracle_eligible.add(a)
                report.witnesses[a] = s
    return report


def compare(pr: Profile, report: OracleReport) -> dict:
    lp = eligible_set(pr, report.mode)
    return {
        "lp_eligible": sorted(lp),
        "subset": report.is_sound(lp),
        "equal": report.oracle_eligible == set(lp),
    }

"""Which candidates can win under some de Borda scoring.

For a scoring with ``s_0 = 0`` the estimate of ``a`` is ``w . r(a)`` where
``w_k = s_{p-k} - s_{p-k-1}`` is the weight the scoring puts on the k-th
cumulative count.  So ``a`` wins under some scoring of a family exactly when
some admissible ``w`` makes ``r(a)`` a maximizer of ``w . r`` over the score
vectors of all candidates:

* strict family (``s_0 < s_1 < ... < s_{p-1}``): every ``w_k > 0``;
* weak family (nondecreasing with ``s_0 < s_{p-1}``): ``w >= 0``, ``w != 0``.

When no such ``w`` exists, the LP dual produces a convex combination of the
other candidates' score vectors that dominates ``r(a)``: componentwise and
somewhere strictly for the strict family, strictly in every component for the
weak family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .profile import Profile
from .ratlp import EQ, GE, LinearProgram, solve
from .scorevec import score_set
from .tally import Scoring, winners

__all__ = [
    "STRICT",
    "WEAK",
    "MODES",
    "ConsistencyError",
    "DominanceCertificate",
    "EligibilityVerdict",
    "eligible",
    "eligible_set",
    "witness_scoring",
    "check_differences",
    "find_certificate",
    "dominance_certificate",
    "verify_certificate",
]

STRICT, WEAK = "strict", "weak"
MODES = (STRICT, WEAK)


class ConsistencyError(RuntimeError):
    """The witness and certificate computations disagree; indicates a bug."""


@dataclass(frozen=True)
class DominanceCertificate:
    """``point = sum(weights[x] * r(x))`` dominates ``r(candidate)`` in the mode's sense."""

    candidate: int
    mode: str
    weights: dict[int, Fraction]
    point: tuple[Fraction, ...]
    margin: Fraction  # total surplus (strict) or smallest per-component surplus (weak)


@dataclass(frozen=True)
class EligibilityVerdict:
    candidate: int
    mode: str
    eligible: bool
    witness: Optional[Scoring] = None
    differences: Optional[tuple[Fraction, ...]] = None
    certificate: Optional[DominanceCertificate] = None


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be 'strict' or 'weak', got {mode!r}")


def check_differences(d: Sequence[Fraction], mode: str) -> None:
    _check_mode(mode)
    if not d:
        raise ValueError("empty difference vector")
    if mode == STRICT:
        if any(x <= 0 for x in d):
            raise ValueError(f"strict mode needs every difference positive, got {list(map(str, d))}")
    else:
        if any(x < 0 for x in d) or sum(d) <= 0:
            raise ValueError(f"weak mode needs nonnegative differences with positive sum, got {list(map(str, d))}")


def witness_scoring(d: Sequence, mode: str = STRICT) -> Scoring:
    """Integer scoring ``(0, d_1, d_1 + d_2, ...)``, cleared of denominators and reduced."""
    d = [Fraction(x) for x in d]
    check_differences(d, mode)
    s = [Fraction(0)]
    for x in d:
        s.append(s[-1] + x)
    scale = math.lcm(*(x.denominator for x in s))
    ints = [int(x * scale) for x in s]
    g = math.gcd(*ints)
    return Scoring(v // g for v in ints)


def _witness_lp(r: dict[int, tuple[int, ...]], a: int, mode: str) -> LinearProgram:
    m = len(r[a])
    if mode == STRICT:
        # w_k >= 1 stands in for w_k > 0: the domination rows are homogeneous
        lp = LinearProgram([-1] * m, lower=[1] * m)
    else:
        lp = LinearProgram([0] * m, lower=[0] * m)
        lp.add([1] * m, EQ, 1)
    for x, rx in r.items():
        if x == a or rx == r[a]:
            continue
        lp.add([ra - rb for ra, rb in zip(r[a], rx)], GE, 0)
    return lp


def _certificate_lp(r: dict[int, tuple[int, ...]], a: int, mode: str) -> tuple[LinearProgram, list[int]]:
    rivals = [x for x in sorted(r) if x != a]
    m = len(r[a])
    q = len(rivals)
    if mode == STRICT:
        # variables: lambda_x (x in rivals), then t_k >= 0
        lp = LinearProgram([0] * q + [1] * m, lower=[0] * (q + m))
        for k in range(m):
            row = [r[x][k] for x in rivals] + [0] * m
            row[q + k] = -1
            lp.add(row, EQ, r[a][k])
    else:
        # variables: lambda_x, then a free margin eps
        lp = LinearProgram([0] * q + [1], lower=[0] * q + [None])
        for k in range(m):
            lp.add([r[x][k] for x in rivals] + [-1], GE, r[a][k])
    lp.add([1] * q + [0] * (len(lp.objective) - q), EQ, 1)
    return lp, rivals


def verify_certificate(pr: Profile, cert: DominanceCertificate) -> bool:
    """Check a certificate from scratch against freshly computed score vectors."""
    r = score_set(pr)
    a = cert.candidate
    if any(w < 0 for w in cert.weights.values()) or sum(cert.weights.values()) != 1:
        return False
    if any(x not in r for x in cert.weights):
        return False
    m = len(r[a])
    y = tuple(sum((w * r[x][k] for x, w in cert.weights.items()), Fraction(0)) for k in range(m))
    if y != tuple(cert.point):
        return False
    if cert.mode == STRICT:
        return all(yk >= rk for yk, rk in zip(y, r[a])) and y != tuple(r[a])
    return all(yk > rk for yk, rk in zip(y, r[a]))


def find_certificate(pr: Profile, a: int, mode: str) -> Optional[DominanceCertificate]:
    """Search for a dominating convex combination; ``None`` if there is none."""
    pr.check_candidate(a)
    _check_mode(mode)
    r = score_set(pr)
    lp, rivals = _certificate_lp(r, a, mode)
    out = solve(lp)
    if not out.optimal or out.value <= 0:
        return None
    q = len(rivals)
    weights = {x: lam for x, lam in zip(rivals, out.x[:q]) if lam}
    m = len(r[a])
    point = tuple(sum((w * r[x][k] for x, w in weights.items()), Fraction(0)) for k in range(m))
    cert = DominanceCertificate(a, mode, weights, point, out.value)
    if not verify_certificate(pr, cert):
        raise ConsistencyError(f"certificate for candidate {a} ({mode}) failed re-substitution")
    return cert


def dominance_certificate(pr: Profile, a: int, mode: str) -> DominanceCertificate:
    cert = find_certificate(pr, a, mode)
    if cert is None:
        raise ConsistencyError(f"candidate {a} has no dominance certificate in {mode} mode (it is eligible)")
    return cert


def eligible(pr: Profile, a: int, mode: str = STRICT) -> EligibilityVerdict:
    """Decide whether ``a`` wins under some scoring of the given family."""
    pr.check_candidate(a)
    _check_mode(mode)
    r = score_set(pr)
    out = solve(_witness_lp(r, a, mode))
    if out.optimal:
        weights = out.x
        d = tuple(reversed(weights))
        s = witness_scoring(d, mode)
        if a not in winners(pr, s).winners:
            raise ConsistencyError(f"witness {s} does not make candidate {a} a winner")
        return EligibilityVerdict(a, mode, True, witness=s, differences=d)
    cert = find_certificate(pr, a, mode)
    if cert is None:
        raise ConsistencyError(f"candidate {a} ({mode}): neither a witness nor a certificate was found")
    return EligibilityVerdict(a, mode, False, certificate=cert)


def eligible_set(pr: Profile, mode: str = STRICT) -> frozenset[int]:
    return frozenset(c.id for c in pr.candidates if eligible(pr, c.id, mode).eligible)

"""Cumulative placement counts ("score vectors") and the point set they form.

``r_k(a)`` is the number of voters ranking ``a`` among their top ``k``
candidates, for ``k = 1..p-1``.  The ``k = p`` count is always ``n`` and is
left out.  For a scoring with ``s_0 = 0`` the estimate of ``a`` is the linear
form ``sum_k (s_{p-k} - s_{p-k-1}) * r_k(a)``, which is what ties the
geometry of these vectors to the winner sets.
"""

from __future__ import annotations

from .profile import Profile

__all__ = ["score_vector", "score_set"]


def score_vector(pr: Profile, a: int) -> tuple[int, ...]:
    pr.check_candidate(a)
    p = pr.p
    at_position = [0] * p
    for b in pr.ballots:
        at_position[b.position(a)] += b.weight
    r = []
    running = 0
    for k in range(p - 1):
        running += at_position[k]
        r.append(running)
    return tuple(r)


def score_set(pr: Profile) -> dict[int, tuple[int, ...]]:
    """Score vectors of every candidate, keyed by candidate id."""
    return {c.id: score_vector(pr, c.id) for c in pr.candidates}

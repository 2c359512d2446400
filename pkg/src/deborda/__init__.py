"""Exact eligibility analysis for generalized de Borda (positional scoring) rules."""

from .eligibility import (
    STRICT,
    WEAK,
    ConsistencyError,
    DominanceCertificate,
    EligibilityVerdict,
    dominance_certificate,
    eligible,
    eligible_set,
    find_certificate,
    verify_certificate,
    witness_scoring,
)
from .oracle import OracleReport, oracle_eligible
from .plot import hull_document, render_svg
from .profile import Ballot, Candidate, Profile, ProfileError, parse_profile, parse_profile_json, profile_to_canonical_text
from .scorevec import score_set, score_vector
from .tally import Scoring, ScoringError, Tally, borda_estimate, named_scoring, normalize_scoring, winners

__version__ = "0.1.0"

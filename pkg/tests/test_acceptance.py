"""Exit criteria.  Each test is one criterion; a PASS/FAIL line per criterion
is printed in the terminal summary."""

import json
import random
import time
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from deborda.cli import main
from deborda.eligibility import STRICT, WEAK, eligible, eligible_set, find_certificate, verify_certificate
from deborda.oracle import oracle_eligible
from deborda.profile import parse_profile
from deborda.scorevec import score_set, score_vector
from deborda.tally import borda_estimate, named_scoring, winners
from helpers import SHAPOVALOV, random_profile, random_scoring

A, B, C = 0, 1, 2


def _profiles(seed, count, p_choices, n_max):
    rng = random.Random(seed)
    return [random_profile(rng, rng.choice(p_choices), n_max) for _ in range(count)]


IDENTITY_PROFILES = _profiles(101, 1000, [2, 3, 4, 5], 20)
DUALITY_PROFILES = _profiles(202, 500, [2, 3, 4], 12)
ORACLE_PROFILES = _profiles(303, 200, [2, 3, 4], 10)


@pytest.mark.acceptance("1 golden profile: score vectors, strict/weak eligible sets, certificate for b")
def test_criterion_1_golden():
    start = time.perf_counter()
    pr = parse_profile(SHAPOVALOV)
    assert score_set(pr) == {A: (2, 15), B: (6, 9), C: (8, 8)}
    for mode in (STRICT, WEAK):
        verdicts = [eligible(pr, a, mode) for a in range(3)]
        assert {v.candidate for v in verdicts if v.eligible} == {A, C}
        vb = verdicts[B]
        assert not vb.eligible
        assert verify_certificate(pr, vb.certificate)
        for v in verdicts:
            if v.eligible:
                assert v.candidate in winners(pr, v.witness).winners
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("2 classical rules on the golden profile")
def test_criterion_2_classical_rules():
    start = time.perf_counter()
    pr = parse_profile(SHAPOVALOV)
    std = winners(pr, named_scoring("standard", 3))
    assert std.winners == {A}
    assert std.estimates == {A: 17, B: 15, C: 16}
    assert winners(pr, named_scoring("plurality", 3)).winners == {C}
    assert winners(pr, named_scoring("antiplurality", 3)).winners == {A}
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("3 estimate identity on 1000 random profiles")
def test_criterion_3_estimate_identity():
    rng = random.Random(404)
    failures = 0
    checked = 0
    for pr in IDENTITY_PROFILES:
        p = pr.p
        s = random_scoring(rng, p)
        assert s[0] == 0
        d = s.differences()  # d[j-1] = s_j - s_{j-1}
        for a in range(p):
            r = score_vector(pr, a)
            via_vectors = sum((d[p - k - 1] * r[k - 1] for k in range(1, p)), Fraction(0))
            if borda_estimate(pr, s, a) != via_vectors:
                failures += 1
            checked += 1
    assert len(IDENTITY_PROFILES) >= 1000
    assert {pr.p for pr in IDENTITY_PROFILES} == {2, 3, 4, 5}
    assert max(pr.n for pr in IDENTITY_PROFILES) <= 20
    assert failures == 0, f"{failures} of {checked} estimates disagree"


@pytest.mark.acceptance("4 witness/certificate duality on 500 random profiles")
def test_criterion_4_duality():
    failures = []
    for idx, pr in enumerate(DUALITY_PROFILES):
        for mode in (STRICT, WEAK):
            for a in range(pr.p):
                v = eligible(pr, a, mode)
                cert = find_certificate(pr, a, mode)
                has_witness = v.witness is not None
                has_cert = cert is not None
                if has_witness == has_cert or v.eligible != has_witness:
                    failures.append((idx, mode, a, "both or neither"))
                    continue
                if has_witness:
                    ok = a in winners(pr, v.witness).winners and (mode == WEAK or v.witness.is_strict)
                else:
                    ok = verify_certificate(pr, cert) and verify_certificate(pr, v.certificate)
                if not ok:
                    failures.append((idx, mode, a, "invalid"))
    assert len(DUALITY_PROFILES) >= 500
    assert max(pr.p for pr in DUALITY_PROFILES) <= 4
    assert max(pr.n for pr in DUALITY_PROFILES) <= 12
    assert not failures, failures[:5]


@pytest.mark.acceptance("5 oracle soundness on 200 random profiles, golden equality at M=20, < 60 s")
def test_criterion_5_oracle():
    start = time.perf_counter()
    rng = random.Random(505)
    failures = []
    for idx, pr in enumerate(ORACLE_PROFILES):
        bound = rng.randint(1, 6)
        for mode in (STRICT, WEAK):
            report = oracle_eligible(pr, mode, bound)
            if not report.oracle_eligible <= eligible_set(pr, mode):
                failures.append((idx, mode, bound))
            for a, s in report.witnesses.items():
                if a not in winners(pr, s).winners:
                    failures.append((idx, mode, bound, a))
    golden = parse_profile(SHAPOVALOV)
    for mode in (STRICT, WEAK):
        assert oracle_eligible(golden, mode, 20).oracle_eligible == eligible_set(golden, mode) == {A, C}
    elapsed = time.perf_counter() - start
    assert not failures, failures[:5]
    assert max(pr.n for pr in ORACLE_PROFILES) <= 10
    assert elapsed < 60.0, f"oracle suite took {elapsed:.1f} s"


@pytest.mark.acceptance("6 structural invariants: monotone vectors, column sums, translation/scaling")
def test_criterion_6_structure():
    rng = random.Random(606)
    failures = 0
    for pr in IDENTITY_PROFILES + DUALITY_PROFILES + ORACLE_PROFILES:
        r = score_set(pr)
        for v in r.values():
            if any(x > y for x, y in zip(v, v[1:])):
                failures += 1
        for k in range(pr.p - 1):
            if sum(v[k] for v in r.values()) != (k + 1) * pr.n:
                failures += 1
        s = random_scoring(rng, pr.p)
        base = winners(pr, s).winners
        shift = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        factor = Fraction(rng.randint(1, 30), rng.randint(1, 7))
        if winners(pr, s.shifted(shift)).winners != base:
            failures += 1
        if winners(pr, s.scaled(factor)).winners != base:
            failures += 1
        if not base:
            failures += 1
    assert failures == 0


@pytest.mark.acceptance("7 plot: Pareto edge (2,15)-(8,8) and boundary {a, c}")
def test_criterion_7_plot(tmp_path, capsys):
    profile = tmp_path / "shap.txt"
    profile.write_text(SHAPOVALOV)
    svg_path = tmp_path / "hull.svg"
    assert main(["plot", "--profile", str(profile), "-o", str(svg_path)]) == 0
    capsys.readouterr()
    root = ET.parse(svg_path).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    edges = [(e.get("data-from"), e.get("data-to")) for e in root.iter(f"{ns}line") if e.get("class") == "pareto"]
    assert edges == [("2,15", "8,8")]
    twin = json.loads((tmp_path / "hull.json").read_text())
    boundary_vectors = {tuple(twin["points"][lab]) for lab in twin["boundary"]}
    assert twin["boundary"] == ["a", "c"]
    assert boundary_vectors == {(2, 15), (8, 8)}

"""Command-line interface.

Exit status: 0 success, 1 domain error (bad profile, failed check, eligible
candidate passed to ``certify``), 2 usage error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .eligibility import MODES, ConsistencyError, DominanceCertificate, EligibilityVerdict, eligible, find_certificate
from .oracle import OracleError, compare, oracle_eligible
from .plot import PlotError, hull_document, render_svg
from .profile import Profile, ProfileError, load_profile
from .ratlp import LpError
from .scorevec import score_set
from .tally import NAMED_RULES, Scoring, ScoringError, named_scoring, winners

log = logging.getLogger("deborda")

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def rational(q) -> int | str:
    """JSON form of an exact number: bare int, or reduced ``"p/q"`` string."""
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_scoring(text: str) -> Scoring:
    tokens = [t.strip() for t in text.split(",")]
    if any(not t for t in tokens):
        raise UsageError(f"malformed --scoring {text!r}")
    values = []
    for t in tokens:
        if "." in t or "e" in t.lower():
            raise UsageError(f"--scoring accepts integers or p/q rationals, got {t!r}")
        try:
            values.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--scoring accepts integers or p/q rationals, got {t!r}") from None
    return Scoring(values)


def certificate_json(pr: Profile, cert: DominanceCertificate) -> dict:
    return {
        "candidate": pr.candidates[cert.candidate].label,
        "mode": cert.mode,
        "weights": {pr.candidates[x].label: rational(w) for x, w in cert.weights.items()},
        "point": [rational(v) for v in cert.point],
        "margin": rational(cert.margin),
    }


def verdict_json(pr: Profile, v: EligibilityVerdict) -> dict:
    out = {"candidate": pr.candidates[v.candidate].label, "mode": v.mode, "eligible": v.eligible}
    if v.eligible:
        out["witness"] = [rational(x) for x in v.witness]
        out["differences"] = [rational(x) for x in v.differences]
    else:
        out["certificate"] = certificate_json(pr, v.certificate)
    return out


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _candidate(pr: Profile, label: str) -> int:
    try:
        return pr.index(label)
    except KeyError:
        raise ProfileError(f"unknown candidate {label!r}") from None


def cmd_winners(pr: Profile, args) -> int:
    if args.scoring is not None:
        s = parse_scoring(args.scoring)
    else:
        s = named_scoring(args.rule, pr.p)
    t = winners(pr, s)
    _emit(
        {
            "scoring": [rational(x) for x in s],
            "strictness": s.strictness,
            "estimates": {pr.candidates[a].label: rational(v) for a, v in t.estimates.items()},
            "winners": sorted(pr.candidates[a].label for a in t.winners),
        }
    )
    return EXIT_OK


def cmd_score_vectors(pr: Profile, args) -> int:
    _emit({pr.candidates[a].label: list(v) for a, v in score_set(pr).items()})
    return EXIT_OK


def cmd_eligible(pr: Profile, args) -> int:
    ids = [_candidate(pr, args.candidate)] if args.candidate else [c.id for c in pr.candidates]
    verdicts = [eligible(pr, a, args.mode) for a in ids]
    _emit(
        {
            "mode": args.mode,
            "eligible": sorted(pr.candidates[v.candidate].label for v in verdicts if v.eligible),
            "verdicts": {pr.candidates[v.candidate].label: verdict_json(pr, v) for v in verdicts},
        }
    )
    return EXIT_OK


def cmd_certify(pr: Profile, args) -> int:
    a = _candidate(pr, args.candidate)
    cert = find_certificate(pr, a, args.mode)
    if cert is None:
        print(f"candidate {args.candidate!r} is eligible in {args.mode} mode; no certificate exists", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(certificate_json(pr, cert))
    return EXIT_OK


def cmd_oracle_check(pr: Profile, args) -> int:
    report = oracle_eligible(pr, args.mode, args.bound)
    cmp = compare(pr, report)
    ok = cmp["subset"] and (cmp["equal"] or not args.require_equal)
    doc = {
        "mode": report.mode,
        "bound": report.bound,
        "scorings_tried": report.scorings_tried,
        "oracle_eligible": sorted(pr.candidates[a].label for a in report.oracle_eligible),
        "lp_eligible": [pr.candidates[a].label for a in cmp["lp_eligible"]],
        "witnesses": {pr.candidates[a].label: [rational(x) for x in s] for a, s in report.witnesses.items()},
        "subset": "PASS" if cmp["subset"] else "FAIL",
        "equal": "PASS" if cmp["equal"] else "FAIL",
        "result": "PASS" if ok else "FAIL",
    }
    _emit(doc)
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_plot(pr: Profile, args) -> int:
    doc = hull_document(pr)
    svg = render_svg(doc)
    base, _ = os.path.splitext(args.output)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    with open(base + ".json", "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")
    log.info("wrote %s and %s.json", args.output, base)
    _emit(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", required=True, metavar="PATH", help="profile file")
    common.add_argument("--format", choices=("text", "json"), default="text", help="profile file format")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="deborda",
        description="Exact eligibility analysis for generalized de Borda scoring rules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("winners", parents=[common], help="estimates and winners under one scoring")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--scoring", help='comma-separated scores, bottom first, e.g. "0,1,2" or "0,1/2,1"')
    src.add_argument("--rule", choices=NAMED_RULES)
    p.set_defaults(func=cmd_winners)

    p = sub.add_parser("score-vectors", parents=[common], help="cumulative placement counts per candidate")
    p.set_defaults(func=cmd_score_vectors)

    p = sub.add_parser("eligible", parents=[common], help="eligibility verdicts with witnesses or certificates")
    p.add_argument("--mode", choices=MODES, default="strict")
    p.add_argument("--candidate", metavar="LABEL")
    p.set_defaults(func=cmd_eligible)

    p = sub.add_parser("certify", parents=[common], help="dominance certificate for an ineligible candidate")
    p.add_argument("--candidate", metavar="LABEL", required=True)
    p.add_argument("--mode", choices=MODES, default="strict")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle-check", parents=[common], help="brute-force cross-check over bounded integer scorings")
    p.add_argument("--mode", choices=MODES, default="strict")
    p.add_argument("--bound", type=int, default=20, metavar="M")
    p.add_argument("--require-equal", action="store_true", help="also fail unless the oracle set equals the LP set")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("plot", parents=[common], help="SVG of the score vectors and their hull (p=3)")
    p.add_argument("-o", "--output", default="hull.svg", metavar="PATH")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        pr = load_profile(args.profile, args.format)
    except OSError as exc:
        print(f"deborda: cannot read profile: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProfileError as exc:
        print(f"deborda: {args.profile}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        return args.func(pr, args)
    except UsageError as exc:
        print(f"deborda: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"deborda: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ProfileError, ScoringError, OracleError, PlotError, LpError) as exc:
        print(f"deborda: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"deborda: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

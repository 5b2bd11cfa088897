"""Command-line front end.

Commands: validate, run, generate, curve, search, suite.  Exit codes:
0 success, 1 check failure, 2 usage or parse error.  Infinite distortions
are always spelled "inf"; exact rationals render as "p/q" with decimals
alongside.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .distortion import (
    DistortionValue,
    ab_distortion,
    av_bound,
    distance_distortion,
    immune_ab_bound,
    scoring_ab_bound,
    stv_ab_bound,
    worst_ranking_ab_distortion,
)
from .errors import MetricVoteError, ParseError
from .fileformat import instance_digest, parse_instance, serialize_instance
from .generators import (
    evaluate_certificate_rule,
    gen_av_degenerate,
    gen_av_hard,
    gen_condorcet_hard,
    gen_copeland_hard,
    gen_ell1_pair,
    gen_plurality_hard,
    gen_scoring_hard,
    gen_smith_cycle,
    gen_stv_hard_1d,
    gen_stv_hard_simplex,
    verify_certificate,
)
from .majority import majority_matrix, smith_set
from .model import (
    efficiency_fraction,
    induced_ranking,
    is_globally_consistent,
    is_locally_consistent,
    truthful_approvals,
    validate_instance,
)
from .numerics import decode_number, render_number
from .rules import RANKING_RULES, ScoringVector, av_winner, k_approval_rule, scoring_winner
from .search import SearchConfig, adversarial_search
from .suite import acceptance_suite, property_suite


def _distortion_json(value: DistortionValue) -> dict:
    doc = {"value": "inf" if value.is_infinite else float(value)}
    doc["exact"] = value.render() if value.exact else None
    return doc


def _rule_outcome(instance, rule_name: str, k: int, profile=None):
    if rule_name == "av":
        return av_winner(truthful_approvals(instance), instance.lex)
    if profile is None:
        profile = induced_ranking(instance)
    if rule_name == "k-approval":
        return k_approval_rule(k)(profile, instance.lex)
    if rule_name not in RANKING_RULES:
        raise MetricVoteError(f"unknown rule {rule_name!r}")
    return RANKING_RULES[rule_name](profile, instance.lex)


def _applicable_bound(instance, rule_name: str, k: int) -> DistortionValue:
    m = instance.m
    if rule_name == "av":
        profile = truthful_approvals(instance)
        from .distortion import optimal_by_distance

        c_opt, _ = optimal_by_distance(instance)
        return av_bound(efficiency_fraction(instance, profile, c_opt))
    if rule_name == "plurality":
        return DistortionValue(Fraction(m - 1, m))
    if rule_name in ("veto", "borda"):
        vector = ScoringVector.veto(m) if rule_name == "veto" else ScoringVector.borda(m)
        return DistortionValue(scoring_ab_bound(vector))
    if rule_name == "k-approval":
        return DistortionValue(scoring_ab_bound(ScoringVector.k_approval(k, m)))
    if rule_name == "stv":
        return DistortionValue(stv_ab_bound(m))
    if rule_name in ("ranked-pairs", "schulze"):
        ell = len(smith_set(majority_matrix(induced_ranking(instance))))
        return DistortionValue(immune_ab_bound(ell))
    if rule_name == "copeland":
        ell = len(smith_set(majority_matrix(induced_ranking(instance))))
        return DistortionValue(Fraction(1) if ell > 1 else Fraction(1, 2))
    return DistortionValue.infinite()


def cmd_validate(args) -> int:
    try:
        instance, certificate = parse_instance(Path(args.path).read_text())
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, MetricVoteError) as exc:
        print(f"invalid: {exc}")
        return 1
    problems = validate_instance(instance)
    truthful = None
    if not problems:
        truthful = truthful_approvals(instance)
        local = is_locally_consistent(instance, truthful)
        global_ = is_globally_consistent(instance, truthful)
        level = "global" if global_ else ("local" if local else "inconsistent")
        print(f"metric: valid ({instance.n} voters, {instance.m} candidates)")
        print(f"consistency: {level}")
        print("approvals: nonempty")
        if not local:
            problems.append("truthful approvals are not locally consistent")
    if certificate is not None and not problems:
        cert_problems = verify_certificate(instance, certificate)
        if cert_problems:
            problems.extend(f"certificate: {p}" for p in cert_problems)
        else:
            print("certificate: verified")
    for problem in problems:
        print(f"invalid: {problem}")
    return 1 if problems else 0


def cmd_run(args) -> int:
    try:
        instance, certificate = parse_instance(Path(args.path).read_text())
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    outcome = _rule_outcome(instance, args.rule, args.k)
    record = {
        "instance": instance_digest(instance),
        "rule": args.rule,
        "winner": instance.name_of(outcome.winner),
        "tied": sorted(instance.name_of(c) for c in outcome.tied_set),
        "distance_distortion": _distortion_json(
            distance_distortion(instance, outcome.winner)
        ),
        "ab_distortion": _distortion_json(ab_distortion(instance, outcome.winner)),
        "bound": _distortion_json(_applicable_bound(instance, args.rule, args.k)),
    }
    if args.enumerate_ties and args.rule != "av":
        rule = (
            k_approval_rule(args.k)
            if args.rule == "k-approval"
            else RANKING_RULES[args.rule]
        )
        worst = worst_ranking_ab_distortion(instance, rule)
        record["worst_profile_ab"] = _distortion_json(worst.value)
        record["worst_profile_exhaustive"] = worst.exhaustive
    failed = False
    if certificate is not None:
        problems = verify_certificate(instance, certificate)
        record["certificate"] = "pass" if not problems else problems
        failed = bool(problems)
    print(json.dumps(record, indent=2, sort_keys=True))
    return 1 if failed else 0


def _write_instance(instance, certificate, out: str) -> None:
    text = serialize_instance(instance, certificate)
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        print(f"wrote {out}")


def cmd_generate(args) -> int:
    family = args.family
    out = args.out
    if family == "av-degenerate":
        instance, cert = gen_av_degenerate(args.n)
    elif family == "av-hard":
        instance, cert = gen_av_hard(
            Fraction(args.p), args.n, Fraction(args.eps), args.regime
        )
    elif family == "smith-cycle":
        instance, cert = gen_smith_cycle(args.ell, args.n, args.shift)
    elif family == "ell1-pair":
        first, second = gen_ell1_pair(args.n)
        base = Path(out if out != "-" else "ell1-pair.json")
        for suffix, inst in (("-1", first), ("-2", second)):
            path = base.with_name(base.stem + suffix + base.suffix)
            _write_instance(inst, None, str(path))
        return 0
    elif family == "condorcet":
        instance, cert = gen_condorcet_hard(args.n)
    elif family == "copeland":
        instance, cert = gen_copeland_hard(args.n)
    elif family == "plurality":
        instance, cert = gen_plurality_hard(args.m, args.n, Fraction(args.eps))
    elif family == "scoring":
        scores = tuple(decode_number(s) for s in args.scores.split(","))
        instance, cert = gen_scoring_hard(
            ScoringVector(scores), args.n, Fraction(args.eps)
        )
    elif family == "stv-1d":
        instance, cert = gen_stv_hard_1d(args.m, args.n)
    elif family == "stv-simplex":
        instance, cert = gen_stv_hard_simplex(args.m, args.n)
    else:
        raise MetricVoteError(f"unknown family {family!r}")
    _write_instance(instance, cert, out)
    return 0


def cmd_curve(args) -> int:
    samples = args.samples
    if samples < 2:
        print("samples must be at least 2", file=sys.stderr)
        return 2
    grid = {Fraction(k, samples) for k in range(1, samples)}
    grid |= {Fraction(1, 4), Fraction(1, 2)}
    rows = [Fraction(0)] + sorted(grid) + [Fraction(1)]
    lines = ["p,bound,p_decimal,bound_decimal"]
    for p in rows:
        bound = av_bound(p)
        decimal = "inf" if bound.is_infinite else repr(float(bound))
        lines.append(f"{render_number(p)},{bound.render()},{float(p)!r},{decimal}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    return 0


def cmd_search(args) -> int:
    grid: tuple = ()
    if args.grid:
        grid = tuple(decode_number(v) for v in args.grid.split(","))
    config = SearchConfig(
        rule=args.rule,
        objective=args.objective,
        n=args.n,
        m=args.m,
        dimension=args.dimension,
        grid=grid,
        p_target=Fraction(args.p) if args.p else None,
        iterations=args.budget,
        seed=args.seed,
    )
    result = adversarial_search(config)
    record = {
        "rule": config.rule,
        "objective": config.objective,
        "achieved": _distortion_json(result.achieved),
        "bound": _distortion_json(result.bound),
        "bound_violation": result.bound_violation,
        "evaluations": result.evaluations,
    }
    if result.best_instance is not None:
        record["instance"] = instance_digest(result.best_instance)
        if args.out:
            _write_instance(result.best_instance, None, args.out)
    print(json.dumps(record, indent=2, sort_keys=True))
    return 1 if result.bound_violation else 0


def cmd_suite(args) -> int:
    if args.name == "acceptance":
        results = acceptance_suite()
    else:
        results = property_suite(seed=args.seed)
    for result in sorted(results, key=lambda r: r.name):
        print(result.line())
    failures = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metricvote",
        description="Metric elections: rules, distortion, hard instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("run", help="evaluate a rule and report distortions")
    p.add_argument("path")
    p.add_argument("--rule", required=True,
                   choices=sorted(RANKING_RULES) + ["av", "k-approval"])
    p.add_argument("--k", type=int, default=1, help="k for k-approval")
    p.add_argument("--enumerate-ties", action="store_true",
                   help="worst acceptability shortfall over all induced profiles")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("generate", help="emit a hard instance with certificate")
    p.add_argument("family", choices=[
        "av-degenerate", "av-hard", "smith-cycle", "ell1-pair", "condorcet",
        "copeland", "plurality", "scoring", "stv-1d", "stv-simplex",
    ])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--shift", type=int, default=1)
    p.add_argument("--p", default="1/4")
    p.add_argument("--regime", choices=["low", "mid", "high"], default="mid")
    p.add_argument("--eps", default="1/10000")
    p.add_argument("--scores", default="2,1,0",
                   help="comma-separated scoring vector for the scoring family")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("curve", help="export the approval-voting bound curve")
    p.add_argument("samples", type=int)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("search", help="adversarial search against a bound")
    p.add_argument("--rule", required=True,
                   choices=sorted(RANKING_RULES) + ["av"])
    p.add_argument("--objective", choices=["distance", "ab"], default="ab")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--dimension", type=int, default=1, choices=[1, 2])
    p.add_argument("--grid", default="")
    p.add_argument("--p", default="", help="pin the approval fraction (av only)")
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("suite", help="run the acceptance or property checks")
    p.add_argument("name", choices=["acceptance", "properties"])
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MetricVoteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance and property check suites.

Each check returns a CheckResult so the CLI and the test suite share one
implementation.  The property suite draws seeded random one-dimensional
integer instances and verifies the structural guarantees that hold for
every instance (oracle agreement, immunity/Smith containment, the
closed-form acceptability bounds).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .distortion import (
    ab_distortion,
    av_bound,
    av_distortion_sweep,
    best_case_av_profile,
    condorcet_ab_bound,
    distance_distortion,
    immune_ab_bound,
    optimal_by_distance,
    plurality_ab_bound,
    quarter_radius_profile,
    scoring_ab_bound,
    stv_ab_bound,
    sweep_max_distortion,
)
from .generators import (
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
from .majority import (
    condorcet_winner,
    beatpath_strengths,
    immunity_set,
    majority_matrix,
    smith_set,
)
from .model import (
    ElectionInstance,
    approval_count,
    approvals_at_radius,
    euclidean_instance,
    induced_ranking,
    is_globally_consistent,
    truthful_approvals,
)
from .rules import (
    RANKING_RULES,
    ScoringVector,
    av_winner,
    copeland_winner,
    k_approval_rule,
    ranked_pairs_winner,
    schulze_winner,
    scoring_winner,
    stv_winner,
)
from .search import SearchConfig, adversarial_search, oracle_beatpaths, oracle_smith


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    achieved: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: expected {self.expected}, achieved {self.achieved}"


def random_line_instance(rng: random.Random, max_n: int = 9, max_m: int = 5,
                         span: int = 12) -> ElectionInstance:
    """Random 1D integer instance; radii are per-voter distance breakpoints
    so every ball is nonempty by construction."""
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    candidates = [rng.randint(0, span) for _ in range(m)]
    voters = []
    for _ in range(n):
        pos = rng.randint(0, span)
        radius = rng.choice(sorted(abs(pos - c) for c in candidates))
        voters.append((pos, 1, radius))
    lex = list(range(m))
    rng.shuffle(lex)
    return euclidean_instance(candidates, voters, lex=lex)


# ---------------------------------------------------------------------------
# Acceptance criteria
# ---------------------------------------------------------------------------

def check_av_bound_curve() -> list[CheckResult]:
    cases = [
        (Fraction(1, 8), Fraction(7)),
        (Fraction(1, 4), Fraction(3)),
        (Fraction(3, 8), Fraction(3)),
        (Fraction(1, 2), Fraction(3)),
        (Fraction(3, 4), Fraction(5)),
    ]
    results = []
    for p, expected in cases:
        got = av_bound(p)
        results.append(
            CheckResult(
                f"av-bound p={p}", got.exact and got.value == expected,
                str(expected), got.render(),
            )
        )
    for p in (0, 1):
        got = av_bound(p)
        results.append(
            CheckResult(f"av-bound p={p}", got.is_infinite, "inf", got.render())
        )
    return results


def check_av_hard_instances() -> list[CheckResult]:
    cases = [
        (Fraction(1, 8), 16, "low"),
        (Fraction(1, 4), 40, "mid"),
        (Fraction(3, 4), 8, "high"),
    ]
    results = []
    for p, n, regime in cases:
        instance, cert = gen_av_hard(p, n, Fraction(1, 10000), regime)
        bound = av_bound(p)
        worst = sweep_max_distortion(av_distortion_sweep(instance))
        close = abs(float(worst) - float(bound)) <= 0.02 * float(bound)
        if worst.exact and bound.exact:
            sound = worst.value <= bound.value
        else:
            sound = float(worst) <= float(bound) + 1e-9
        results.append(
            CheckResult(
                f"av-hard {regime} p={p} n={n}",
                close and sound,
                f"within 2% of {bound.render()} and never above",
                worst.render(),
            )
        )
    return results


def check_av_propositions(seed: int = 2024) -> list[CheckResult]:
    _, cert = gen_av_degenerate(3)
    results = [
        CheckResult(
            "av-degenerate distortion",
            cert.expected.is_infinite and not verify_certificate(*gen_av_degenerate(3)),
            "inf",
            cert.expected.render(),
        )
    ]
    rng = random.Random(seed)
    best_failures = 0
    quarter_failures = 0
    trials = 200
    for _ in range(trials):
        instance = random_line_instance(rng, max_n=8, max_m=4)
        profile = best_case_av_profile(instance)
        outcome = av_winner(profile, instance.lex)
        if distance_distortion(instance, outcome.winner).value != 1:
            best_failures += 1
        _, qprofile = quarter_radius_profile(instance)
        qoutcome = av_winner(qprofile, instance.lex)
        if distance_distortion(instance, qoutcome.winner).value > Fraction(11, 3):
            quarter_failures += 1
    results.append(
        CheckResult(
            "best-case-av distortion 1",
            best_failures == 0,
            f"0 failures / {trials}",
            f"{best_failures} failures",
        )
    )
    results.append(
        CheckResult(
            "quarter-radius distortion <= 11/3",
            quarter_failures == 0,
            f"0 failures / {trials}",
            f"{quarter_failures} failures",
        )
    )
    return results


def check_copeland_hard() -> list[CheckResult]:
    instance, cert = gen_copeland_hard(100)
    profile = induced_ranking(instance)
    outcome = copeland_winner(profile, instance.lex)
    value = ab_distortion(instance, outcome.winner)
    results = [
        CheckResult(
            "copeland-hard winner+distortion",
            outcome.winner == cert.expected_winner and value.value == Fraction(49, 50),
            "c2 at 49/50",
            f"{instance.name_of(outcome.winner)} at {value.render()}",
        )
    ]
    for name, rule in (("ranked-pairs", ranked_pairs_winner), ("schulze", schulze_winner)):
        w = rule(profile, instance.lex).winner
        v = ab_distortion(instance, w)
        results.append(
            CheckResult(
                f"copeland-hard {name} <= 2/3",
                v.value <= Fraction(2, 3),
                "<= 2/3",
                v.render(),
            )
        )
    return results


def check_condorcet_hard() -> list[CheckResult]:
    instance, cert = gen_condorcet_hard(16)
    profile = induced_ranking(instance)
    expected = Fraction(7, 16)
    results = []
    for name, rule in (
        ("copeland", copeland_winner),
        ("ranked-pairs", ranked_pairs_winner),
        ("schulze", schulze_winner),
    ):
        outcome = rule(profile, instance.lex)
        value = ab_distortion(instance, outcome.winner)
        results.append(
            CheckResult(
                f"condorcet-hard {name}",
                outcome.winner == cert.expected_winner and value.value == expected,
                "cc at 7/16",
                f"{instance.name_of(outcome.winner)} at {value.render()}",
            )
        )
    return results


def check_smith_cycle() -> list[CheckResult]:
    results = []
    instance, cert = gen_smith_cycle(3, 6, shift=1)
    size = len(smith_set(majority_matrix(induced_ranking(instance))))
    results.append(CheckResult("smith-cycle size", size == 3, "3", str(size)))
    for name, rule in (("ranked-pairs", ranked_pairs_winner), ("schulze", schulze_winner)):
        w = rule(induced_ranking(instance), instance.lex).winner
        target_shift = w if w >= 1 else 3
        targeted, tcert = gen_smith_cycle(3, 6, shift=target_shift)
        tw = rule(induced_ranking(targeted), targeted.lex).winner
        value = ab_distortion(targeted, tw)
        results.append(
            CheckResult(
                f"smith-cycle {name} targeted distortion",
                tw == tcert.expected_winner and value.value == Fraction(2, 3),
                "2/3",
                value.render(),
            )
        )
    first, second = gen_ell1_pair(8)
    same = sorted(induced_ranking(first).rankings) == sorted(induced_ranking(second).rankings)
    results.append(
        CheckResult("ell1-pair indistinguishable", same, "identical profiles", str(same))
    )
    rules: list[tuple[str, Callable]] = list(RANKING_RULES.items())
    rules.append(("2-approval", k_approval_rule(2)))
    floor = Fraction(1, 2) - Fraction(1, 8)
    ok = True
    worst_seen = None
    for name, rule in rules:
        w1 = rule(induced_ranking(first), first.lex).winner
        w2 = rule(induced_ranking(second), second.lex).winner
        loss = max(ab_distortion(first, w1).value, ab_distortion(second, w2).value)
        worst_seen = loss if worst_seen is None else min(worst_seen, loss)
        if w1 != w2 or loss < floor:
            ok = False
    results.append(
        CheckResult(
            "ell1-pair forced loss",
            ok,
            f">= {floor} for every rule",
            f"min over rules {worst_seen}",
        )
    )
    return results


def check_scoring_rules() -> list[CheckResult]:
    results = []
    cases = [
        ("borda m=3", ScoringVector.borda(3), 3, Fraction(2, 3)),
        ("veto m=3", ScoringVector.veto(3), 3, Fraction(1)),
        ("2-approval m=3", ScoringVector.k_approval(2, 3), 3, Fraction(1)),
        ("constant m=3", ScoringVector((1, 1, 1)), 5, Fraction(1)),
    ]
    for label, vector, n, expected in cases:
        instance, cert = gen_scoring_hard(vector, n)
        outcome = scoring_winner(
            cert.profile if cert.profile else induced_ranking(instance),
            vector,
            instance.lex,
        )
        value = ab_distortion(instance, outcome.winner)
        results.append(
            CheckResult(
                f"scoring-hard {label}",
                outcome.winner == cert.expected_winner and value.value == expected,
                str(expected),
                value.render(),
            )
        )
    instance, cert = gen_plurality_hard(4, 8)
    outcome = RANKING_RULES["plurality"](cert.profile, instance.lex)
    value = ab_distortion(instance, outcome.winner)
    results.append(
        CheckResult(
            "plurality-hard m=4 n=8",
            outcome.winner == cert.expected_winner and value.value == Fraction(3, 4),
            "3/4",
            value.render(),
        )
    )
    return results


def check_stv() -> list[CheckResult]:
    results = []
    for label, gen in (("1d", gen_stv_hard_1d), ("simplex", gen_stv_hard_simplex)):
        instance, cert = gen(4, 8)
        outcome = stv_winner(induced_ranking(instance), instance.lex)
        value = ab_distortion(instance, outcome.winner)
        results.append(
            CheckResult(
                f"stv-hard {label} m=4 n=8",
                outcome.winner == instance.index_of("c4") and value.value == Fraction(7, 8),
                "c4 at 7/8",
                f"{instance.name_of(outcome.winner)} at {value.render()}",
            )
        )
    simplex_instance, _ = gen_stv_hard_simplex(4, 8)
    consistent = is_globally_consistent(
        simplex_instance, truthful_approvals(simplex_instance)
    )
    results.append(
        CheckResult("stv-hard simplex globally consistent", consistent, "True", str(consistent))
    )
    instance, _ = gen_stv_hard_1d(3, 4)
    outcome = stv_winner(induced_ranking(instance), instance.lex)
    rounds = outcome.trace["rounds"]
    c1, c2, c3 = (instance.index_of(x) for x in ("c1", "c2", "c3"))
    trace_ok = (
        rounds[0]["scores"] == {c3: 1, c1: 1, c2: 2}
        and rounds[0]["eliminated"] == c1
        and rounds[1]["scores"] == {c3: 2, c2: 2}
        and rounds[1]["eliminated"] == c2
        and outcome.winner == c3
    )
    results.append(
        CheckResult(
            "stv-hard worked trace m=3 n=4",
            trace_ok,
            "eliminate c1 then c2, winner c3",
            f"rounds={rounds}, winner={instance.name_of(outcome.winner)}",
        )
    )
    return results


PROPERTY_NAMES = (
    "a-immunity-in-smith",
    "b-winners-in-immunity",
    "c-condorcet-consistency",
    "d-immune-bound",
    "e-scoring-bound",
    "f-plurality-support",
    "g-stv-support",
    "h-oracle-agreement",
)


def property_suite(seed: int = 7, trials: int = 1000) -> list[CheckResult]:
    """Seeded random-instance properties; zero violations expected."""
    rng = random.Random(seed)
    violations = {name: 0 for name in PROPERTY_NAMES}
    for _ in range(trials):
        instance = random_line_instance(rng)
        profile = induced_ranking(instance)
        matrix = majority_matrix(profile)
        smith = smith_set(matrix)
        immune = immunity_set(matrix)
        if not immune <= smith:
            violations["a-immunity-in-smith"] += 1
        rp = ranked_pairs_winner(profile, instance.lex).winner
        sz = schulze_winner(profile, instance.lex).winner
        if rp not in immune or sz not in immune:
            violations["b-winners-in-immunity"] += 1
        cw = condorcet_winner(matrix)
        if cw is not None:
            cop = copeland_winner(profile, instance.lex).winner
            if not (cop == rp == sz == cw):
                violations["c-condorcet-consistency"] += 1
            elif ab_distortion(instance, cw).value > condorcet_ab_bound():
                violations["c-condorcet-consistency"] += 1
        ell = len(smith)
        if ell >= 2:
            bound = immune_ab_bound(ell)
            if (
                ab_distortion(instance, rp).value > bound
                or ab_distortion(instance, sz).value > bound
            ):
                violations["d-immune-bound"] += 1
        vectors = [ScoringVector.plurality(instance.m), ScoringVector.veto(instance.m),
                   ScoringVector.borda(instance.m)]
        if instance.m >= 2:
            vectors.append(ScoringVector.k_approval(2, instance.m))
        for vector in vectors:
            w = scoring_winner(profile, vector, instance.lex).winner
            if ab_distortion(instance, w).value > scoring_ab_bound(vector):
                violations["e-scoring-bound"] += 1
                break
        truthful = truthful_approvals(instance)
        pl = scoring_winner(profile, ScoringVector.plurality(instance.m), instance.lex)
        if approval_count(truthful, pl.winner) * instance.m < instance.n:
            violations["f-plurality-support"] += 1
        stv = stv_winner(profile, instance.lex)
        if approval_count(truthful, stv.winner) * 2 ** (instance.m - 1) < instance.n:
            violations["g-stv-support"] += 1
        if smith != oracle_smith(profile):
            violations["h-oracle-agreement"] += 1
        elif beatpath_strengths(matrix).strengths != oracle_beatpaths(matrix).strengths:
            violations["h-oracle-agreement"] += 1
    return [
        CheckResult(
            f"property {name}",
            violations[name] == 0,
            f"0 violations / {trials}",
            f"{violations[name]} violations",
        )
        for name in PROPERTY_NAMES
    ]


def check_adversarial_soundness() -> list[CheckResult]:
    results = []
    av_cfg = SearchConfig(
        rule="av",
        objective="distance",
        n=12,
        m=3,
        dimension=1,
        p_target=Fraction(1, 4),
        iterations=10000,
        seed=5,
    )
    av_result = adversarial_search(av_cfg)
    bound = float(av_result.bound)
    results.append(
        CheckResult(
            "adversarial av p=1/4",
            (not av_result.bound_violation)
            and float(av_result.achieved) >= 0.95 * bound,
            f">= {0.95 * bound:.4f}, <= {bound}",
            av_result.achieved.render(),
        )
    )
    pl_cfg = SearchConfig(
        rule="plurality",
        objective="ab",
        n=8,
        m=4,
        dimension=1,
        grid=tuple(range(0, 11)),
        iterations=10000,
        seed=3,
    )
    pl_result = adversarial_search(pl_cfg)
    pl_bound = float(pl_result.bound)
    results.append(
        CheckResult(
            "adversarial plurality ab",
            (not pl_result.bound_violation)
            and float(pl_result.achieved) >= 0.95 * pl_bound,
            f">= {0.95 * pl_bound:.4f}, <= {pl_bound}",
            pl_result.achieved.render(),
        )
    )
    return results


ACCEPTANCE_CHECKS: tuple[tuple[str, Callable[[], list[CheckResult]]], ...] = (
    ("1-av-bound-curve", check_av_bound_curve),
    ("2-av-hard-instances", check_av_hard_instances),
    ("3-av-propositions", check_av_propositions),
    ("4-copeland", check_copeland_hard),
    ("5-condorcet", check_condorcet_hard),
    ("6-smith-cycle", check_smith_cycle),
    ("7-scoring", check_scoring_rules),
    ("8-stv", check_stv),
    ("9-properties", lambda: property_suite(seed=7, trials=1000)),
    ("10-adversarial", check_adversarial_soundness),
)


def acceptance_suite() -> list[CheckResult]:
    results = []
    for name, check in ACCEPTANCE_CHECKS:
        for result in check():
            results.append(
                CheckResult(f"{name}/{result.name}", result.passed,
                            result.expected, result.achieved)
            )
    return results

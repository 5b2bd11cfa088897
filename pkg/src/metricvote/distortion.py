"""Distortion measures and closed-form worst-case bounds.

Two candidate-quality criteria coexist:

* distance: the best candidate minimizes the summed voter distance; the
  distortion of an elected candidate is the ratio of its distance sum to
  the optimum's, a value in [1, inf].
* acceptability: the best candidate sits in the most acceptability balls;
  the shortfall (optimal approvals - winner approvals) / n is a value in
  [0, 1].

Ratios use the conventions a/0 = inf for a > 0 and 0/0 = 1 (both sums zero
means the winner is co-located with an optimum).  Counts and ratios of
counts are exact rationals; distance sums stay exact whenever the
coordinates allow it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import SizeGuardError
from .model import (
    ApprovalProfile,
    ElectionInstance,
    RankingProfile,
    approval_count,
    approvals_at_radius,
    breakpoint_radii,
    consistent_rankings,
    efficiency_fraction,
    induced_ranking,
    min_common_radius,
    truthful_approvals,
)
from .numerics import Number, approx_leq, is_exact, render_number, tied_extreme
from .rules import RuleOutcome, ScoringVector, av_winner


@dataclass(frozen=True)
class DistortionValue:
    """A distortion: finite non-negative number or +inf, exact when possible."""

    value: Number

    @staticmethod
    def from_ratio(numerator: Number, denominator: Number) -> "DistortionValue":
        if denominator == 0:
            return DistortionValue(1 if numerator == 0 else math.inf)
        if is_exact(numerator) and is_exact(denominator):
            return DistortionValue(Fraction(numerator, denominator))
        return DistortionValue(float(numerator) / float(denominator))

    @staticmethod
    def infinite() -> "DistortionValue":
        return DistortionValue(math.inf)

    @property
    def is_infinite(self) -> bool:
        return self.value == math.inf

    @property
    def exact(self) -> bool:
        return is_exact(self.value)

    def __float__(self) -> float:
        return float(self.value)

    def _other(self, other):
        return other.value if isinstance(other, DistortionValue) else other

    def __le__(self, other):
        return self.value <= self._other(other)

    def __lt__(self, other):
        return self.value < self._other(other)

    def __ge__(self, other):
        return self.value >= self._other(other)

    def __gt__(self, other):
        return self.value > self._other(other)

    def render(self) -> str:
        return render_number(self.value)


def total_distance(instance: ElectionInstance, candidate: int) -> Number:
    return sum(
        w * instance.distance(i, candidate)
        for i, w in enumerate(instance.weights)
    )


def optimal_by_distance(instance: ElectionInstance) -> tuple[int, Number]:
    """Candidate minimizing the summed voter distance; ties go to lex."""
    sums = [total_distance(instance, c) for c in range(instance.m)]
    tied = tied_extreme(sums, best=False)
    winner = instance.lex.best(tied)
    return winner, sums[winner]


def optimal_by_acceptability(instance: ElectionInstance) -> tuple[int, int]:
    """Candidate inside the most acceptability balls; ties go to lex."""
    profile = truthful_approvals(instance)
    counts = [approval_count(profile, c) for c in range(instance.m)]
    tied = tied_extreme(counts, best=True)
    winner = instance.lex.best(tied)
    return winner, counts[winner]


def distance_distortion(instance: ElectionInstance, winner: int) -> DistortionValue:
    _, best = optimal_by_distance(instance)
    return DistortionValue.from_ratio(total_distance(instance, winner), best)


def ab_distortion(instance: ElectionInstance, winner: int) -> DistortionValue:
    """Normalized approval shortfall of the winner, in [0, 1], exact."""
    _, best = optimal_by_acceptability(instance)
    count = approval_count(truthful_approvals(instance), winner)
    return DistortionValue(Fraction(best - count, instance.n))


@dataclass(frozen=True)
class WorstProfileResult:
    value: DistortionValue
    exhaustive: bool
    profiles_checked: int


def worst_ranking_ab_distortion(
    instance: ElectionInstance,
    rule: Callable[[RankingProfile, object], RuleOutcome],
    limit: int = 200000,
    fallback: bool = True,
) -> WorstProfileResult:
    """Max acceptability shortfall over every induced ranking profile.

    Enumerates, per voter, all rankings consistent with the distances
    (weighted groups are expanded so each voter chooses independently).
    Over `limit` combinations: either falls back to the canonical profile
    (exhaustive=False) or raises SizeGuardError.
    """
    expanded = instance.expand_weights()
    try:
        options = [
            consistent_rankings(expanded, i, limit=limit)
            for i in range(expanded.groups)
        ]
        count = 1
        for opt in options:
            count *= len(opt)
            if count > limit:
                raise SizeGuardError(
                    f"profile enumeration exceeds {limit} combinations"
                )
    except SizeGuardError:
        if not fallback:
            raise
        outcome = rule(induced_ranking(instance), instance.lex)
        return WorstProfileResult(ab_distortion(instance, outcome.winner), False, 1)

    worst = DistortionValue(Fraction(0))
    checked = 0
    for combo in itertools.product(*options):
        profile = RankingProfile(tuple(combo), expanded.weights, expanded.m)
        outcome = rule(profile, expanded.lex)
        value = ab_distortion(instance, outcome.winner)
        checked += 1
        if value.value > worst.value:
            worst = value
    return WorstProfileResult(worst, True, checked)


@dataclass(frozen=True)
class SweepEntry:
    """One maximal common-radius interval with a constant approval profile."""

    radius_lo: Number
    radius_hi: Optional[Number]  # None for the unbounded final interval
    winner: int
    efficiency: Fraction
    distortion: DistortionValue


def av_distortion_sweep(instance: ElectionInstance) -> list[SweepEntry]:
    """Approval voting over every common radius.

    The voter-candidate distances partition the radius axis into intervals
    on which the globally consistent approval profile is constant; each
    entry reports the interval's winner, the fraction approving the
    distance-optimal candidate, and the winner's distance distortion.
    """
    rows = [instance.distance_row(i) for i in range(instance.groups)]
    sums = [
        sum(w * rows[i][c] for i, w in enumerate(instance.weights))
        for c in range(instance.m)
    ]
    tied_opt = tied_extreme(sums, best=False)
    c_opt = instance.lex.best(tied_opt)
    points = breakpoint_radii(instance)
    start = min_common_radius(instance)
    valid = [r for r in points if approx_leq(start, r)]
    entries = []
    for k, radius in enumerate(valid):
        counts = [0] * instance.m
        for i, w in enumerate(instance.weights):
            for c in range(instance.m):
                if approx_leq(rows[i][c], radius):
                    counts[c] += w
        winner = instance.lex.best(tied_extreme(counts, best=True))
        entries.append(
            SweepEntry(
                radius_lo=radius,
                radius_hi=valid[k + 1] if k + 1 < len(valid) else None,
                winner=winner,
                efficiency=Fraction(counts[c_opt], instance.n),
                distortion=DistortionValue.from_ratio(sums[winner], sums[c_opt]),
            )
        )
    return entries


def sweep_max_distortion(entries: list[SweepEntry]) -> DistortionValue:
    worst = DistortionValue(Fraction(0))
    for e in entries:
        if e.distortion.value > worst.value:
            worst = e.distortion
    return worst


def av_bound(p) -> DistortionValue:
    """Worst-case AV distance distortion when a fraction p of the voters
    approve the optimal candidate under one common radius.

    +inf at p in {0, 1}; (1-p)/p on (0, 1/4]; 3 on [1/4, 1/2];
    (2-p)/(1-p) on [1/2, 1).  The pieces agree at both joints.
    """
    if isinstance(p, float):
        p = Fraction(p).limit_denominator(10**12) if 0 < p < 1 else Fraction(round(p))
    p = Fraction(p)
    if p < 0 or p > 1:
        raise ValueError("the approval fraction must lie in [0, 1]")
    if p == 0 or p == 1:
        return DistortionValue.infinite()
    if p <= Fraction(1, 4):
        return DistortionValue((1 - p) / p)
    if p <= Fraction(1, 2):
        return DistortionValue(Fraction(3))
    return DistortionValue((2 - p) / (1 - p))


def best_case_av_profile(instance: ElectionInstance) -> ApprovalProfile:
    """A locally consistent profile on which AV elects an optimal candidate.

    Every voter approves exactly the candidates no farther than the
    distance-optimal candidate.  The optimum then collects all n approvals,
    and any other candidate doing so sits weakly closer for every voter,
    hence is itself optimal.
    """
    c_opt, _ = optimal_by_distance(instance)
    approvals = []
    for i in range(instance.groups):
        row = instance.distance_row(i)
        threshold = row[c_opt]
        approvals.append(
            frozenset(c for c in range(instance.m) if approx_leq(row[c], threshold))
        )
    return ApprovalProfile(tuple(approvals), instance.weights, instance.m)


def quarter_radius_profile(
    instance: ElectionInstance,
) -> tuple[Number, ApprovalProfile]:
    """Shortest common radius under which at least a quarter of the voters
    approve the distance-optimal candidate (and every ball is nonempty).

    The AV winner on the returned profile has distance distortion at most
    11/3.
    """
    c_opt, _ = optimal_by_distance(instance)
    need = -(-instance.n // 4)  # ceil(n/4)
    for radius in breakpoint_radii(instance):
        if not approx_leq(min_common_radius(instance), radius):
            continue
        profile = approvals_at_radius(instance, radius)
        if approval_count(profile, c_opt) >= need:
            return radius, profile
    # The largest breakpoint covers every candidate for every voter.
    raise AssertionError("unreachable: the full radius always qualifies")


# Closed-form acceptability bounds used by the property suite and search.

def scoring_ab_bound(vector: ScoringVector) -> Fraction:
    """Worst acceptability shortfall of a positional scoring rule.

    1 for constant vectors; otherwise gap_max / (gap_max + gap_min) with
    gaps ranging over distinct score pairs.
    """
    if vector.m == 1 or vector.is_constant:
        return Fraction(1)
    values = [Fraction(s) for s in vector.scores]
    gaps = [
        abs(values[i] - values[j])
        for i in range(len(values))
        for j in range(i + 1, len(values))
    ]
    q = max(gaps)
    p = min(gaps)
    return q / (p + q)


def plurality_ab_bound(m: int) -> Fraction:
    return Fraction(m - 1, m)


def stv_ab_bound(m: int) -> Fraction:
    return Fraction(2 ** (m - 1) - 1, 2 ** (m - 1))


def immune_ab_bound(smith_size: int) -> Fraction:
    """Bound for rules that always elect from the immunity set."""
    if smith_size >= 2:
        return Fraction(smith_size - 1, smith_size)
    return Fraction(1, 2)


def condorcet_ab_bound() -> Fraction:
    """Bound for Condorcet-consistent rules when a Condorcet winner exists."""
    return Fraction(1, 2)

"""Independent oracles and adversarial instance search.

The oracles re-derive the Smith set (subset enumeration) and beatpath
strengths (simple-path enumeration) without sharing code with the fast
implementations, so agreement is meaningful evidence.

The adversarial search hill-climbs voter/candidate placements (and, for
acceptability objectives, per-voter radius breakpoints) on a coordinate
grid, restarting from random layouts, to empirically stress the
closed-form worst-case bounds.  Exceeding a bound is reported as a
first-class finding: it would falsify the implementation.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .distortion import (
    DistortionValue,
    ab_distortion,
    av_bound,
    av_distortion_sweep,
    distance_distortion,
    immune_ab_bound,
    optimal_by_distance,
    plurality_ab_bound,
    scoring_ab_bound,
    stv_ab_bound,
)
from .errors import PreconditionError, SizeGuardError
from .majority import (
    BeatpathStrengths,
    MajorityMatrix,
    dominates,
    majority_matrix,
    smith_set,
)
from .model import (
    ApprovalProfile,
    ElectionInstance,
    RankingProfile,
    approval_count,
    efficiency_fraction,
    euclidean_instance,
    induced_ranking,
    truthful_approvals,
)
from .numerics import Number
from .rules import RANKING_RULES, ScoringVector, av_winner


def oracle_smith(profile: RankingProfile) -> frozenset[int]:
    """Smith set by brute force: smallest candidate subset whose members all
    strictly beat every outsider."""
    matrix = majority_matrix(profile)
    m = profile.m
    if m > 6:
        raise SizeGuardError("the subset oracle is limited to m <= 6")
    for size in range(1, m + 1):
        for subset in itertools.combinations(range(m), size):
            inside = set(subset)
            if all(
                dominates(matrix, a, b)
                for a in inside
                for b in range(m)
                if b not in inside
            ):
                return frozenset(inside)
    return frozenset(range(m))


def oracle_beatpaths(matrix: MajorityMatrix) -> BeatpathStrengths:
    """Beatpath strengths by enumerating every simple domination path."""
    m = matrix.m
    if m > 6:
        raise SizeGuardError("the path oracle is limited to m <= 6")
    edges = {
        (a, b): matrix[a, b]
        for a in range(m)
        for b in range(m)
        if a != b and dominates(matrix, a, b)
    }
    best = [[0] * m for _ in range(m)]

    def extend(path: list[int], strength: int):
        last = path[-1]
        if len(path) > 1:
            src = path[0]
            if strength > best[src][last]:
                best[src][last] = strength
        for nxt in range(m):
            if nxt not in path and (last, nxt) in edges:
                extend(path + [nxt], min(strength, edges[(last, nxt)]))

    for start in range(m):
        extend([start], matrix.n + 1)
    return BeatpathStrengths(tuple(tuple(row) for row in best))


def voter_ball_choices(instance: ElectionInstance, voter: int) -> list[frozenset[int]]:
    """The distinct nonempty approval sets realizable by some radius for one
    voter: prefixes of the distance-sorted candidates, merged at ties."""
    row = instance.distance_row(voter)
    order = sorted(range(instance.m), key=lambda c: (float(row[c]), c))
    choices = []
    ball: set[int] = set()
    k = 0
    while k < instance.m:
        j = k
        while j < instance.m and float(row[order[j]]) <= float(row[order[k]]) + 1e-9:
            ball.add(order[j])
            j += 1
        choices.append(frozenset(ball))
        k = j
    return choices


def worst_local_profile_av(
    instance: ElectionInstance, limit: int = 200000
) -> tuple[ApprovalProfile, DistortionValue]:
    """Exhaustive worst case of AV over locally consistent approval
    profiles: every voter independently picks one of her radius-threshold
    balls.  Weighted groups are expanded so voters choose independently."""
    expanded = instance.expand_weights()
    options = [voter_ball_choices(expanded, i) for i in range(expanded.groups)]
    count = 1
    for opt in options:
        count *= len(opt)
        if count > limit:
            raise SizeGuardError(f"ball enumeration exceeds {limit} combinations")
    worst_value = DistortionValue(Fraction(0))
    worst_profile = None
    for combo in itertools.product(*options):
        profile = ApprovalProfile(tuple(combo), expanded.weights, expanded.m)
        outcome = av_winner(profile, expanded.lex)
        value = distance_distortion(instance, outcome.winner)
        if worst_profile is None or value.value > worst_value.value:
            worst_value = value
            worst_profile = profile
    return worst_profile, worst_value


@dataclass(frozen=True)
class SearchConfig:
    """Deterministic adversarial-search setup.

    rule: "av" (distance objective over common-radius profiles, optionally
    pinned to an efficiency fraction) or any ranking rule name with the
    "ab" objective over truthful per-voter radii.
    """

    rule: str
    objective: str  # "distance" | "ab"
    n: int
    m: int
    dimension: int = 1
    grid: tuple[Number, ...] = ()
    p_target: Optional[Fraction] = None
    iterations: int = 10000
    seed: int = 0
    restart_every: int = 400

    def effective_grid(self) -> tuple[Number, ...]:
        """Dyadic default grid: float distance comparisons stay exact."""
        if self.grid:
            return self.grid
        step = Fraction(1, 64)
        return tuple(k * step for k in range(0, 129))


@dataclass
class SearchResult:
    best_instance: Optional[ElectionInstance]
    achieved: DistortionValue
    bound: DistortionValue
    bound_violation: bool
    evaluations: int
    best_detail: dict = field(default_factory=dict)


@dataclass
class _State:
    voters: list
    candidates: list
    radius_choice: list  # per-voter index into its ball choices ("ab" only)


def _applicable_bound(cfg: SearchConfig, instance: ElectionInstance) -> DistortionValue:
    if cfg.rule == "av":
        if cfg.p_target is not None:
            return av_bound(cfg.p_target)
        return DistortionValue.infinite()
    if cfg.rule == "plurality":
        return DistortionValue(plurality_ab_bound(cfg.m))
    if cfg.rule == "veto":
        return DistortionValue(scoring_ab_bound(ScoringVector.veto(cfg.m)))
    if cfg.rule == "borda":
        return DistortionValue(scoring_ab_bound(ScoringVector.borda(cfg.m)))
    if cfg.rule == "stv":
        return DistortionValue(stv_ab_bound(cfg.m))
    if cfg.rule in ("ranked-pairs", "schulze"):
        matrix = majority_matrix(induced_ranking(instance))
        return DistortionValue(immune_ab_bound(len(smith_set(matrix))))
    if cfg.rule == "copeland":
        return DistortionValue(Fraction(1))
    raise PreconditionError(f"no analytic bound registered for rule {cfg.rule!r}")


class _Evaluator:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg

    def build(self, state: _State) -> ElectionInstance:
        cfg = self.cfg
        probe = euclidean_instance(
            state.candidates, [(pos, 1, 0) for pos in state.voters]
        )
        if cfg.rule == "av":
            # The AV objective sweeps common radii; truthful radii only need
            # to keep every ball nonempty.
            fixed = [(pos, 1, probe.nearest_distance(i)) for i, pos in enumerate(state.voters)]
            return euclidean_instance(state.candidates, fixed)
        voters = []
        for i, pos in enumerate(state.voters):
            choices = voter_ball_choices(probe, i)
            ball = choices[min(state.radius_choice[i], len(choices) - 1)]
            radius = max(probe.distance(i, c) for c in ball)
            voters.append((pos, 1, radius))
        return euclidean_instance(state.candidates, voters)

    def evaluate(self, instance: ElectionInstance):
        """Returns (achieved float or None, guide score float).

        The AV path works in floats; with dyadic grid coordinates every
        distance and count comparison is still exact, and the winner's
        value is re-derived exactly for the final result.
        """
        cfg = self.cfg
        if cfg.rule == "av":
            return self._evaluate_av(instance)
        profile = induced_ranking(instance)
        outcome = RANKING_RULES[cfg.rule](profile, instance.lex)
        value = ab_distortion(instance, outcome.winner)
        return float(value), float(value)

    def _evaluate_av(self, instance: ElectionInstance):
        cfg = self.cfg
        n, m = instance.n, instance.m
        lex = instance.lex
        rows = [[float(d) for d in instance.distance_row(i)] for i in range(n)]
        sums = [sum(rows[i][c] for i in range(n)) for c in range(m)]
        best_sum = min(sums)
        c_opt = lex.best([c for c in range(m) if sums[c] == best_sum])
        target = None if cfg.p_target is None else cfg.p_target * n
        start = max(min(row) for row in rows)
        radii = sorted({d for row in rows for d in row if d >= start})
        achieved = None
        guide = -math.inf
        for r in radii:
            counts = [sum(1 for i in range(n) if rows[i][c] <= r) for c in range(m)]
            top = max(counts)
            winner = lex.best([c for c in range(m) if counts[c] == top])
            if sums[c_opt] == 0:
                value = 1.0 if sums[winner] == 0 else 1e9
            else:
                value = sums[winner] / sums[c_opt]
            if target is None or counts[c_opt] == target:
                achieved = value if achieved is None else max(achieved, value)
                guide = max(guide, min(value, 1e6))
            else:
                gap = abs(counts[c_opt] - float(target)) / n
                guide = max(guide, min(value, 1e6) - 10.0 * gap - 1.0)
        return achieved, guide


def adversarial_search(cfg: SearchConfig) -> SearchResult:
    """Randomized local search for instances approaching the analytic bound.

    Moves: nudge one point along the grid, teleport it, or copy another
    point's position; acceptability searches also retarget one voter's
    radius breakpoint.  Greedy accept on the guide score; deterministic for
    a fixed config.
    """
    rng = random.Random(cfg.seed)
    grid = list(cfg.effective_grid())
    evaluator = _Evaluator(cfg)

    def random_point():
        if cfg.dimension == 1:
            return rng.choice(grid)
        return tuple(rng.choice(grid) for _ in range(cfg.dimension))

    def random_state() -> _State:
        # Worst cases live near degenerate layouts, so besides uniform
        # starts the portfolio includes clustered starts (voters sit on
        # random candidates) and balanced ones (voters dealt round-robin,
        # equal clusters).  Uniform starts almost never co-locate points.
        candidates = [random_point() for _ in range(cfg.m)]
        style = rng.random()
        if style < 1 / 3:
            voters = [random_point() for _ in range(cfg.n)]
        elif style < 2 / 3:
            voters = [rng.choice(candidates) for _ in range(cfg.n)]
        else:
            voters = [candidates[i % cfg.m] for i in range(cfg.n)]
        return _State(
            voters=voters,
            candidates=candidates,
            radius_choice=[rng.randrange(cfg.m) for _ in range(cfg.n)],
        )

    def shifted(point, steps: int):
        if cfg.dimension != 1 or point not in grid:
            return point
        k = min(len(grid) - 1, max(0, grid.index(point) + steps))
        return grid[k]

    def mutate(state: _State) -> _State:
        voters = list(state.voters)
        candidates = list(state.candidates)
        radius_choice = list(state.radius_choice)
        kind = rng.random()
        if cfg.rule != "av" and kind < 0.25:
            i = rng.randrange(cfg.n)
            radius_choice[i] = rng.randrange(cfg.m)
            return _State(voters, candidates, radius_choice)
        if kind < 0.45 and cfg.dimension == 1:
            # Block move: relocate a candidate together with the voters
            # sitting exactly on it, either one grid step or next to some
            # other point.  Single-point moves cannot relocate a cluster
            # without passing through rejected intermediate states.
            c = rng.randrange(cfg.m)
            origin = candidates[c]
            members = [i for i, pos in enumerate(voters) if pos == origin]
            if rng.random() < 0.5:
                target = shifted(origin, rng.choice((-1, 1)))
            else:
                target = shifted(rng.choice(voters + candidates), rng.choice((-1, 0, 1)))
            candidates[c] = target
            for i in members:
                voters[i] = target
            return _State(voters, candidates, radius_choice)
        target_voters = rng.random() < (cfg.n / (cfg.n + cfg.m))
        pool = voters if target_voters else candidates
        i = rng.randrange(len(pool))
        move = rng.random()
        if move < 0.4 and cfg.dimension == 1:
            k = grid.index(pool[i]) if pool[i] in grid else rng.randrange(len(grid))
            k = min(len(grid) - 1, max(0, k + rng.choice((-1, 1))))
            pool[i] = grid[k]
        elif move < 0.6:
            pool[i] = rng.choice(voters + candidates)
        elif move < 0.8:
            # Land on or right next to an existing point: clusters and
            # epsilon-offsets both form in one jump.
            donor = rng.choice(voters + candidates)
            if cfg.dimension == 1 and donor in grid:
                k = grid.index(donor) + rng.choice((-1, 0, 1))
                pool[i] = grid[min(len(grid) - 1, max(0, k))]
            else:
                pool[i] = donor
        else:
            pool[i] = random_point()
        return _State(voters, candidates, radius_choice)

    best_float = -math.inf
    best_instance = None
    best_state = None
    evaluations = 0
    state = random_state()
    instance = evaluator.build(state)
    achieved, guide = evaluator.evaluate(instance)
    evaluations += 1
    since_improvement = 0

    def consider(inst, value, st):
        nonlocal best_float, best_instance, best_state
        if value is not None and value > best_float:
            best_float = value
            best_instance = inst
            best_state = st

    consider(instance, achieved, state)
    while evaluations < cfg.iterations:
        if since_improvement >= cfg.restart_every:
            if best_state is not None and rng.random() < 0.5:
                # Basin hop: re-explore around the incumbent.
                state = mutate(mutate(best_state))
            else:
                state = random_state()
            instance = evaluator.build(state)
            achieved, guide = evaluator.evaluate(instance)
            evaluations += 1
            since_improvement = 0
            consider(instance, achieved, state)
            continue
        candidate_state = mutate(state)
        candidate_instance = evaluator.build(candidate_state)
        cand_achieved, cand_guide = evaluator.evaluate(candidate_instance)
        evaluations += 1
        consider(candidate_instance, cand_achieved, candidate_state)
        if cand_guide >= guide:
            if cand_guide > guide:
                since_improvement = 0
            else:
                since_improvement += 1
            state, instance, guide = candidate_state, candidate_instance, cand_guide
        else:
            since_improvement += 1

    if best_instance is None:
        return SearchResult(None, DistortionValue(Fraction(0)),
                            DistortionValue.infinite(), False, evaluations)
    achieved_exact = _exact_achieved(cfg, best_instance)
    bound = _applicable_bound(cfg, best_instance)
    violation = not bound.is_infinite and float(achieved_exact) > float(bound) + 1e-9
    return SearchResult(
        best_instance=best_instance,
        achieved=achieved_exact,
        bound=bound,
        bound_violation=violation,
        evaluations=evaluations,
    )


def _exact_achieved(cfg: SearchConfig, instance: ElectionInstance) -> DistortionValue:
    """Exact re-derivation of the objective on the best instance found."""
    if cfg.rule == "av":
        worst = None
        for entry in av_distortion_sweep(instance):
            if cfg.p_target is not None and entry.efficiency != cfg.p_target:
                continue
            if worst is None or entry.distortion.value > worst.value:
                worst = entry.distortion
        return worst if worst is not None else DistortionValue(Fraction(0))
    outcome = RANKING_RULES[cfg.rule](induced_ranking(instance), instance.lex)
    return ab_distortion(instance, outcome.winner)

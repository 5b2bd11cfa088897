"""Resolute voting rules: (profile, tie-break order) -> single winner.

Ranking-based rules: positional scoring (plurality, veto, Borda,
k-approval), Copeland, Ranked Pairs, Schulze, and STV.  Approval voting is
the one approval-based rule.  Every rule returns the full tied set plus an
audit trace; the resolute winner is the tie-break order's most preferred
tied candidate (STV eliminations instead drop the least preferred).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InternalInconsistencyError
from .majority import (
    MajorityMatrix,
    beatpath_strengths,
    copeland_scores,
    dominates,
    majority_matrix,
)
from .model import ApprovalProfile, RankingProfile, TieBreakOrder, approval_count
from .numerics import Number, tied_extreme


@dataclass(frozen=True)
class ScoringVector:
    """Positional scores: a candidate in position i earns scores[i]."""

    scores: tuple[Number, ...]

    @property
    def m(self) -> int:
        return len(self.scores)

    @property
    def is_constant(self) -> bool:
        return all(s == self.scores[0] for s in self.scores)

    @staticmethod
    def plurality(m: int) -> "ScoringVector":
        return ScoringVector((1,) + (0,) * (m - 1))

    @staticmethod
    def veto(m: int) -> "ScoringVector":
        return ScoringVector((1,) * (m - 1) + (0,))

    @staticmethod
    def borda(m: int) -> "ScoringVector":
        return ScoringVector(tuple(range(m - 1, -1, -1)))

    @staticmethod
    def k_approval(k: int, m: int) -> "ScoringVector":
        if not 1 <= k <= m:
            raise ValueError(f"k must be in 1..{m}")
        return ScoringVector((1,) * k + (0,) * (m - k))


@dataclass(frozen=True)
class RuleOutcome:
    winner: int
    tied_set: frozenset[int]
    trace: dict = field(default_factory=dict, compare=False)


def _resolve(tied: Sequence[int], lex: TieBreakOrder, trace: dict) -> RuleOutcome:
    return RuleOutcome(lex.best(tied), frozenset(tied), trace)


def scoring_winner(
    profile: RankingProfile, vector: ScoringVector, lex: TieBreakOrder
) -> RuleOutcome:
    if vector.m != profile.m:
        raise ValueError("scoring vector length must equal the candidate count")
    totals: list[Number] = [0] * profile.m
    for ranking, w in zip(profile.rankings, profile.weights):
        for pos, c in enumerate(ranking):
            totals[c] += w * vector.scores[pos]
    tied = tied_extreme(totals, best=True)
    return _resolve(tied, lex, {"scores": tuple(totals)})


def plurality_winner(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
    return scoring_winner(profile, ScoringVector.plurality(profile.m), lex)


def veto_winner(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
    return scoring_winner(profile, ScoringVector.veto(profile.m), lex)


def borda_winner(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
    return scoring_winner(profile, ScoringVector.borda(profile.m), lex)


def k_approval_winner(profile: RankingProfile, k: int, lex: TieBreakOrder) -> RuleOutcome:
    return scoring_winner(profile, ScoringVector.k_approval(k, profile.m), lex)


def copeland_winner(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
    matrix = majority_matrix(profile)
    scores = copeland_scores(matrix)
    tied = tied_extreme(scores, best=True)
    return _resolve(tied, lex, {"scores": tuple(scores)})


def ranked_pairs_winner(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
    """Lock pairs by descending support, skipping any that would close a cycle.

    Only pairs with a strict majority are considered; equal-support pairs
    are ordered by the tie-break order on the source, then the target.  The
    winner is the most preferred source (no incoming locked edge).
    """
    matrix = majority_matrix(profile)
    m = profile.m
    pairs = [
        (a, b)
        for a in range(m)
        for b in range(m)
        if a != b and matrix[a, b] > matrix[b, a]
    ]
    pairs.sort(key=lambda ab: (-matrix[ab[0], ab[1]], lex.position(ab[0]), lex.position(ab[1])))
    locked: set[tuple[int, int]] = set()
    skipped: list[tuple[int, int]] = []

    def reachable(src: int, dst: int) -> bool:
        seen = {src}
        stack = [src]
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            for (u, v) in locked:
                if u == x and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False

    for a, b in pairs:
        if reachable(b, a):
            skipped.append((a, b))
        else:
            locked.add((a, b))
    sources = [c for c in range(m) if not any(v == c for (_, v) in locked)]
    trace = {
        "order": tuple(pairs),
        "locked": tuple(sorted(locked)),
        "skipped": tuple(skipped),
    }
    return _resolve(sources, lex, trace)


def schulze_winner(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
    """Widest-path comparison: w wins iff p[w, c] >= p[c, w] for every c."""
    matrix = majority_matrix(profile)
    paths = beatpath_strengths(matrix)
    tied = [
        a
        for a in range(profile.m)
        if all(paths[a, b] >= paths[b, a] for b in range(profile.m) if b != a)
    ]
    if not tied:
        raise InternalInconsistencyError("the widest-path winner set is never empty")
    return _resolve(tied, lex, {"strengths": paths.strengths})


def stv_winner(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
    """Iterated plurality elimination.

    Each round drops the candidate with the fewest first places among the
    still-active candidates; score ties eliminate the tie-break order's
    least preferred.  The trace records every round.
    """
    active = set(range(profile.m))
    rounds = []
    while len(active) > 1:
        scores = {c: 0 for c in active}
        for ranking, w in zip(profile.rankings, profile.weights):
            top = next(c for c in ranking if c in active)
            scores[top] += w
        low = min(scores.values())
        tied_low = [c for c in active if scores[c] == low]
        eliminated = lex.worst(tied_low)
        rounds.append({"scores": dict(scores), "eliminated": eliminated})
        active.remove(eliminated)
    winner = next(iter(active))
    return RuleOutcome(winner, frozenset({winner}), {"rounds": rounds})


def av_winner(profile: ApprovalProfile, lex: TieBreakOrder) -> RuleOutcome:
    """Approval voting: most approvals wins."""
    counts = [approval_count(profile, c) for c in range(profile.m)]
    tied = tied_extreme(counts, best=True)
    return _resolve(tied, lex, {"approvals": tuple(counts)})


RankingRule = Callable[[RankingProfile, TieBreakOrder], RuleOutcome]

#: Ranking-based rules by name (for the CLI and the search module).
RANKING_RULES: dict[str, RankingRule] = {
    "plurality": plurality_winner,
    "veto": veto_winner,
    "borda": borda_winner,
    "copeland": copeland_winner,
    "ranked-pairs": ranked_pairs_winner,
    "schulze": schulze_winner,
    "stv": stv_winner,
}


def k_approval_rule(k: int) -> RankingRule:
    def rule(profile: RankingProfile, lex: TieBreakOrder) -> RuleOutcome:
        return k_approval_winner(profile, k, lex)

    return rule

"""Pairwise-majority structure of a ranking profile.

Everything here is exact integer arithmetic on (weighted) voter counts:
the pairwise count matrix, strict/weak/unanimous domination, the Condorcet
winner, the Smith set, widest-path beatpath strengths, and the immunity
set (candidates that answer every strict defeat with a beatpath at least
as strong as the defeat).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .model import RankingProfile


@dataclass(frozen=True)
class MajorityMatrix:
    """counts[a][b] = number of voters ranking a strictly before b."""

    counts: tuple[tuple[int, ...], ...]
    n: int

    @property
    def m(self) -> int:
        return len(self.counts)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        a, b = pair
        return self.counts[a][b]


@dataclass(frozen=True)
class BeatpathStrengths:
    """strengths[a][b] = widest-path value from a to b over strict defeats."""

    strengths: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.strengths)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        a, b = pair
        return self.strengths[a][b]


def majority_matrix(profile: RankingProfile, weights=None) -> MajorityMatrix:
    """Pairwise counts; weights default to the profile's own."""
    if weights is None:
        weights = profile.weights
    m = profile.m
    counts = [[0] * m for _ in range(m)]
    for ranking, w in zip(profile.rankings, weights):
        position = {c: k for k, c in enumerate(ranking)}
        for a in range(m):
            for b in range(m):
                if a != b and position[a] < position[b]:
                    counts[a][b] += w
    return MajorityMatrix(tuple(tuple(row) for row in counts), sum(weights))


def dominates(matrix: MajorityMatrix, a: int, b: int) -> bool:
    """Strict majority: more than half the voters rank a before b."""
    return 2 * matrix[a, b] > matrix.n


def weakly_dominates(matrix: MajorityMatrix, a: int, b: int) -> bool:
    return 2 * matrix[a, b] >= matrix.n


def pareto_dominates(matrix: MajorityMatrix, a: int, b: int) -> bool:
    """Unanimity: every voter ranks a before b."""
    return matrix[a, b] == matrix.n


def copeland_scores(matrix: MajorityMatrix) -> list[int]:
    return [
        sum(1 for b in range(matrix.m) if b != a and dominates(matrix, a, b))
        for a in range(matrix.m)
    ]


def condorcet_winner(matrix: MajorityMatrix) -> Optional[int]:
    """The candidate strictly beating all others, if one exists."""
    for a in range(matrix.m):
        if all(dominates(matrix, a, b) for b in range(matrix.m) if b != a):
            return a
    return None


def smith_set(matrix: MajorityMatrix) -> frozenset[int]:
    """Minimal nonempty set whose members all strictly beat every outsider.

    The set is a prefix of the Copeland ordering: every member beats all
    outsiders, so member scores strictly exceed outsider scores.  We grow
    the prefix until it is dominant.
    """
    m = matrix.m
    order = sorted(range(m), key=lambda c: (-copeland_scores(matrix)[c], c))
    for k in range(1, m + 1):
        prefix = order[:k]
        rest = order[k:]
        if all(dominates(matrix, a, b) for a in prefix for b in rest):
            return frozenset(prefix)
    return frozenset(range(m))


def beatpath_strengths(matrix: MajorityMatrix) -> BeatpathStrengths:
    """Widest-path closure over the strict-domination digraph.

    A direct defeat counts as a beatpath of length one; pairs with no
    beatpath get strength 0.
    """
    m = matrix.m
    p = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if a != b and dominates(matrix, a, b):
                p[a][b] = matrix[a, b]
    for mid in range(m):
        for a in range(m):
            if a == mid:
                continue
            for b in range(m):
                if b == a or b == mid:
                    continue
                through = min(p[a][mid], p[mid][b])
                if through > p[a][b]:
                    p[a][b] = through
    return BeatpathStrengths(tuple(tuple(row) for row in p))


def immunity_set(matrix: MajorityMatrix) -> frozenset[int]:
    """Candidates whose every strict defeat is answered by a beatpath back
    at least as strong as the defeat."""
    paths = beatpath_strengths(matrix)
    result = []
    for a in range(matrix.m):
        ok = True
        for b in range(matrix.m):
            if b != a and dominates(matrix, b, a) and paths[a, b] < matrix[b, a]:
                ok = False
                break
        if ok:
            result.append(a)
    return frozenset(result)

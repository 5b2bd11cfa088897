"""Election instances over pseudo-metric spaces.

An instance couples voters and candidates embedded in a metric space with
one acceptability radius per voter.  Voters are stored as *groups*: a group
is a set of identical voters sharing a position, radius, and integer
weight, and every count in the package treats a weight-w group as w voters.
Positions may be explicit (a full distance matrix) or Euclidean points.

The induced preference data comes in two forms: a strict ranking per group
(closer candidates first) and an approval set per group (the candidates
inside the acceptability ball).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import EmptyApprovalError, InternalInconsistencyError, SizeGuardError
from .numerics import (
    TAU,
    Number,
    approx_eq,
    approx_leq,
    cluster_sorted,
    exact_sqrt,
    is_exact,
)

Point = tuple[Number, ...]


def _as_point(value) -> Point:
    if isinstance(value, (tuple, list)):
        return tuple(value)
    return (value,)


def _euclidean_distance(a: Point, b: Point) -> Number:
    if len(a) == 1:
        return abs(a[0] - b[0])
    diffs = [x - y for x, y in zip(a, b)]
    sq = sum(d * d for d in diffs)
    if all(is_exact(d) for d in diffs):
        return exact_sqrt(sq)
    return math.sqrt(float(sq))


@dataclass(frozen=True)
class TieBreakOrder:
    """Total order over candidates; earlier entries are more preferred.

    Winner selection returns the most-preferred tied candidate; elimination
    steps remove the least preferred among the tied.
    """

    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("tie-break order must be a permutation of 0..m-1")

    @staticmethod
    def default(m: int) -> "TieBreakOrder":
        return TieBreakOrder(tuple(range(m)))

    @property
    def m(self) -> int:
        return len(self.order)

    def position(self, candidate: int) -> int:
        return self.order.index(candidate)

    def best(self, candidates: Iterable[int]) -> int:
        return min(candidates, key=self.position)

    def worst(self, candidates: Iterable[int]) -> int:
        return max(candidates, key=self.position)

    def sorted(self, candidates: Iterable[int]) -> list[int]:
        return sorted(candidates, key=self.position)


@dataclass(frozen=True)
class EuclideanMetric:
    """Voters and candidates as points in R^k with the Euclidean distance."""

    dim: int
    voter_points: tuple[Point, ...]
    candidate_points: tuple[Point, ...]

    def __post_init__(self):
        for p in itertools.chain(self.voter_points, self.candidate_points):
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")

    @property
    def groups(self) -> int:
        return len(self.voter_points)

    @property
    def m(self) -> int:
        return len(self.candidate_points)

    def voter_candidate(self, i: int, c: int) -> Number:
        return _euclidean_distance(self.voter_points[i], self.candidate_points[c])

    def candidate_candidate(self, a: int, b: int) -> Number:
        return _euclidean_distance(self.candidate_points[a], self.candidate_points[b])

    def voter_voter(self, i: int, j: int) -> Number:
        return _euclidean_distance(self.voter_points[i], self.voter_points[j])

    def check_triangle(self, tol: float = TAU) -> list[str]:
        # Euclidean distances satisfy the triangle inequality by construction.
        return []


@dataclass(frozen=True)
class MatrixMetric:
    """Explicit pairwise distances; rows/columns list voters, then candidates."""

    groups: int
    m: int
    entries: tuple[tuple[Number, ...], ...]

    def __post_init__(self):
        size = self.groups + self.m
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValueError(f"distance matrix must be {size}x{size}")
        for i in range(size):
            if self.entries[i][i] != 0:
                raise ValueError(f"distance matrix diagonal entry {i} is nonzero")
            for j in range(i + 1, size):
                if self.entries[i][j] < 0:
                    raise ValueError(f"negative distance at ({i}, {j})")
                if not approx_eq(self.entries[i][j], self.entries[j][i]):
                    raise ValueError(f"asymmetric distance between {i} and {j}")

    def voter_candidate(self, i: int, c: int) -> Number:
        return self.entries[i][self.groups + c]

    def candidate_candidate(self, a: int, b: int) -> Number:
        return self.entries[self.groups + a][self.groups + b]

    def voter_voter(self, i: int, j: int) -> Number:
        return self.entries[i][j]

    def check_triangle(self, tol: float = TAU) -> list[str]:
        size = self.groups + self.m
        bad = []
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    lhs = self.entries[x][z]
                    rhs = self.entries[x][y] + self.entries[y][z]
                    if not approx_leq(lhs, rhs, tol):
                        bad.append(f"d({x},{z}) > d({x},{y}) + d({y},{z})")
        return bad


Metric = EuclideanMetric | MatrixMetric


@dataclass(frozen=True)
class ElectionInstance:
    """A metric election: groups of voters, candidates, radii, tie-break order."""

    metric: Metric
    weights: tuple[int, ...]
    radii: tuple[Number, ...]
    lex: TieBreakOrder
    names: tuple[str, ...]

    def __post_init__(self):
        if self.metric.m < 1:
            raise ValueError("an instance needs at least one candidate")
        if self.metric.groups < 1:
            raise ValueError("an instance needs at least one voter")
        if len(self.weights) != self.metric.groups:
            raise ValueError("one weight per voter group required")
        if len(self.radii) != self.metric.groups:
            raise ValueError("one radius per voter group required")
        if any((not isinstance(w, int)) or w < 1 for w in self.weights):
            raise ValueError("group weights must be positive integers")
        if any(r < 0 for r in self.radii):
            raise ValueError("acceptability radii must be non-negative")
        if self.lex.m != self.metric.m:
            raise ValueError("tie-break order size must match candidate count")
        if len(self.names) != self.metric.m:
            raise ValueError("one display name per candidate required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("candidate names must be distinct")

    @property
    def groups(self) -> int:
        return self.metric.groups

    @property
    def m(self) -> int:
        return self.metric.m

    @property
    def n(self) -> int:
        return sum(self.weights)

    def distance(self, voter: int, candidate: int) -> Number:
        return self.metric.voter_candidate(voter, candidate)

    def distance_row(self, voter: int) -> list[Number]:
        return [self.distance(voter, c) for c in range(self.m)]

    def candidate_distance(self, a: int, b: int) -> Number:
        return self.metric.candidate_candidate(a, b)

    def name_of(self, candidate: int) -> str:
        return self.names[candidate]

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def nearest_distance(self, voter: int) -> Number:
        return min(self.distance_row(voter))

    def expand_weights(self) -> "ElectionInstance":
        """Unit-weight copy: each weighted group becomes that many groups."""
        if all(w == 1 for w in self.weights):
            return self
        if not isinstance(self.metric, EuclideanMetric):
            raise InternalInconsistencyError(
                "weight expansion is only supported for Euclidean metrics"
            )
        points, radii = [], []
        for i, w in enumerate(self.weights):
            points.extend([self.metric.voter_points[i]] * w)
            radii.extend([self.radii[i]] * w)
        metric = EuclideanMetric(self.metric.dim, tuple(points), self.metric.candidate_points)
        return ElectionInstance(metric, (1,) * len(points), tuple(radii), self.lex, self.names)


def euclidean_instance(
    candidates: Sequence,
    voters: Sequence[tuple],
    lex: Optional[Sequence[int]] = None,
    names: Optional[Sequence[str]] = None,
) -> ElectionInstance:
    """Build an instance from point data.

    candidates: one point (scalar or coordinate tuple) per candidate.
    voters: triples (point, weight, radius).
    lex: candidate indices, most preferred first (defaults to index order).
    """
    cand_points = tuple(_as_point(p) for p in candidates)
    voter_points = tuple(_as_point(v[0]) for v in voters)
    dim = len(cand_points[0]) if cand_points else 1
    metric = EuclideanMetric(dim, voter_points, cand_points)
    weights = tuple(int(v[1]) for v in voters)
    radii = tuple(v[2] for v in voters)
    m = len(cand_points)
    order = TieBreakOrder(tuple(lex) if lex is not None else tuple(range(m)))
    display = tuple(names) if names is not None else tuple(f"c{i + 1}" for i in range(m))
    return ElectionInstance(metric, weights, radii, order, display)


@dataclass(frozen=True)
class RankingProfile:
    """One strict ranking (a permutation of candidates) per voter group."""

    rankings: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]
    m: int

    def __post_init__(self):
        if len(self.rankings) != len(self.weights):
            raise ValueError("one weight per ranking required")
        expected = list(range(self.m))
        for r in self.rankings:
            if sorted(r) != expected:
                raise ValueError(f"ranking {r} is not a permutation of 0..{self.m - 1}")

    @property
    def n(self) -> int:
        return sum(self.weights)

    def prefers(self, voter: int, a: int, b: int) -> bool:
        ranking = self.rankings[voter]
        return ranking.index(a) < ranking.index(b)


@dataclass(frozen=True)
class ApprovalProfile:
    """One nonempty approval set per voter group."""

    approvals: tuple[frozenset[int], ...]
    weights: tuple[int, ...]
    m: int

    def __post_init__(self):
        if len(self.approvals) != len(self.weights):
            raise ValueError("one weight per approval set required")
        for i, a in enumerate(self.approvals):
            if not a:
                raise EmptyApprovalError(i)
            if any(c < 0 or c >= self.m for c in a):
                raise ValueError(f"approval set {set(a)} out of candidate range")

    @property
    def n(self) -> int:
        return sum(self.weights)


def induced_ranking(instance: ElectionInstance) -> RankingProfile:
    """Canonical ranking profile: by distance, exact ties broken by lex."""
    rankings = []
    for i in range(instance.groups):
        row = instance.distance_row(i)
        by_distance = sorted(range(instance.m), key=lambda c: (float(row[c]), c))
        clusters = cluster_sorted([(row[c], c) for c in by_distance])
        ranking: list[int] = []
        for block in clusters:
            ranking.extend(instance.lex.sorted(block))
        rankings.append(tuple(ranking))
    return RankingProfile(tuple(rankings), instance.weights, instance.m)


def consistent_rankings(
    instance: ElectionInstance, voter: int, limit: int = 20000
) -> tuple[tuple[int, ...], ...]:
    """All strict rankings compatible with the voter's distances.

    Candidates at (tolerance-)equal distance may appear in any relative
    order; strictly closer candidates always come first.  Raises
    SizeGuardError when the count of such rankings exceeds `limit`.
    """
    row = instance.distance_row(voter)
    by_distance = sorted(range(instance.m), key=lambda c: (float(row[c]), c))
    clusters = cluster_sorted([(row[c], c) for c in by_distance])
    count = 1
    for block in clusters:
        count *= math.factorial(len(block))
        if count > limit:
            raise SizeGuardError(
                f"voter {voter} admits more than {limit} consistent rankings"
            )
    result = []
    for arrangement in itertools.product(*(itertools.permutations(b) for b in clusters)):
        ranking: tuple[int, ...] = tuple(itertools.chain.from_iterable(arrangement))
        result.append(ranking)
    return tuple(result)


def truthful_approvals(instance: ElectionInstance, tol: float = TAU) -> ApprovalProfile:
    """Ball semantics: group i approves candidates within radius(i)."""
    approvals = []
    for i in range(instance.groups):
        row = instance.distance_row(i)
        ball = frozenset(
            c for c in range(instance.m) if approx_leq(row[c], instance.radii[i], tol)
        )
        if not ball:
            raise EmptyApprovalError(
                i, f"nearest candidate at {min(row)}, radius {instance.radii[i]}"
            )
        approvals.append(ball)
    return ApprovalProfile(tuple(approvals), instance.weights, instance.m)


def approvals_at_radius(
    instance: ElectionInstance, radius: Number, tol: float = TAU
) -> ApprovalProfile:
    """Approvals from one common radius; globally consistent by construction."""
    approvals = []
    for i in range(instance.groups):
        row = instance.distance_row(i)
        ball = frozenset(c for c in range(instance.m) if approx_leq(row[c], radius, tol))
        if not ball:
            raise EmptyApprovalError(
                i, f"nearest candidate at {min(row)}, common radius {radius}"
            )
        approvals.append(ball)
    return ApprovalProfile(tuple(approvals), instance.weights, instance.m)


def is_locally_consistent(
    instance: ElectionInstance, profile: ApprovalProfile, tol: float = TAU
) -> bool:
    """Every approval set is closed downward under 'closer to this voter'."""
    for i, approved in enumerate(profile.approvals):
        row = instance.distance_row(i)
        threshold = max(row[c] for c in approved)
        for c in range(instance.m):
            if c not in approved and approx_leq(row[c], threshold, tol):
                return False
    return True


def is_globally_consistent(
    instance: ElectionInstance, profile: ApprovalProfile, tol: float = TAU
) -> bool:
    """No voter rejects a candidate at a distance some voter accepts.

    Equivalent to: max approved distance <= min non-approved distance,
    which is what a single common radius enforces.
    """
    max_approved = None
    min_rejected = None
    for i, approved in enumerate(profile.approvals):
        row = instance.distance_row(i)
        for c in range(instance.m):
            d = row[c]
            if c in approved:
                if max_approved is None or d > max_approved:
                    max_approved = d
            else:
                if min_rejected is None or d < min_rejected:
                    min_rejected = d
    if min_rejected is None or max_approved is None:
        return True
    return not approx_leq(min_rejected, max_approved, tol)


def approver_set(profile: ApprovalProfile, candidate: int) -> frozenset[int]:
    """Voter groups whose approval set contains the candidate."""
    return frozenset(i for i, a in enumerate(profile.approvals) if candidate in a)


def approval_count(profile: ApprovalProfile, candidate: int) -> int:
    """Number of voters (weighted) approving the candidate."""
    return sum(
        w for a, w in zip(profile.approvals, profile.weights) if candidate in a
    )


def efficiency_fraction(
    instance: ElectionInstance, profile: ApprovalProfile, c_opt: int
) -> Fraction:
    """Fraction of voters approving the designated optimal candidate."""
    return Fraction(approval_count(profile, c_opt), instance.n)


def breakpoint_radii(instance: ElectionInstance, tol: float = TAU) -> list[Number]:
    """Distinct voter-candidate distances, ascending; the approval profile
    under a common radius is constant between consecutive breakpoints."""
    distances = sorted(
        (instance.distance(i, c) for i in range(instance.groups) for c in range(instance.m)),
        key=float,
    )
    result: list[Number] = []
    for d in distances:
        if not result or not approx_eq(d, result[-1], tol):
            result.append(d)
    return result


def min_common_radius(instance: ElectionInstance) -> Number:
    """Smallest common radius leaving every acceptability ball nonempty."""
    return max(instance.nearest_distance(i) for i in range(instance.groups))


def validate_instance(instance: ElectionInstance, tol: float = TAU) -> list[str]:
    """Diagnostics for semantic issues construction does not reject."""
    problems = []
    for i in range(instance.groups):
        if not approx_leq(instance.nearest_distance(i), instance.radii[i], tol):
            problems.append(
                f"voter group {i} approves no candidate "
                f"(nearest at {instance.nearest_distance(i)}, radius {instance.radii[i]})"
            )
    problems.extend(instance.metric.check_triangle(tol))
    return problems

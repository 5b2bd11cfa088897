"""Parametric worst-case instance families, each with a self-checking
certificate.

Every generator returns (instance, certificate); the certificate names the
rule(s) it stresses, the expected winner and optimal candidate, and the
expected distortion (exact rational for one-dimensional rational layouts,
toleranced for epsilon-parameterized or simplex geometry).  Generators
verify their own certificate at build time, so a returned instance is
guaranteed to reproduce its claim.

Families:

* av_degenerate: approval voting with unbounded distance distortion.
* av_hard: approval voting meeting the common-radius bound curve, three
  regimes matching the bound's three finite pieces.
* smith_cycle: cyclic profiles on a regular simplex with a full Smith set;
  immune rules lose (l-1)/l here.
* ell1_pair: two indistinguishable two-candidate instances forcing any
  fixed rule to lose about 1/2 on one of them.
* condorcet_hard: a Condorcet winner nobody finds acceptable.
* copeland_hard: a majority cycle where Copeland's tie-break picks the
  least acceptable candidate.
* plurality_hard / scoring_hard: positional-rule worst cases.
* stv_hard_1d / stv_hard_simplex: doubling-cascade eliminations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .distortion import (
    DistortionValue,
    ab_distortion,
    av_bound,
    distance_distortion,
    optimal_by_acceptability,
    optimal_by_distance,
)
from .errors import DivisibilityError, InternalInconsistencyError, PreconditionError
from .majority import majority_matrix, smith_set
from .model import (
    ElectionInstance,
    RankingProfile,
    TieBreakOrder,
    approval_count,
    euclidean_instance,
    induced_ranking,
    is_globally_consistent,
    is_locally_consistent,
    truthful_approvals,
)
from .numerics import TAU, Number, approx_eq
from .rules import RANKING_RULES, ScoringVector, av_winner, scoring_winner

Point = tuple[float, ...]

DEFAULT_EPS = Fraction(1, 10000)


@dataclass(frozen=True)
class SimplexGeometry:
    """A regular k-simplex with unit edges in R^k."""

    k: int
    vertices: tuple[Point, ...]
    circumcenter: Point
    circumradius: float
    height: float

    def face_circumcenter(self, indices: Sequence[int]) -> Point:
        """Circumcenter of the regular sub-simplex spanned by some vertices
        (the centroid, since all faces of a regular simplex are regular)."""
        pts = [self.vertices[i] for i in indices]
        return tuple(sum(p[t] for p in pts) / len(pts) for t in range(self.k))


def simplex(k: int) -> SimplexGeometry:
    """Coordinates of a regular k-simplex with unit edge length.

    Vertices are placed one dimension at a time: each new vertex sits above
    the centroid of the previous face at the height of the enlarged simplex.
    circumradius = sqrt(k / (2(k+1))), height = sqrt((k+1) / (2k)).
    """
    if k < 1:
        raise ValueError("the simplex dimension must be at least 1")
    verts: list[list[float]] = [[0.0] * k]
    for j in range(1, k + 1):
        centroid = [sum(v[t] for v in verts) / len(verts) for t in range(k)]
        new = centroid[:]
        new[j - 1] += math.sqrt((j + 1) / (2 * j))
        verts.append(new)
    vertices = tuple(tuple(v) for v in verts)
    center = tuple(sum(v[t] for v in vertices) / (k + 1) for t in range(k))
    radius = math.sqrt(k / (2 * (k + 1)))
    geom = SimplexGeometry(k, vertices, center, radius, math.sqrt((k + 1) / (2 * k)))
    for a in range(k + 1):
        if abs(_dist(vertices[a], center) - radius) > 1e-9:
            raise InternalInconsistencyError("simplex circumradius mismatch")
        for b in range(a + 1, k + 1):
            if abs(_dist(vertices[a], vertices[b]) - 1.0) > 1e-9:
                raise InternalInconsistencyError("simplex edge length mismatch")
    return geom


def _dist(a: Sequence[float], b: Sequence[float]) -> float:
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


def _midpoint(a: Sequence[float], b: Sequence[float]) -> Point:
    return tuple((x + y) / 2 for x, y in zip(a, b))


@dataclass(frozen=True)
class HardInstanceCertificate:
    """What a generated instance promises, checkable by re-running the rule.

    When `profile` is set, the named ranking rules are evaluated on it (it
    is one of the profiles the metric induces; co-located candidates leave
    the canonical tie-broken profile too tame to witness the bound).
    """

    rules: tuple[str, ...]
    expected_winner: int
    expected_optimal: int
    optimal_kind: str  # "distance" | "acceptability"
    distortion_kind: str  # "distance" | "ab"
    expected: DistortionValue
    tolerance: float = 0.0
    limit: Optional[DistortionValue] = None
    profile: Optional[RankingProfile] = None
    extras: dict = field(default_factory=dict, compare=False)


def evaluate_certificate_rule(
    instance: ElectionInstance, cert: HardInstanceCertificate, rule: str
):
    """Run one certificate rule on the instance; returns a RuleOutcome."""
    if rule == "av":
        return av_winner(truthful_approvals(instance), instance.lex)
    profile = cert.profile if cert.profile is not None else induced_ranking(instance)
    if rule == "scoring":
        vector = ScoringVector(tuple(cert.extras["vector"]))
        return scoring_winner(profile, vector, instance.lex)
    return RANKING_RULES[rule](profile, instance.lex)


def verify_certificate(
    instance: ElectionInstance, cert: HardInstanceCertificate
) -> list[str]:
    """Re-run the certificate's rules; report every discrepancy."""
    problems = []
    if cert.optimal_kind == "distance":
        opt, _ = optimal_by_distance(instance)
    else:
        opt, _ = optimal_by_acceptability(instance)
    if opt != cert.expected_optimal:
        problems.append(
            f"optimal ({cert.optimal_kind}) is {instance.name_of(opt)}, "
            f"expected {instance.name_of(cert.expected_optimal)}"
        )
    for rule in cert.rules:
        outcome = evaluate_certificate_rule(instance, cert, rule)
        if outcome.winner != cert.expected_winner:
            problems.append(
                f"{rule} elects {instance.name_of(outcome.winner)}, "
                f"expected {instance.name_of(cert.expected_winner)}"
            )
            continue
        if cert.distortion_kind == "distance":
            achieved = distance_distortion(instance, outcome.winner)
        else:
            achieved = ab_distortion(instance, outcome.winner)
        if cert.tolerance == 0:
            ok = achieved.value == cert.expected.value
        elif achieved.is_infinite or cert.expected.is_infinite:
            ok = achieved.is_infinite and cert.expected.is_infinite
        else:
            ok = abs(float(achieved) - float(cert.expected)) <= cert.tolerance
        if not ok:
            problems.append(
                f"{rule} distortion is {achieved.render()}, "
                f"expected {cert.expected.render()}"
            )
    return problems


def _checked(instance: ElectionInstance, cert: HardInstanceCertificate):
    problems = verify_certificate(instance, cert)
    if problems:
        raise InternalInconsistencyError("; ".join(problems))
    return instance, cert


def gen_av_degenerate(n: int) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """Two candidates, all voters on the far-from-lex-favored one, radius 1:
    approval voting ties and the tie-break elects the distance-worst
    candidate, whose distortion is infinite."""
    if n < 1:
        raise PreconditionError("at least one voter required")
    instance = euclidean_instance(
        candidates=[0, 1],
        voters=[(0, n, 1)],
        lex=[1, 0],
        names=("co", "cw"),
    )
    cert = HardInstanceCertificate(
        rules=("av",),
        expected_winner=1,
        expected_optimal=0,
        optimal_kind="distance",
        distortion_kind="distance",
        expected=DistortionValue.infinite(),
    )
    return _checked(instance, cert)


def _require_integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise DivisibilityError(f"{what} = {value} must be an integer")
    return int(value)


def gen_av_hard(
    p: Fraction,
    n: int,
    eps: Fraction = DEFAULT_EPS,
    regime: str = "mid",
) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """Common-radius approval instances approaching the bound curve.

    regime "low"  (p in (0, 1/4]): the winner ties the optimum at a far
      point while the remaining voters sit on throwaway candidates packed
      around the optimum; distortion -> (1-p)/p as eps -> 0.
    regime "mid"  (p in [1/4, 1/2]): two off-axis groups approving only
      flank candidates; distortion -> 3.
    regime "high" (p in [1/2, 1)): collinear, distortion -> (2-p)/(1-p).

    The certificate stores the exact achieved value at the given eps and
    the limiting bound.
    """
    p = Fraction(p)
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    pn = _require_integral(p * n, "p*n")
    if regime == "low":
        if not 0 < p <= Fraction(1, 4):
            raise PreconditionError("the low regime needs p in (0, 1/4]")
        spare = n - 2 * pn
        negatives = (spare + 2) // 2
        positives = spare - negatives
        candidates: list = [Fraction(0), Fraction(1)]
        names = ["co", "cw"]
        voters: list = [(Fraction(0), pn, eps / 2), (Fraction(1), pn, eps / 2)]
        slot = 0
        for j in range(1, negatives + 1):
            candidates.append(-j * eps)
            voters.append((-j * eps, 1, eps / 2))
            slot += 1
            names.append(f"d{slot}")
        for j in range(1, positives + 1):
            candidates.append(j * eps)
            voters.append((j * eps, 1, eps / 2))
            slot += 1
            names.append(f"d{slot}")
        lex = [1, 0] + list(range(2, len(candidates)))
        instance = euclidean_instance(candidates, voters, lex=lex, names=names)
        sum_w = sum(w * abs(pos - Fraction(1)) for pos, w, _ in voters)
        sum_o = sum(w * abs(pos) for pos, w, _ in voters)
        achieved = DistortionValue.from_ratio(sum_w, sum_o)
        winner, optimal = 1, 0
    elif regime == "mid":
        if not Fraction(1, 4) <= p <= Fraction(1, 2):
            raise PreconditionError("the mid regime needs p in [1/4, 1/2]")
        if n % 2:
            raise PreconditionError("the mid regime needs an even n")
        flank = _require_integral(Fraction(n, 2) - pn, "n/2 - p*n")
        radius = Fraction(1)
        cands = [
            (3 * radius + 2 * eps, Fraction(0)),  # cw
            (radius + eps, Fraction(0)),  # co
            (Fraction(0), radius + eps),  # c1
            (Fraction(0), -radius - eps),  # c2
        ]
        voters = [
            ((Fraction(0), eps), flank, radius),
            ((Fraction(0), -eps), flank, radius),
            ((radius + eps, Fraction(0)), pn, radius),
            ((2 * radius + 2 * eps, Fraction(0)), pn, radius),
        ]
        voters = [v for v in voters if v[1] > 0]
        instance = euclidean_instance(
            cands, voters, lex=[0, 1, 2, 3], names=("cw", "co", "c1", "c2")
        )
        winner, optimal = 0, 1
        achieved = distance_distortion(instance, winner)
    elif regime == "high":
        if not Fraction(1, 2) <= p < 1:
            raise PreconditionError("the high regime needs p in [1/2, 1)")
        radius = Fraction(1)
        far = n - pn
        if far < 1:
            raise PreconditionError("p < 1 requires at least one non-approving voter")
        candidates = [2 * radius + eps, radius + eps, -radius]
        voters = [(Fraction(0), far, radius), (radius + eps, pn, radius)]
        instance = euclidean_instance(
            candidates, voters, lex=[0, 1, 2], names=("cw", "co", "c1")
        )
        winner, optimal = 0, 1
        sum_o = far * (radius + eps)
        sum_w = far * (2 * radius + eps) + pn * radius
        achieved = DistortionValue.from_ratio(sum_w, sum_o)
    else:
        raise PreconditionError(f"unknown regime {regime!r}")

    profile = truthful_approvals(instance)
    if approval_count(profile, optimal) != pn:
        raise InternalInconsistencyError("the construction is not p-efficient")
    cert = HardInstanceCertificate(
        rules=("av",),
        expected_winner=winner,
        expected_optimal=optimal,
        optimal_kind="distance",
        distortion_kind="distance",
        expected=achieved,
        tolerance=0.0 if achieved.exact else 1e-9,
        limit=av_bound(p),
        extras={"p": p, "regime": regime},
    )
    return _checked(instance, cert)


def gen_smith_cycle(
    ell: int, n: int, shift: int = 1
) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """Cyclic rankings on a regular (ell-1)-simplex, full Smith set.

    Candidates sit at the vertices; for k = 1..ell a group of n/ell voters
    sits at the circumcenter of the face spanned by the k candidates it
    accepts (the cyclic segment ending at the shift candidate), under one
    common radius equal to the circumradius.  The tie-break order is the
    cyclic order starting just after the shift candidate, which makes the
    canonical profile exactly the cyclic one.  Immune rules elect the
    shift candidate's successor, approved by only n/ell voters, while the
    shift candidate is acceptable to everyone.
    """
    if ell < 2:
        raise PreconditionError("the cyclic family needs at least two candidates")
    if n % ell:
        raise DivisibilityError(f"n must be divisible by ell (got n={n}, ell={ell})")
    if not 1 <= shift <= ell:
        raise PreconditionError(f"shift must lie in 1..{ell}")
    i0 = shift - 1
    geom = simplex(ell - 1)
    voters = []
    intended = []
    for k in range(1, ell + 1):
        accepted = [(i0 - k + 1 + t) % ell for t in range(k)]
        position = geom.face_circumcenter(accepted)
        voters.append((position, n // ell, geom.circumradius))
        intended.append(tuple((i0 - k + 1 + t) % ell for t in range(ell)))
    lex = [(i0 + 1 + t) % ell for t in range(ell)]
    instance = euclidean_instance(
        [geom.vertices[c] for c in range(ell)],
        voters,
        lex=lex,
        names=tuple(f"c{c + 1}" for c in range(ell)),
    )
    profile = induced_ranking(instance)
    if profile.rankings != tuple(intended):
        raise InternalInconsistencyError("canonical rankings are not the cyclic ones")
    if len(smith_set(majority_matrix(profile))) != ell:
        raise InternalInconsistencyError("the Smith set does not cover all candidates")
    cert = HardInstanceCertificate(
        rules=("ranked-pairs", "schulze"),
        expected_winner=(i0 + 1) % ell,
        expected_optimal=i0,
        optimal_kind="acceptability",
        distortion_kind="ab",
        expected=DistortionValue(Fraction(ell - 1, ell)),
        extras={"smith_size": ell, "shift": shift},
    )
    return _checked(instance, cert)


def gen_ell1_pair(n: int) -> tuple[ElectionInstance, ElectionInstance]:
    """Two instances with identical induced rankings but opposite approval
    structure: with candidates at 0 and 3 and a common radius 2, one
    instance makes the right candidate acceptable to all, the other the
    left one.  A fixed rule elects the same candidate in both, losing at
    least 1/2 - 1/n on one of them."""
    if n < 4 or n % 2:
        raise DivisibilityError("n must be even and at least 4")
    names = ("c1", "c2")
    lex = [1, 0]
    first = euclidean_instance(
        candidates=[0, 3],
        voters=[(1, n // 2 + 1, 2), (3, n // 2 - 1, 2)],
        lex=lex,
        names=names,
    )
    second = euclidean_instance(
        candidates=[0, 3],
        voters=[(0, n // 2 + 1, 2), (2, n // 2 - 1, 2)],
        lex=lex,
        names=names,
    )
    if sorted(induced_ranking(first).rankings) != sorted(induced_ranking(second).rankings):
        raise InternalInconsistencyError("the two instances are distinguishable")
    return first, second


def gen_condorcet_hard(n: int) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """A Condorcet winner no voter finds acceptable.

    Three clusters each approve only their local candidate, but every
    cluster ranks the central candidate second, so it beats everything
    pairwise while collecting zero approvals.  Condorcet-consistent rules
    therefore lose exactly 1/2 - 1/n against the largest cluster's
    candidate."""
    if n % 4:
        raise DivisibilityError("n must be divisible by 4")
    if n < 8:
        raise PreconditionError("n must be at least 8 for the majorities to hold")
    candidates = [(3, 3), (0, 1), (6, 1), (3, 2)]  # cx, cy, cz, cc
    voters = [
        ((3, 4), n // 2 - 1, 1),
        ((1, 1), n // 4 + 1, 1),
        ((5, 1), n // 4, 1),
    ]
    instance = euclidean_instance(
        candidates, voters, lex=[0, 1, 2, 3], names=("cx", "cy", "cz", "cc")
    )
    cert = HardInstanceCertificate(
        rules=("copeland", "ranked-pairs", "schulze"),
        expected_winner=3,
        expected_optimal=0,
        optimal_kind="acceptability",
        distortion_kind="ab",
        expected=DistortionValue(Fraction(n // 2 - 1, n)),
    )
    return _checked(instance, cert)


def gen_copeland_hard(n: int) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """Equilateral-triangle majority cycle where Copeland's three-way tie
    resolves to the candidate approved by only two voters (the ones at the
    circumcenter), for a shortfall of 1 - 2/n."""
    if n % 2 or n < 6:
        raise DivisibilityError("n must be even and at least 6")
    half = math.sqrt(3) / 2
    candidates = [(Fraction(0), Fraction(0)), (Fraction(1, 2), half), (Fraction(1), Fraction(0))]
    center = (Fraction(1, 2), half / 3)
    radius = math.sqrt(1 / 3)
    voters = [
        ((Fraction(0), Fraction(0)), n // 2 - 1, radius),
        ((Fraction(1, 2), Fraction(0)), n // 2 - 1, radius),
        (center, 2, radius),
    ]
    instance = euclidean_instance(
        candidates, voters, lex=[1, 2, 0], names=("c1", "c2", "c3")
    )
    cert = HardInstanceCertificate(
        rules=("copeland",),
        expected_winner=1,
        expected_optimal=0,
        optimal_kind="acceptability",
        distortion_kind="ab",
        expected=DistortionValue(Fraction(n - 2, n)),
    )
    return _checked(instance, cert)


def gen_plurality_hard(
    m: int, n: int, eps: Fraction = DEFAULT_EPS
) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """m equal groups, each topping a different candidate, scores all tied.

    The lex-favored candidate c1 wins the tie yet only its own group finds
    it acceptable; every other candidate is acceptable to all n voters.
    The worst induced profile realizes the m-way tie (the co-located
    candidates make the canonical tie-broken profile collapse onto one
    favorite), so the certificate pins that profile explicitly."""
    if m < 2:
        raise PreconditionError("at least two candidates required")
    if n % m:
        raise DivisibilityError(f"n must be divisible by m (got n={n}, m={m})")
    radius = Fraction(1)
    eps = Fraction(eps)
    if not 0 < eps < radius:
        raise PreconditionError("eps must lie in (0, 1)")
    group = n // m
    others = 2 * radius - eps
    candidates = [Fraction(0)] + [others] * (m - 1)
    voters = [(radius - eps, group, radius)]
    voters += [(3 * radius - eps, group, radius) for _ in range(m - 1)]
    instance = euclidean_instance(
        candidates,
        voters,
        lex=list(range(m)),
        names=tuple(f"c{c + 1}" for c in range(m)),
    )
    rankings = [tuple(range(m))]
    for j in range(1, m):
        rest = [c for c in range(1, m) if c != j]
        rankings.append(tuple([j] + rest + [0]))
    profile = RankingProfile(tuple(rankings), instance.weights, m)
    cert = HardInstanceCertificate(
        rules=("plurality",),
        expected_winner=0,
        expected_optimal=1,
        optimal_kind="acceptability",
        distortion_kind="ab",
        expected=DistortionValue(Fraction(m - 1, m)),
        profile=profile,
    )
    return _checked(instance, cert)


def gen_scoring_hard(
    vector: ScoringVector, n: int, eps: Fraction = DEFAULT_EPS
) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """Tight instance for a monotone scoring vector whose first gap is its
    smallest one.

    Two groups: one adores c1 and approves nothing else; the other ranks c1
    dead last while approving everyone.  The group sizes equalize the c1
    and c2 scores, and the lex order hands c2 the win with an acceptability
    shortfall of (s1-sm) / (2 s1 - s2 - sm).  Constant vectors use the
    all-voters-on-c1 layout instead and lose everything."""
    m = vector.m
    if m < 2:
        raise PreconditionError("at least two candidates required")
    scores = [Fraction(s) for s in vector.scores]
    for i in range(m - 1):
        if scores[i] < scores[i + 1]:
            raise PreconditionError("scores must be non-increasing")
        if scores[0] - scores[1] > scores[i] - scores[i + 1]:
            raise PreconditionError("the first score gap must be the smallest")
    radius = Fraction(1)
    eps = Fraction(eps)
    names = tuple(f"c{c + 1}" for c in range(m))
    if vector.is_constant:
        candidates = [Fraction(0)] + [radius + eps] * (m - 1)
        voters = [(Fraction(0), n, radius)]
        lex = [m - 1] + list(range(m - 1))
        instance = euclidean_instance(candidates, voters, lex=lex, names=names)
        cert = HardInstanceCertificate(
            rules=("scoring",),
            expected_winner=m - 1,
            expected_optimal=0,
            optimal_kind="acceptability",
            distortion_kind="ab",
            expected=DistortionValue(Fraction(1)),
            extras={"vector": vector.scores},
        )
        return _checked(instance, cert)
    denom = 2 * scores[0] - scores[1] - scores[m - 1]
    size_a = _require_integral(n * (scores[0] - scores[m - 1]) / denom, "first group size")
    size_b = _require_integral(n * (scores[0] - scores[1]) / denom, "second group size")
    candidates = [eps, eps + radius] + [2 * eps + radius] * (m - 2)
    voters = [(Fraction(0), size_a, radius)]
    if size_b:
        voters.append((eps + radius, size_b, radius))
    lex = [1, 0] + list(range(2, m))
    instance = euclidean_instance(candidates, voters, lex=lex, names=names)
    cert = HardInstanceCertificate(
        rules=("scoring",),
        expected_winner=1,
        expected_optimal=0,
        optimal_kind="acceptability",
        distortion_kind="ab",
        expected=DistortionValue((scores[0] - scores[m - 1]) / denom),
        extras={"vector": vector.scores},
    )
    return _checked(instance, cert)


def _stv_lex(m: int) -> list[int]:
    return list(range(m - 1, -1, -1))


def gen_stv_hard_1d(m: int, n: int) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """Doubling cascade on a line.

    Candidate positions double so each eliminated candidate's voters fall
    through to the lex-favored far candidate cm, which survives every round
    with a doubling score yet is acceptable only to the single smallest
    group; c1 is acceptable to everyone.  Locally but not globally
    consistent."""
    if m < 2:
        raise PreconditionError("at least two candidates required")
    if n % (2 ** (m - 1)):
        raise DivisibilityError(f"n must be divisible by 2^(m-1) = {2 ** (m - 1)}")
    positions = {m - 1: 1}  # cm sits at 1
    for c in range(m - 1):
        positions[c] = 2 ** (c + 1)
    candidates = [positions[c] for c in range(m)]
    voters = [(1, n // 2 ** (m - 1), 1), (2, n // 2 ** (m - 1), 0)]
    for k in range(2, m):
        voters.append((2 ** k, n // 2 ** (m - k), 2 ** k - 2))
    instance = euclidean_instance(
        candidates,
        voters,
        lex=_stv_lex(m),
        names=tuple(f"c{c + 1}" for c in range(m)),
    )
    cert = HardInstanceCertificate(
        rules=("stv",),
        expected_winner=m - 1,
        expected_optimal=0,
        optimal_kind="acceptability",
        distortion_kind="ab",
        expected=DistortionValue(Fraction(2 ** (m - 1) - 1, 2 ** (m - 1))),
        extras={"elimination": tuple(range(m - 1))},
    )
    return _checked(instance, cert)


def gen_stv_hard_simplex(
    m: int, n: int
) -> tuple[ElectionInstance, HardInstanceCertificate]:
    """Globally consistent version of the doubling cascade.

    Candidates c2..cm at the vertices of a regular (m-2)-simplex, c1 at the
    circumcenter; group g_i halfway between c_i and the center approves
    exactly {c1, c_i} under the common radius R/2.  Score ties resolve so
    the eliminations run c1, c2, ..., and every transfer lands on cm."""
    if m < 3:
        raise PreconditionError("the simplex layout needs at least three candidates")
    if n % (2 ** (m - 1)):
        raise DivisibilityError(f"n must be divisible by 2^(m-1) = {2 ** (m - 1)}")
    geom = simplex(m - 2)
    center = geom.circumcenter
    half = geom.circumradius / 2
    candidates = [center] + [geom.vertices[v] for v in range(m - 1)]
    voters = [(center, n // 2 ** (m - 1), half)]
    for i in range(2, m):
        voters.append((_midpoint(geom.vertices[i - 2], center), n // 2 ** (m - i), half))
    voters.append((_midpoint(geom.vertices[m - 2], center), n // 2 ** (m - 1), half))
    instance = euclidean_instance(
        candidates,
        voters,
        lex=_stv_lex(m),
        names=tuple(f"c{c + 1}" for c in range(m)),
    )
    if not is_globally_consistent(instance, truthful_approvals(instance)):
        raise InternalInconsistencyError("the simplex layout must be globally consistent")
    cert = HardInstanceCertificate(
        rules=("stv",),
        expected_winner=m - 1,
        expected_optimal=0,
        optimal_kind="acceptability",
        distortion_kind="ab",
        expected=DistortionValue(Fraction(2 ** (m - 1) - 1, 2 ** (m - 1))),
        extras={"elimination": tuple(range(m - 1))},
    )
    return _checked(instance, cert)

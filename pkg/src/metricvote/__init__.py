"""Metric-space elections: rules, distortion measures, hard instances.

Voters and candidates live in a pseudo-metric space; each voter accepts
the candidates inside her acceptability ball.  The package implements the
induced ranking and approval profiles, nine resolute voting rules, two
distortion measures (distance ratio and acceptability shortfall), the
closed-form worst-case bounds, parametric generators for the instances
achieving them, and brute-force oracles plus adversarial search to verify
everything at desk scale.
"""

from .distortion import (
    DistortionValue,
    SweepEntry,
    WorstProfileResult,
    ab_distortion,
    av_bound,
    av_distortion_sweep,
    best_case_av_profile,
    condorcet_ab_bound,
    distance_distortion,
    immune_ab_bound,
    optimal_by_acceptability,
    optimal_by_distance,
    plurality_ab_bound,
    quarter_radius_profile,
    scoring_ab_bound,
    stv_ab_bound,
    sweep_max_distortion,
    total_distance,
    worst_ranking_ab_distortion,
)
from .errors import (
    DivisibilityError,
    EmptyApprovalError,
    InternalInconsistencyError,
    MetricVoteError,
    ParseError,
    PreconditionError,
    SizeGuardError,
)
from .generators import (
    HardInstanceCertificate,
    SimplexGeometry,
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
    simplex,
    verify_certificate,
)
from .majority import (
    BeatpathStrengths,
    MajorityMatrix,
    beatpath_strengths,
    condorcet_winner,
    copeland_scores,
    dominates,
    immunity_set,
    majority_matrix,
    pareto_dominates,
    smith_set,
    weakly_dominates,
)
from .model import (
    ApprovalProfile,
    ElectionInstance,
    EuclideanMetric,
    MatrixMetric,
    RankingProfile,
    TieBreakOrder,
    approval_count,
    approvals_at_radius,
    approver_set,
    breakpoint_radii,
    consistent_rankings,
    efficiency_fraction,
    euclidean_instance,
    induced_ranking,
    is_globally_consistent,
    is_locally_consistent,
    min_common_radius,
    truthful_approvals,
    validate_instance,
)
from .rules import (
    RANKING_RULES,
    RuleOutcome,
    ScoringVector,
    av_winner,
    borda_winner,
    copeland_winner,
    k_approval_rule,
    k_approval_winner,
    plurality_winner,
    ranked_pairs_winner,
    schulze_winner,
    scoring_winner,
    stv_winner,
    veto_winner,
)
from .search import (
    SearchConfig,
    SearchResult,
    adversarial_search,
    oracle_beatpaths,
    oracle_smith,
    voter_ball_choices,
    worst_local_profile_av,
)

__version__ = "0.1.0"

"""Schur expansions of s_mu * (p_r o h_m) through labelled abaci.

The combinatorial route (partitions, abacus, process, expansion) and the
algebraic oracle (polynomials) are kept separate so every answer can be
checked along two independent paths.
"""

from .abacus import (
    Collision,
    LabelledAbacus,
    Monomial,
    all_abaci,
    canonical_abacus,
)
from .expansion import (
    ProcessIdentityReport,
    SchurExpansion,
    VerificationReport,
    pmn_expand,
    pmn_expand_iterated,
    verify_against_oracle,
    verify_process_identity,
)
from .partitions import (
    BorderStripChain,
    Partition,
    SkewPartition,
    bead_positions,
    border_strip_with_top,
    enumerate_supersets,
    is_border_strip,
    partition_from_positions,
    partitions_of,
    r_decompose,
    sgn_r,
    strip_sign,
)
from .polynomials import (
    DEFAULT_PRIME,
    EvalPoint,
    SparsePolynomial,
    a_beta,
    a_beta_eval,
    compositions,
    h_eval,
    h_poly,
    p_poly,
    plethysm_pr,
    seeded_points,
    shifted_beta,
    staircase,
)
from .process import (
    Composition,
    ProcessStep,
    ProcessTrace,
    Successful,
    Unsuccessful,
    enumerate_pairs,
    epsilon,
    k_set,
    pair_budget,
    psi,
    run_process,
    weight_with_budget,
)

__version__ = "0.1.0"

__all__ = [
    "BorderStripChain",
    "Collision",
    "Composition",
    "DEFAULT_PRIME",
    "EvalPoint",
    "LabelledAbacus",
    "Monomial",
    "Partition",
    "ProcessIdentityReport",
    "ProcessStep",
    "ProcessTrace",
    "SchurExpansion",
    "SkewPartition",
    "SparsePolynomial",
    "Successful",
    "Unsuccessful",
    "VerificationReport",
    "a_beta",
    "a_beta_eval",
    "all_abaci",
    "bead_positions",
    "border_strip_with_top",
    "canonical_abacus",
    "compositions",
    "enumerate_pairs",
    "enumerate_supersets",
    "epsilon",
    "h_eval",
    "h_poly",
    "is_border_strip",
    "k_set",
    "p_poly",
    "pair_budget",
    "partition_from_positions",
    "partitions_of",
    "plethysm_pr",
    "pmn_expand",
    "pmn_expand_iterated",
    "psi",
    "r_decompose",
    "run_process",
    "seeded_points",
    "sgn_r",
    "shifted_beta",
    "staircase",
    "strip_sign",
    "verify_against_oracle",
    "verify_process_identity",
    "weight_with_budget",
]

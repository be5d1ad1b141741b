"""
Graded second homology, central 0-extensions and their splittings,
homomorphism extension out of uTKK, and the equivalence pipelines.
"""

from .chains import (
    ChainSpace,
    H2Result,
    boundary_matrix,
    chain_space,
    delta_squared_is_zero,
    h2_cohomology_graded,
    h2_graded,
    h2_ungraded,
)
from .extensions import (
    CentralExtension,
    Cocycle2,
    Obstruction,
    UniversalityReport,
    canonical_section,
    central_extension,
    central_quotient,
    check_cocycle,
    cocycle_from_witness,
    extension_dims,
    is_centrally_zero_closed,
    split_central_zero_extension,
    splittings_agree,
    trivial_extension,
    twisted_extension,
    verify_universal,
)
from .extend import JA_INVOLUTION_READINGS, extend_ja_hom, extend_jts_hom, extend_pair_hom, lift_ja_hom
from .theorems import (
    Failure,
    Iso,
    PipelineResult,
    homology_substrate,
    involutive_roundtrip_iso,
    lemma_aspan,
    non_split_witness,
    remark_split,
    roundtrip_iso,
    theorem_a,
    theorem_a_lie,
    theorem_a_pair,
    theorem_b,
    theorem_b_lie,
    theorem_c,
    theorem_c_lie,
)

__all__ = [
    "ChainSpace",
    "H2Result",
    "boundary_matrix",
    "chain_space",
    "delta_squared_is_zero",
    "h2_cohomology_graded",
    "h2_graded",
    "h2_ungraded",
    "CentralExtension",
    "Cocycle2",
    "Obstruction",
    "UniversalityReport",
    "canonical_section",
    "central_extension",
    "central_quotient",
    "check_cocycle",
    "cocycle_from_witness",
    "extension_dims",
    "is_centrally_zero_closed",
    "split_central_zero_extension",
    "splittings_agree",
    "trivial_extension",
    "twisted_extension",
    "verify_universal",
    "JA_INVOLUTION_READINGS",
    "extend_ja_hom",
    "extend_jts_hom",
    "extend_pair_hom",
    "lift_ja_hom",
    "Failure",
    "Iso",
    "PipelineResult",
    "homology_substrate",
    "involutive_roundtrip_iso",
    "lemma_aspan",
    "non_split_witness",
    "remark_split",
    "roundtrip_iso",
    "theorem_a",
    "theorem_a_lie",
    "theorem_a_pair",
    "theorem_b",
    "theorem_b_lie",
    "theorem_c",
    "theorem_c_lie",
]

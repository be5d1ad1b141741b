"""
Graded Lie algebras, their homomorphisms and decorations, and the
forgetful functors to Jordan structures.
"""

from .algebra import GradedLieAlgebra, center, check_graded_lie, from_brackets, is_zero_perfect, zero_perfect_span
from .homs import AntiGradedInvolution, GradedHom, check_graded_hom, check_involution, make_involution
from .sl2 import Sl2Triple, check_sl2, eigenspace, grading_from_sl2, induced_grading_matches
from .forgetful import forget_to_ja, forget_to_jts, forget_to_pair, pair_involution_from, restriction
from .examples import (
    abelian,
    central_sum,
    lie_algebra_from_matrices,
    sl2,
    sl3_root,
    sl4_block,
    special_linear,
    vector_of,
)

__all__ = [
    "GradedLieAlgebra",
    "center",
    "check_graded_lie",
    "from_brackets",
    "is_zero_perfect",
    "zero_perfect_span",
    "AntiGradedInvolution",
    "GradedHom",
    "check_graded_hom",
    "check_involution",
    "make_involution",
    "Sl2Triple",
    "check_sl2",
    "eigenspace",
    "grading_from_sl2",
    "induced_grading_matches",
    "forget_to_ja",
    "forget_to_jts",
    "forget_to_pair",
    "pair_involution_from",
    "restriction",
    "abelian",
    "central_sum",
    "lie_algebra_from_matrices",
    "sl2",
    "sl3_root",
    "sl4_block",
    "special_linear",
    "vector_of",
]

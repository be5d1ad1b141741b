"""
Jordan pairs, triple systems and unital algebras.
"""

from .structures import MINUS, PLUS, SIGNS, JordanAlgebra, JordanPair, JordanTriple
from .axioms import check_axioms, v_operator
from .homs import PairHom, PairInvolution, check_hom, check_involution, isomorphic_via, make_involution
from .functors import (
    algebra_to_pair,
    algebra_to_triple,
    double_jts,
    is_invertible,
    opposite,
)

__all__ = [
    "MINUS",
    "PLUS",
    "SIGNS",
    "JordanAlgebra",
    "JordanPair",
    "JordanTriple",
    "check_axioms",
    "v_operator",
    "PairHom",
    "PairInvolution",
    "check_hom",
    "check_involution",
    "isomorphic_via",
    "make_involution",
    "algebra_to_pair",
    "algebra_to_triple",
    "double_jts",
    "is_invertible",
    "opposite",
]

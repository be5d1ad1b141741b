"""
TKK constructions: the inner structure algebra, the classical TKK algebra
and its universal central 0-extension uTKK.
"""

from .inner import (
    InnerStructureAlgebra,
    act_on_tensor,
    check_nu_closure,
    check_right_multiplication_part,
    ins_decomposition_jts,
    inner_structure_algebra,
    nu,
)
from .tkk import TkkAlgebra, check_tkk, tkk, tkk_involution
from .universal import (
    SL2_FORMS,
    UtkkAlgebra,
    check_central_zero_extension,
    check_omega_stable,
    check_relation_oracle,
    check_utkk,
    lambda_operator,
    relation_samples,
    relation_submodule,
    utkk,
    utkk_involution,
    utkk_sl2,
)
from .shortcut import (
    SYMMETRIC_READINGS,
    SymmSkewSplit,
    cubic_relations,
    symm_skew_split,
    utkk_algebra_shortcut,
)

__all__ = [
    "InnerStructureAlgebra",
    "act_on_tensor",
    "check_nu_closure",
    "check_right_multiplication_part",
    "ins_decomposition_jts",
    "inner_structure_algebra",
    "nu",
    "TkkAlgebra",
    "check_tkk",
    "tkk",
    "tkk_involution",
    "SL2_FORMS",
    "UtkkAlgebra",
    "check_central_zero_extension",
    "check_omega_stable",
    "check_relation_oracle",
    "check_utkk",
    "lambda_operator",
    "relation_samples",
    "relation_submodule",
    "utkk",
    "utkk_involution",
    "utkk_sl2",
    "SYMMETRIC_READINGS",
    "SymmSkewSplit",
    "cubic_relations",
    "symm_skew_split",
    "utkk_algebra_shortcut",
]

"""
Exact linear algebra over Q and GF(p).
"""

from .fields import Field, QQ_FIELD, Scalar
from .matrices import (
    Matrix,
    Vector,
    as_vector,
    hstack,
    inverse,
    is_zero_vector,
    kernel_basis,
    linear_combination,
    rank,
    rref,
    solve,
    support,
    unit_vector,
    vadd,
    vneg,
    vscale,
    vstack,
    vsub,
    zero_vector,
)
from .subspaces import QuotientSpace, Subspace, independent_subset, quotient, subspace_equal

__all__ = [
    "Field",
    "QQ_FIELD",
    "Scalar",
    "Matrix",
    "Vector",
    "as_vector",
    "hstack",
    "vstack",
    "inverse",
    "is_zero_vector",
    "kernel_basis",
    "linear_combination",
    "rank",
    "rref",
    "solve",
    "support",
    "unit_vector",
    "vadd",
    "vneg",
    "vscale",
    "vsub",
    "zero_vector",
    "QuotientSpace",
    "Subspace",
    "independent_subset",
    "quotient",
    "subspace_equal",
]

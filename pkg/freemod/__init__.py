"""
Finite free modules, multilinear maps and exterior powers.
"""

from .modules import (
    FreeModule,
    GradedModule,
    LinearMap,
    same_field,
    swap_tensor,
    tensor,
    tensor_index,
    tensor_vectors,
)
from .multilinear import BilinearMap, MultilinearMap, TrilinearMap, apply_trilinear, sparse_vector, table_from_entries
from .wedge import WedgeSpace, wedge, wedge_degree_slice, wedge_insert, wedge_product_vector

__all__ = [
    "FreeModule",
    "GradedModule",
    "LinearMap",
    "same_field",
    "swap_tensor",
    "tensor",
    "tensor_index",
    "tensor_vectors",
    "BilinearMap",
    "MultilinearMap",
    "TrilinearMap",
    "apply_trilinear",
    "sparse_vector",
    "table_from_entries",
    "WedgeSpace",
    "wedge",
    "wedge_degree_slice",
    "wedge_insert",
    "wedge_product_vector",
]

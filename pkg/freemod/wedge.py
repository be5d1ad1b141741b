"""
Exterior powers of a graded free module.

The basis of the n-th power is the list of strictly increasing n-tuples
of basis indices, in lexicographic order. A tuple's degree is the sum of
the degrees of its entries.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError
from exactla import Field, Vector
from freemod.modules import GradedModule

WedgeTuple = Tuple[int, ...]


@dataclass(frozen=True)
class WedgeSpace:
    graded: GradedModule
    n: int
    basis: Tuple[WedgeTuple, ...]
    degrees: Tuple[int, ...]
    _index: Dict[WedgeTuple, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> Field:
        return self.graded.module.field

    def index(self, t: WedgeTuple) -> int:
        return self._index[tuple(t)]

    def labels(self) -> List[str]:
        names = self.graded.module.labels
        return ["∧".join(names[i] for i in t) for t in self.basis]


def wedge(graded: GradedModule, n: int) -> WedgeSpace:
    if n < 1:
        raise ValueError(f"exterior power needs n >= 1, got {n}")
    basis = tuple(combinations(range(graded.dim), n))
    degrees = tuple(sum(graded.degrees[i] for i in t) for t in basis)
    return WedgeSpace(graded, n, basis, degrees, {t: k for k, t in enumerate(basis)})


def wedge_degree_slice(w: WedgeSpace, d: int) -> List[int]:
    """Indices of the basis tuples of total degree d."""
    return [k for k, deg in enumerate(w.degrees) if deg == d]


def wedge_insert(x: int, t: WedgeTuple) -> Tuple[int, Optional[WedgeTuple]]:
    """
    Rewrite e_x ∧ e_t as sign * e_t' with t' sorted.

    Returns (0, None) when x already occurs in t.
    """
    if x in t:
        return 0, None
    smaller = sum(1 for i in t if i < x)
    merged = tuple(sorted(t + (x,)))
    return (-1 if smaller % 2 else 1), merged


def wedge_product_vector(w: WedgeSpace, vectors: Sequence[Vector]) -> Vector:
    """Coordinates of x_1 ∧ ... ∧ x_n: the n x n minors of the argument matrix."""
    if len(vectors) != w.n:
        raise DimensionMismatchError(f"{len(vectors)} factors for the {w.n}-th exterior power")
    for v in vectors:
        w.graded.module.check_vector(v)
    domain = w.field.domain
    coords = []
    for t in w.basis:
        minor = DomainMatrix([[v[i] for i in t] for v in vectors], (w.n, w.n), domain)
        coords.append(minor.det())
    return tuple(coords)

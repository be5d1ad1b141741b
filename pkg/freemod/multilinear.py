"""
Bilinear and trilinear maps given by sparse structure constants.

The table maps an index tuple (i, j[, k]) to the sparse image
{l: c}, meaning that the product of the basis vectors is sum_l c * e_l.
"""
import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple

from errors import DimensionMismatchError
from exactla import Scalar, Vector
from freemod.modules import FreeModule, same_field

Table = Dict[Tuple[int, ...], Dict[int, Scalar]]


def _clean(table: Mapping[Tuple[int, ...], Mapping[int, Scalar]]) -> Table:
    out: Table = {}
    for key, image in table.items():
        nonzero = {l: c for l, c in image.items() if c}
        if nonzero:
            out[tuple(key)] = nonzero
    return out


def sparse_vector(v: Vector) -> Dict[int, Scalar]:
    return {i: c for i, c in enumerate(v) if c}


@dataclass(frozen=True, eq=False)
class MultilinearMap:
    domains: Tuple[FreeModule, ...]
    codomain: FreeModule
    table: Table

    arity = 0

    def __post_init__(self):
        if len(self.domains) != self.arity:
            raise DimensionMismatchError(f"{type(self).__name__} needs {self.arity} domain modules")
        same_field(*self.domains, self.codomain)
        object.__setattr__(self, "table", _clean(self.table))
        for key, image in self.table.items():
            if len(key) != self.arity:
                raise DimensionMismatchError(f"index tuple {key} has wrong arity")
            for idx, module in zip(key, self.domains):
                if not 0 <= idx < module.dim:
                    raise DimensionMismatchError(f"index {idx} out of range in {key}")
            for l in image:
                if not 0 <= l < self.codomain.dim:
                    raise DimensionMismatchError(f"output index {l} out of range for {key}")

    @classmethod
    def from_function(cls, domains: Tuple[FreeModule, ...], codomain: FreeModule, f: Callable[..., Vector]):
        """Tabulate a multilinear function on all basis tuples."""
        table = {}
        for key in itertools.product(*(range(m.dim) for m in domains)):
            args = [m.basis_vector(i) for m, i in zip(domains, key)]
            table[key] = sparse_vector(f(*args))
        return cls(tuple(domains), codomain, table)

    @classmethod
    def zero(cls, domains: Tuple[FreeModule, ...], codomain: FreeModule):
        return cls(tuple(domains), codomain, {})

    @property
    def field(self):
        return self.codomain.field

    def basis_value(self, *key: int) -> Vector:
        image = self.table.get(tuple(key), {})
        return tuple(image.get(l, self.field.zero) for l in range(self.codomain.dim))

    def apply(self, *vectors: Vector) -> Vector:
        if len(vectors) != self.arity:
            raise DimensionMismatchError(f"expected {self.arity} arguments")
        for v, m in zip(vectors, self.domains):
            m.check_vector(v)
        out = [self.field.zero] * self.codomain.dim
        for key, image in self.table.items():
            coef = self.field.one
            for v, idx in zip(vectors, key):
                coef *= v[idx]
                if not coef:
                    break
            if not coef:
                continue
            for l, c in image.items():
                out[l] += coef * c
        return tuple(out)

    __call__ = apply

    def entries(self) -> Iterator[Tuple[Tuple[int, ...], int, Scalar]]:
        """Sparse entries (key, output index, coefficient) in sorted order."""
        for key in sorted(self.table):
            for l in sorted(self.table[key]):
                yield key, l, self.table[key][l]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        return (
            self.arity == other.arity
            and tuple(m.dim for m in self.domains) == tuple(m.dim for m in other.domains)
            and self.codomain.dim == other.codomain.dim
            and self.table == other.table
        )


class BilinearMap(MultilinearMap):
    """c[i, j, l]: e_i * e_j = sum_l c e_l."""

    arity = 2


class TrilinearMap(MultilinearMap):
    """c[i, j, k, l]: {e_i, e_j, e_k} = sum_l c e_l."""

    arity = 3


def apply_trilinear(t: TrilinearMap, x: Vector, y: Vector, z: Vector) -> Vector:
    return t.apply(x, y, z)


def table_from_entries(entries: Iterable[Tuple[Tuple[int, ...], int, Scalar]]) -> Table:
    table: Table = {}
    for key, l, c in entries:
        image = table.setdefault(tuple(key), {})
        image[l] = image[l] + c if l in image else c
    return table

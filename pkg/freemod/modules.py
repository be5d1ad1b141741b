"""
Finite free modules with labelled bases, linear maps between them and
tensor products.
"""
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

from errors import DimensionMismatchError, FieldMismatchError
from exactla import Field, Matrix, Vector, rank, unit_vector, zero_vector


@dataclass(frozen=True)
class FreeModule:
    """A free module F^n with an ordered list of unique basis labels."""

    field: Field
    labels: Tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"basis labels are not unique: {self.labels}")

    @classmethod
    def with_prefix(cls, field: Field, prefix: str, dim: int) -> "FreeModule":
        return cls(field, tuple(f"{prefix}{i + 1}" for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.field, self.dim, i)

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def vector(self, values: Sequence) -> Vector:
        if len(values) != self.dim:
            raise DimensionMismatchError(f"{len(values)} coordinates for module of dim {self.dim}")
        return tuple(self.field(v) for v in values)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def check_vector(self, v: Vector) -> None:
        if len(v) != self.dim:
            raise DimensionMismatchError(f"vector of length {len(v)} for module of dim {self.dim}")

    def direct_sum(self, other: "FreeModule") -> "FreeModule":
        same_field(self, other)
        return FreeModule(self.field, self.labels + other.labels)

    def graded(self, degrees: Sequence[int]) -> "GradedModule":
        return GradedModule(self, tuple(degrees))


@dataclass(frozen=True)
class GradedModule:
    """A free module with an integer degree attached to every basis vector."""

    module: FreeModule
    degrees: Tuple[int, ...]

    def __post_init__(self):
        if len(self.degrees) != self.module.dim:
            raise DimensionMismatchError("one degree per basis vector is required")

    @property
    def dim(self) -> int:
        return self.module.dim

    def indices_of_degree(self, d: int):
        return [i for i, deg in enumerate(self.degrees) if deg == d]


def same_field(*modules: FreeModule) -> Field:
    fields = {m.field for m in modules}
    if len(fields) > 1:
        raise FieldMismatchError(f"modules over different fields: {sorted(str(f) for f in fields)}")
    return modules[0].field


def tensor(m1: FreeModule, m2: FreeModule) -> FreeModule:
    """Tensor product; the pair (i, j) sits at position i * dim(m2) + j."""
    field = same_field(m1, m2)
    return FreeModule(field, tuple(f"{a}⊗{b}" for a in m1.labels for b in m2.labels))


def tensor_index(i: int, j: int, d2: int) -> int:
    return i * d2 + j


def tensor_vectors(x: Vector, y: Vector) -> Vector:
    """Coordinates of x (x) y: x_i * y_j at position i * len(y) + j."""
    return tuple(a * b for a in x for b in y)


def swap_tensor(v: Vector, d1: int, d2: int) -> Vector:
    """The flip a (x) b -> b (x) a, from M1 (x) M2 to M2 (x) M1."""
    if len(v) != d1 * d2:
        raise DimensionMismatchError(f"tensor vector of length {len(v)} for dims {d1}x{d2}")
    return tuple(v[tensor_index(i, j, d2)] for j in range(d2) for i in range(d1))


@dataclass(frozen=True)
class LinearMap:
    domain: FreeModule
    codomain: FreeModule
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise DimensionMismatchError(
                f"matrix {self.matrix.shape} for map {self.domain.dim} -> {self.codomain.dim}"
            )

    @classmethod
    def identity(cls, module: FreeModule) -> "LinearMap":
        return cls(module, module, Matrix.identity(module.field, module.dim))

    @classmethod
    def zero(cls, domain: FreeModule, codomain: FreeModule) -> "LinearMap":
        return cls(domain, codomain, Matrix.zeros(domain.field, codomain.dim, domain.dim))

    @classmethod
    def from_images(cls, domain: FreeModule, codomain: FreeModule, images: Sequence[Vector]) -> "LinearMap":
        return cls(domain, codomain, Matrix.from_columns(domain.field, images, codomain.dim))

    @classmethod
    def from_function(cls, domain: FreeModule, codomain: FreeModule, f: Callable[[Vector], Vector]) -> "LinearMap":
        return cls.from_images(domain, codomain, [f(e) for e in domain.basis()])

    def __call__(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        return LinearMap(inner.domain, self.codomain, self.matrix @ inner.matrix)

    def image_of_basis(self, i: int) -> Vector:
        return self.matrix.column(i)

    def rank(self) -> int:
        return rank(self.matrix)

    def is_bijective(self) -> bool:
        return self.domain.dim == self.codomain.dim and self.rank() == self.domain.dim

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

"""
Subspaces and quotient spaces of a coordinate space F^n.

Both are held in canonical form: an RREF basis with its pivot columns.
Quotient coordinates are the non-pivot coordinates of a vector reduced
against that basis.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from errors import DimensionMismatchError, NoSolution
from exactla.fields import Field, Scalar
from exactla.matrices import Matrix, Vector, kernel_basis, linear_combination, rref


@dataclass(frozen=True)
class Subspace:
    """Span of vectors in F^ambient_dim, stored as an RREF basis."""

    field: Field
    ambient_dim: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Sequence[Vector]) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in ambient space of dim {ambient_dim}")
        if not vectors:
            return cls(field, ambient_dim, (), ())
        reduced, pivots, rank = rref(Matrix.from_rows(field, vectors, ambient_dim))
        basis = tuple(reduced.row(r) for r in range(rank))
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def whole(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.span(field, ambient_dim, [
            tuple(field.one if i == j else field.zero for j in range(ambient_dim))
            for i in range(ambient_dim)
        ])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Vector) -> Vector:
        """v minus its component along the basis; zero at every pivot column."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in ambient space of dim {self.ambient_dim}")
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                for j, a in enumerate(row):
                    if a:
                        out[j] -= c * a
        return tuple(out)

    def contains(self, v: Vector) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Vector) -> Vector:
        """
        Coefficients of v in the RREF basis.

        Raises:
            NoSolution: if v is not in the subspace
        """
        if not self.contains(v):
            raise NoSolution(v, "vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coefficients: Sequence[Scalar]) -> Vector:
        return linear_combination(self.field, self.ambient_dim, zip(coefficients, self.basis))

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient_dim)
        residues = [other.reduce(v) for v in self.basis]
        relation = Matrix.from_columns(self.field, residues, self.ambient_dim)
        vectors = [self.combine(c) for c in kernel_basis(relation)]
        return Subspace.span(self.field, self.ambient_dim, vectors)

    def map(self, m: Matrix) -> "Subspace":
        """Image of this subspace under m."""
        return Subspace.span(self.field, m.nrows, [m.apply(v) for v in self.basis])


@dataclass(frozen=True)
class QuotientSpace:
    """F^ambient_dim modulo a subspace; coset coordinates sit on the non-pivot columns."""

    subspace: Subspace

    @property
    def field(self) -> Field:
        return self.subspace.field

    @property
    def ambient_dim(self) -> int:
        return self.subspace.ambient_dim

    @property
    def subspace_basis(self) -> Tuple[Vector, ...]:
        return self.subspace.basis

    @property
    def pivot_cols(self) -> Tuple[int, ...]:
        return self.subspace.pivots

    @property
    def free_cols(self) -> Tuple[int, ...]:
        pivots = set(self.subspace.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in pivots)

    @property
    def quotient_dim(self) -> int:
        return self.ambient_dim - self.subspace.dim

    def project(self, v: Vector) -> Vector:
        reduced = self.subspace.reduce(v)
        return tuple(reduced[j] for j in self.free_cols)

    def lift(self, coords: Sequence[Scalar]) -> Vector:
        """Canonical representative: coordinates on free columns, zero on pivots."""
        if len(coords) != self.quotient_dim:
            raise DimensionMismatchError(f"{len(coords)} coset coordinates for quotient of dim {self.quotient_dim}")
        out = [self.field.zero] * self.ambient_dim
        for j, c in zip(self.free_cols, coords):
            out[j] = c
        return tuple(out)

    def projection_matrix(self) -> Matrix:
        columns = [self.project(tuple(self.field.one if i == j else self.field.zero for i in range(self.ambient_dim)))
                   for j in range(self.ambient_dim)]
        return Matrix.from_columns(self.field, columns, self.quotient_dim)


def quotient(field: Field, ambient_dim: int, generators: Sequence[Vector]) -> QuotientSpace:
    return QuotientSpace(Subspace.span(field, ambient_dim, generators))


def subspace_equal(field: Field, gens_a: Sequence[Vector], gens_b: Sequence[Vector], ambient_dim: int) -> bool:
    """True iff the two spans coincide (equal RREF bases)."""
    a = Subspace.span(field, ambient_dim, gens_a)
    b = Subspace.span(field, ambient_dim, gens_b)
    return a.basis == b.basis


def independent_subset(
    field: Field,
    vectors: Sequence[Vector],
    ambient_dim: int,
    modulo: Optional[Subspace] = None,
) -> List[int]:
    """
    Indices of a maximal subfamily of `vectors` independent modulo `modulo`,
    chosen greedily from the left.
    """
    head = list(modulo.basis) if modulo is not None else []
    columns = head + [tuple(v) for v in vectors]
    if not columns or ambient_dim == 0:
        return []
    _, pivots, _ = rref(Matrix.from_columns(field, columns, ambient_dim))
    return [p - len(head) for p in pivots if p >= len(head)]

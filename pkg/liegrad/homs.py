"""
Graded Lie homomorphisms and anti-graded involutions.
"""
from dataclasses import dataclass
from typing import List, Optional

from certificates import Certificate, CheckResult, Violation, record, require_certified
from errors import DimensionMismatchError
from exactla import Matrix, Vector, kernel_basis, rank
from liegrad.algebra import GradedLieAlgebra


@dataclass(frozen=True, eq=False)
class GradedHom:
    source: GradedLieAlgebra
    target: GradedLieAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatchError(
                f"matrix {self.matrix.shape} for map of dims {self.source.dim} -> {self.target.dim}"
            )

    @classmethod
    def identity(cls, l: GradedLieAlgebra) -> "GradedHom":
        return cls(l, l, Matrix.identity(l.field, l.dim))

    @classmethod
    def zero(cls, source: GradedLieAlgebra, target: GradedLieAlgebra) -> "GradedHom":
        return cls(source, target, Matrix.zeros(source.field, target.dim, source.dim))

    def __call__(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def compose(self, inner: "GradedHom") -> "GradedHom":
        """self after inner."""
        return GradedHom(inner.source, self.target, self.matrix @ inner.matrix)

    def kernel(self) -> List[Vector]:
        return kernel_basis(self.matrix)

    def rank(self) -> int:
        return rank(self.matrix)

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_bijective(self) -> bool:
        return self.source.dim == self.target.dim and self.rank() == self.source.dim

    def degree_block(self, d: int) -> Matrix:
        """The component alpha_d: L_d -> K_d."""
        rows = self.target.degree_indices(d)
        cols = self.source.degree_indices(d)
        sparse = self.matrix.sparse_rows()
        entries = {}
        for r_new, r in enumerate(rows):
            row = sparse.get(r, {})
            for c_new, c in enumerate(cols):
                if row.get(c):
                    entries[(r_new, c_new)] = row[c]
        return Matrix.from_entries(self.source.field, (len(rows), len(cols)), entries)


def _bracket_violation(name: str, source: GradedLieAlgebra, target: GradedLieAlgebra, m: Matrix) -> Optional[Violation]:
    images = m.columns()
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            lhs = m.apply(source.to_vector(source.bracket_basis(i, j)))
            rhs = target.bracket(images[i], images[j])
            if lhs != rhs:
                return Violation(name, "map does not preserve the bracket", (source.labels[i], source.labels[j]))
    return None


def check_graded_hom(alpha: GradedHom, source: Optional[GradedLieAlgebra] = None, target: Optional[GradedLieAlgebra] = None) -> CheckResult:
    """Degree preservation and bracket preservation on basis vectors."""
    source = source or alpha.source
    target = target or alpha.target
    name = "graded_hom"
    for i, image in enumerate(alpha.matrix.columns()):
        wanted = source.degrees[i]
        if any(c and target.degrees[r] != wanted for r, c in enumerate(image)):
            return record(Violation(name, f"image of a degree-{wanted} vector leaves degree {wanted}", (source.labels[i],)))
    violation = _bracket_violation(name, source, target, alpha.matrix)
    if violation is not None:
        return record(violation)
    return record(Certificate(name))


@dataclass(frozen=True, eq=False)
class AntiGradedInvolution:
    algebra: GradedLieAlgebra
    matrix: Matrix

    def __call__(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def as_hom(self) -> GradedHom:
        return GradedHom(self.algebra, self.algebra, self.matrix)


def check_involution(l: GradedLieAlgebra, eps) -> CheckResult:
    """eps^2 = id, eps is a Lie homomorphism and eps(L_i) lies in L_-i."""
    m = eps.matrix if isinstance(eps, AntiGradedInvolution) else eps
    name = "anti_graded_involution"
    if m.shape != (l.dim, l.dim):
        return record(Violation(name, f"matrix of shape {m.shape} on algebra of dim {l.dim}"))
    for i, image in enumerate(m.columns()):
        wanted = -l.degrees[i]
        if any(c and l.degrees[r] != wanted for r, c in enumerate(image)):
            return record(Violation(name, "involution does not reverse degrees", (l.labels[i],)))
    if m @ m != Matrix.identity(l.field, l.dim):
        return record(Violation(name, "involution does not square to the identity"))
    violation = _bracket_violation(name, l, l, m)
    if violation is not None:
        return record(violation)
    return record(Certificate(name))


def make_involution(l: GradedLieAlgebra, m: Matrix) -> AntiGradedInvolution:
    require_certified(check_involution(l, m))
    return AntiGradedInvolution(l, m)

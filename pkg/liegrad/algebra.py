"""
Z-graded Lie algebras given by structure constants.

The total module carries one degree per basis vector. Decorations (an
anti-graded involution, an sl2-triple) are optional attributes that the
catalog and the constructions attach.
"""
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from certificates import Certificate, CheckResult, Violation, record
from errors import DimensionMismatchError, PreconditionError
from exactla import Field, Matrix, Scalar, Subspace, Vector, kernel_basis, vstack
from freemod import BilinearMap, FreeModule, GradedModule
from memo import Memo
from observability.metrics import track_latency

Sparse = Dict[int, Scalar]


@dataclass(frozen=True, eq=False)
class GradedLieAlgebra:
    module: FreeModule
    degrees: Tuple[int, ...]
    bracket_map: BilinearMap
    name: str = ""
    involution: Optional[Matrix] = None
    sl2_triple: Optional[Tuple[Vector, Vector, Vector]] = None
    _cache: Memo = field(default_factory=Memo, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.degrees) != self.module.dim:
            raise DimensionMismatchError("one degree per basis vector is required")
        if tuple(m.dim for m in self.bracket_map.domains) != (self.dim, self.dim) or self.bracket_map.codomain.dim != self.dim:
            raise DimensionMismatchError("bracket must map L x L -> L")

    # -- shape ---------------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.module.field

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.module.labels

    @property
    def graded_module(self) -> GradedModule:
        return GradedModule(self.module, self.degrees)

    def degree_indices(self, d: int) -> List[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    def degree_set(self) -> List[int]:
        return sorted(set(self.degrees))

    @property
    def component_dims(self) -> Dict[int, int]:
        return {d: len(self.degree_indices(d)) for d in self.degree_set()}

    def is_three_graded(self) -> bool:
        return all(abs(d) <= 1 for d in self.degrees)

    def component_module(self, d: int) -> FreeModule:
        return FreeModule(self.field, tuple(self.labels[i] for i in self.degree_indices(d)))

    def embed(self, d: int, coords: Sequence[Scalar]) -> Vector:
        """Component coordinates of degree d -> total coordinates."""
        idx = self.degree_indices(d)
        if len(coords) != len(idx):
            raise DimensionMismatchError(f"{len(coords)} coordinates for L_{d} of dim {len(idx)}")
        out = [self.field.zero] * self.dim
        for i, c in zip(idx, coords):
            out[i] = c
        return tuple(out)

    def restrict(self, d: int, v: Vector) -> Vector:
        """Degree-d coordinates of v; v must lie in L_d."""
        idx = set(self.degree_indices(d))
        if any(c for i, c in enumerate(v) if c and i not in idx):
            raise DimensionMismatchError(f"vector is not homogeneous of degree {d}")
        return tuple(v[i] for i in sorted(idx))

    def homogeneous_degree(self, v: Vector) -> Optional[int]:
        degrees = {self.degrees[i] for i, c in enumerate(v) if c}
        return degrees.pop() if len(degrees) == 1 else None

    # -- bracket -------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Sparse:
        return self.bracket_map.table.get((i, j), {})

    def bracket_sparse(self, x: Sparse, y: Sparse) -> Sparse:
        out: Sparse = {}
        for i, a in x.items():
            for j, b in y.items():
                image = self.bracket_map.table.get((i, j))
                if not image:
                    continue
                ab = a * b
                for l, c in image.items():
                    out[l] = out[l] + ab * c if l in out else ab * c
        return {l: c for l, c in out.items() if c}

    def bracket(self, x: Vector, y: Vector) -> Vector:
        return self.bracket_map.apply(x, y)

    def ad(self, x: Vector) -> Matrix:
        """Matrix of y -> [x, y]."""
        return Matrix.from_columns(self.field, [self.bracket(x, e) for e in self.module.basis()], self.dim)

    def basis_vector(self, i: int) -> Vector:
        return self.module.basis_vector(i)

    def to_vector(self, s: Sparse) -> Vector:
        return tuple(s.get(i, self.field.zero) for i in range(self.dim))

    # -- decorations ---------------------------------------------------------

    def with_decorations(self, involution: Optional[Matrix] = None, sl2_triple=None, name: Optional[str] = None) -> "GradedLieAlgebra":
        return replace(
            self,
            involution=involution if involution is not None else self.involution,
            sl2_triple=sl2_triple if sl2_triple is not None else self.sl2_triple,
            name=self.name if name is None else name,
            _cache=Memo(),
        )


def from_brackets(
    field_: Field,
    labels: Sequence[str],
    degrees: Sequence[int],
    brackets: Dict[Tuple[int, int], Sparse],
    name: str = "",
    antisymmetrize: bool = True,
) -> GradedLieAlgebra:
    """
    Build an algebra from brackets of basis pairs; with `antisymmetrize`,
    the entry for (i, j) also fixes (j, i).
    """
    module = FreeModule(field_, tuple(labels))
    table: Dict[Tuple[int, int], Sparse] = {}
    for (i, j), image in brackets.items():
        image = {l: field_(c) for l, c in image.items()}
        table[(i, j)] = image
        if antisymmetrize and (j, i) not in brackets:
            table[(j, i)] = {l: -c for l, c in image.items()}
    return GradedLieAlgebra(module, tuple(degrees), BilinearMap((module, module), module, table), name=name)


def _jacobi_defect(l: GradedLieAlgebra, i: int, j: int, k: int) -> Sparse:
    out: Sparse = {}
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        inner = l.bracket_basis(x, y)
        term = l.bracket_sparse(inner, {z: l.field.one})
        for m, c in term.items():
            out[m] = out[m] + c if m in out else c
    return {m: c for m, c in out.items() if c}


@track_latency("liegrad.check_graded_lie")
def check_graded_lie(l: GradedLieAlgebra) -> CheckResult:
    """Antisymmetry, grading compatibility and Jacobi on all basis tuples."""
    cached = l._cache.get("graded_lie")
    if cached is not None:
        return cached
    name = "graded_lie_algebra"
    labels = l.labels
    result = None
    for i in range(l.dim):
        if l.bracket_basis(i, i):
            result = Violation(name, "[x, x] != 0", (labels[i],))
            break
        for j in range(i + 1, l.dim):
            xy, yx = l.bracket_basis(i, j), l.bracket_basis(j, i)
            if {m: -c for m, c in yx.items()} != xy:
                result = Violation(name, "[x, y] != -[y, x]", (labels[i], labels[j]))
                break
            target = l.degrees[i] + l.degrees[j]
            if any(l.degrees[m] != target for m in xy):
                result = Violation(name, f"bracket leaves degree {target}", (labels[i], labels[j]))
                break
        if result is not None:
            break
    if result is None:
        for i in range(l.dim):
            for j in range(i + 1, l.dim):
                for k in range(j + 1, l.dim):
                    if _jacobi_defect(l, i, j, k):
                        result = Violation(name, "Jacobi identity fails", (labels[i], labels[j], labels[k]))
                        break
                if result is not None:
                    break
            if result is not None:
                break
    if result is None:
        result = Certificate(name, {"dims": l.component_dims})
    return record(l._cache.store("graded_lie", result))


def zero_perfect_span(l: GradedLieAlgebra):
    """Degree-0 coordinates of the brackets [x, y], x in L_-1, y in L_1, over basis pairs."""
    zero_idx = l.degree_indices(0)
    position = {i: k for k, i in enumerate(zero_idx)}
    vectors = []
    for i in l.degree_indices(-1):
        for j in l.degree_indices(1):
            image = l.bracket_basis(i, j)
            coords = [l.field.zero] * len(zero_idx)
            for m, c in image.items():
                coords[position[m]] = c
            vectors.append(tuple(coords))
    return Subspace.span(l.field, len(zero_idx), vectors)


def is_zero_perfect(l: GradedLieAlgebra) -> bool:
    """L_0 = [L_-1, L_1]."""
    if not l.is_three_graded():
        raise PreconditionError("0-perfectness is defined for 3-graded algebras")
    cached = l._cache.get("zero_perfect")
    if cached is None:
        cached = zero_perfect_span(l).dim == len(l.degree_indices(0))
        cached = l._cache.store("zero_perfect", cached)
    return cached


def center(l: GradedLieAlgebra) -> List[Vector]:
    """Basis of {x : [x, L] = 0}: kernel of the stacked matrices ad(e_j)."""
    if l.dim == 0:
        return []
    blocks = [l.ad(e) for e in l.module.basis()]
    return kernel_basis(vstack(l.field, blocks))

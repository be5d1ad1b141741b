"""
sl2-triples and the A1-grading they induce.

For an sl2-triple (h, e, f) the candidate grading is L_i = ker(ad h - 2i)
for i in {-1, 0, 1}. Eigenspaces are found by rank computations on
ad h - 2i; no characteristic polynomials are involved.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from certificates import Certificate, CheckResult, Violation, record, require_certified
from errors import NotA1
from exactla import Matrix, Subspace, Vector, inverse, kernel_basis, vscale
from freemod import BilinearMap, FreeModule, sparse_vector
from liegrad.algebra import GradedLieAlgebra, is_zero_perfect
from observability.logging_config import get_logger

logger = get_logger(__name__)

# odd weights that reveal a non-A1 weight structure
ODD_WEIGHTS = (-3, -1, 1, 3)


@dataclass(frozen=True)
class Sl2Triple:
    h: Vector
    e: Vector
    f: Vector

    def as_tuple(self) -> Tuple[Vector, Vector, Vector]:
        return self.h, self.e, self.f

    @classmethod
    def from_algebra(cls, l: GradedLieAlgebra) -> "Sl2Triple":
        if l.sl2_triple is None:
            raise ValueError(f"algebra {l.name or '<unnamed>'} carries no sl2-triple")
        return cls(*l.sl2_triple)


def check_sl2(l: GradedLieAlgebra, s: Sl2Triple) -> CheckResult:
    """[e, f] = h, [h, e] = 2e, [h, f] = -2f."""
    name = "sl2_triple"
    two = l.field(2)
    if l.bracket(s.e, s.f) != tuple(s.h):
        return record(Violation(name, "[e, f] != h", ("e", "f")))
    if l.bracket(s.h, s.e) != vscale(two, s.e):
        return record(Violation(name, "[h, e] != 2e", ("h", "e")))
    if l.bracket(s.h, s.f) != vscale(-two, s.f):
        return record(Violation(name, "[h, f] != -2f", ("h", "f")))
    return record(Certificate(name))


def _shifted_ad(l: GradedLieAlgebra, h: Vector, k: int) -> Matrix:
    return l.ad(h) - Matrix.identity(l.field, l.dim).scale(k)


def eigenspace(l: GradedLieAlgebra, h: Vector, k: int) -> List[Vector]:
    """Basis of ker(ad h - k)."""
    return kernel_basis(_shifted_ad(l, h, k))


def a1_eigenbasis(l: GradedLieAlgebra, s: Sl2Triple) -> Tuple[Tuple[int, ...], Matrix]:
    """
    Degrees and change-of-basis matrix (columns = new basis in old
    coordinates) of the ad h eigenspace decomposition.

    Raises:
        NotA1: if the eigenspaces for -2, 0, 2 do not exhaust L
    """
    degrees: List[int] = []
    columns: List[Vector] = []
    for i in (-1, 0, 1):
        space = eigenspace(l, s.h, 2 * i)
        degrees.extend([i] * len(space))
        columns.extend(space)
    if len(columns) < l.dim:
        for k in ODD_WEIGHTS:
            if eigenspace(l, s.h, k):
                raise NotA1("non_integral_weight", f"ad h has eigenvalue {k}")
        raise NotA1(
            "residual_eigenspace",
            f"eigenspaces for -2, 0, 2 span {len(columns)} of {l.dim} dimensions",
        )
    return tuple(degrees), Matrix.from_columns(l.field, columns, l.dim)


def _new_label(l: GradedLieAlgebra, column: Vector, degree: int, k: int) -> str:
    support = [i for i, c in enumerate(column) if c]
    if len(support) == 1 and column[support[0]] == l.field.one:
        return l.labels[support[0]]
    return f"L{degree:+d}_{k + 1}"


def grading_from_sl2(l: GradedLieAlgebra, s: Sl2Triple) -> GradedLieAlgebra:
    """
    The algebra re-expressed in an ad h eigenbasis, graded by half the
    eigenvalue and decorated with the triple.

    Raises:
        NotA1: residual_eigenspace, non_integral_weight or not_zero_perfect
    """
    require_certified(check_sl2(l, s))
    degrees, frame = a1_eigenbasis(l, s)
    back = inverse(frame)
    columns = frame.columns()
    counters: Dict[int, int] = {}
    labels = []
    for column, d in zip(columns, degrees):
        labels.append(_new_label(l, column, d, counters.get(d, 0)))
        counters[d] = counters.get(d, 0) + 1
    if len(set(labels)) != len(labels):
        labels = [f"L{d:+d}_{k + 1}" for k, d in enumerate(degrees)]
    module = FreeModule(l.field, tuple(labels))
    table = {}
    for i in range(l.dim):
        for j in range(l.dim):
            image = back.apply(l.bracket(columns[i], columns[j]))
            if any(image):
                table[(i, j)] = sparse_vector(image)
    graded = GradedLieAlgebra(
        module,
        degrees,
        BilinearMap((module, module), module, table),
        name=f"{l.name}[A1]" if l.name else "",
        sl2_triple=tuple(back.apply(v) for v in s.as_tuple()),
    )
    graded._cache["frame"] = frame
    if not is_zero_perfect(graded):
        raise NotA1("not_zero_perfect", "L_0 != [L_-1, L_1] for the induced grading")
    logger.debug(
        "induced A1-grading",
        extra={"structure": l.name, "dimension": l.dim},
    )
    return graded


def induced_grading_matches(l: GradedLieAlgebra, s: Sl2Triple) -> bool:
    """True iff ker(ad h - 2i) is exactly the span of the degree-i basis vectors of l."""
    for i in sorted(set(l.degree_set()) | {-1, 0, 1}):
        eigen = Subspace.span(l.field, l.dim, eigenspace(l, s.h, 2 * i))
        component = Subspace.span(l.field, l.dim, [l.basis_vector(k) for k in l.degree_indices(i)])
        if eigen.basis != component.basis:
            return False
    return True

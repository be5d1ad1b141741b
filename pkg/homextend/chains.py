"""
Chevalley-Eilenberg boundaries and second (co)homology of graded Lie algebras.

    d_n(x_1 ^ ... ^ x_{n+1}) = sum_{i<j} (-1)^{i+j} [x_i, x_j] ^ x_1 ^ ... x_i^ ... x_j^ ... ^ x_{n+1}

The graded variants restrict both sides to the degree-0 slices.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from certificates import Certificate, CheckResult, Violation, record
from config import config
from errors import FeasibilityError
from exactla import Field, Matrix, Subspace, Vector, independent_subset, kernel_basis, rank
from freemod import WedgeSpace, wedge, wedge_degree_slice, wedge_insert
from liegrad import GradedLieAlgebra
from observability.logging_config import get_logger
from observability.metrics import track_latency
from observability.tracing import trace_operation

logger = get_logger(__name__)


@dataclass(frozen=True)
class ChainSpace:
    """The n-th exterior power of L, or its degree-0 slice."""

    wedge: WedgeSpace
    indices: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.indices)

    def labels(self) -> List[str]:
        names = self.wedge.labels()
        return [names[k] for k in self.indices]

    def position(self) -> Dict[int, int]:
        return {k: r for r, k in enumerate(self.indices)}


def chain_space(l: GradedLieAlgebra, n: int, graded: bool) -> ChainSpace:
    w = wedge(l.graded_module, n)
    indices = wedge_degree_slice(w, 0) if graded else list(range(w.dim))
    return ChainSpace(w, tuple(indices))


def _check_feasible(l: GradedLieAlgebra, graded: bool) -> None:
    if not graded and l.dim > config.UNGRADED_DIM_CAP:
        raise FeasibilityError(
            f"ungraded chains of a {l.dim}-dimensional algebra exceed the cap of {config.UNGRADED_DIM_CAP}"
        )


@trace_operation("boundary_matrix")
def boundary_matrix(l: GradedLieAlgebra, n: int, graded: bool = True) -> Matrix:
    """Matrix of d_n from the (n+1)-th to the n-th chain space."""
    if n < 1:
        raise ValueError(f"boundary d_n needs n >= 1, got {n}")
    _check_feasible(l, graded)
    key = ("boundary", n, graded)
    cached = l._cache.get(key)
    if cached is not None:
        return cached
    source = chain_space(l, n + 1, graded)
    target = chain_space(l, n, graded)
    row_of = target.position()
    entries: Dict[Tuple[int, int], object] = {}
    for col, k in enumerate(source.indices):
        t = source.wedge.basis[k]
        for a in range(len(t)):
            for b in range(a + 1, len(t)):
                image = l.bracket_basis(t[a], t[b])
                if not image:
                    continue
                sign = -1 if (a + b) % 2 else 1
                rest = t[:a] + t[a + 1:b] + t[b + 1:]
                for m, c in image.items():
                    s, merged = wedge_insert(m, rest)
                    if merged is None:
                        continue
                    row = row_of.get(target.wedge.index(merged))
                    if row is None:
                        continue
                    value = entries.get((row, col), l.field.zero) + c * (sign * s)
                    entries[(row, col)] = value
    matrix = Matrix.from_entries(l.field, (target.dim, source.dim), entries)
    return l._cache.store(key, matrix)


def delta_squared_is_zero(l: GradedLieAlgebra, graded: bool = True) -> CheckResult:
    name = "boundary_squares_to_zero" if graded else "ungraded_boundary_squares_to_zero"
    product = boundary_matrix(l, 1, graded) @ boundary_matrix(l, 2, graded)
    if not product.is_zero():
        return record(Violation(name, "d_1 d_2 != 0"))
    return record(Certificate(name))


@dataclass(frozen=True)
class H2Result:
    """
    Second homology: its dimension and cycles whose classes form a basis,
    as coordinate vectors on `chains`.
    """

    dimension: int
    witnesses: Tuple[Vector, ...]
    chains: ChainSpace

    def describe(self, witness: Vector, field: Field) -> str:
        labels = self.chains.labels()
        terms = [f"{field.format(c)}*{labels[r]}" for r, c in enumerate(witness) if c]
        return " + ".join(terms) if terms else "0"


def _h2(l: GradedLieAlgebra, graded: bool) -> H2Result:
    d1 = boundary_matrix(l, 1, graded)
    d2 = boundary_matrix(l, 2, graded)
    chains = chain_space(l, 2, graded)
    cycles = kernel_basis(d1)
    boundaries = Subspace.span(l.field, chains.dim, d2.columns())
    dimension = len(cycles) - boundaries.dim
    picked = independent_subset(l.field, cycles, chains.dim, modulo=boundaries)
    witnesses = tuple(cycles[k] for k in picked)
    if len(witnesses) != dimension:
        raise AssertionError("homology witnesses do not match the homology dimension")
    return H2Result(dimension, witnesses, chains)


@track_latency("homextend.h2_graded")
def h2_graded(l: GradedLieAlgebra) -> H2Result:
    """H_2^gr(L): the degree-0 slice of the second homology."""
    cached = l._cache.get("h2_graded")
    if cached is None:
        cached = _h2(l, graded=True)
        cached = l._cache.store("h2_graded", cached)
        logger.debug("graded H2", extra={"structure": l.name, "dimension": cached.dimension})
    return cached


def h2_ungraded(l: GradedLieAlgebra) -> int:
    """
    dim H_2(L) on full exterior powers.

    Raises:
        FeasibilityError: above the configured dimension cap
    """
    return _h2(l, graded=False).dimension


def _kron_identity(m: Matrix, copies: int) -> Matrix:
    """m (x) I_copies."""
    entries = {}
    for r, row in m.sparse_rows().items():
        for c, v in row.items():
            for k in range(copies):
                entries[(r * copies + k, c * copies + k)] = v
    return Matrix.from_entries(m.field, (m.nrows * copies, m.ncols * copies), entries)


def h2_cohomology_graded(l: GradedLieAlgebra, m: int) -> int:
    """
    dim H^2_gr(L, M) for the trivial module M = k^m concentrated in degree 0.

    Cochains are matrices on the degree-0 chain slices; the coboundaries are
    the transposed boundaries tensored with the identity of M.
    """
    if m < 0:
        raise ValueError("coefficient dimension must be non-negative")
    if m == 0:
        return 0
    d1 = _kron_identity(boundary_matrix(l, 1, True).transpose(), m)
    d2 = _kron_identity(boundary_matrix(l, 2, True).transpose(), m)
    cochains = d2.ncols
    cocycles = cochains - rank(d2)
    dimension = cocycles - rank(d1)
    expected = m * h2_graded(l).dimension
    if dimension != expected:
        raise AssertionError(f"H^2_gr(L, k^{m}) = {dimension} but m * dim H_2^gr = {expected}")
    return dimension

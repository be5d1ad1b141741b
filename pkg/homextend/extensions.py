"""
Central 0-extensions, their splittings, and the universality test.

A central 0-extension is a graded surjection phi: K -> L whose kernel is
central and sits in degree 0. For 0-perfect L a splitting is built from a
graded section eta: the defect sigma(x ^ y) = [eta x, eta y] - eta[x, y]
is a 2-cocycle with values in Ker(phi), and psi = eta + tau is a Lie map
whenever sigma = tau o [ , ] on the degree-0 chains.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from certificates import Certificate, CheckResult, Violation, record, require_certified
from errors import NoSolution, PreconditionError
from exactla import Matrix, QuotientSpace, Subspace, Vector, kernel_basis, solve, vsub
from freemod import sparse_vector
from homextend.chains import ChainSpace, boundary_matrix, chain_space, h2_graded
from liegrad import GradedHom, GradedLieAlgebra, center, central_sum, check_graded_hom, from_brackets, is_zero_perfect
from observability.logging_config import get_logger
from observability.tracing import trace_operation
from tkkcore import check_central_zero_extension

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class CentralExtension:
    total: GradedLieAlgebra
    base: GradedLieAlgebra
    phi: GradedHom

    @property
    def kernel_basis(self) -> List[Vector]:
        return self.phi.kernel()


def central_extension(phi: GradedHom) -> CentralExtension:
    require_certified(check_central_zero_extension(phi))
    return CentralExtension(phi.source, phi.target, phi)


@dataclass(frozen=True)
class Cocycle2:
    """A degree-0 2-cocycle of L with values in k^m, as an m x dim (^2 L)_0 matrix."""

    base: GradedLieAlgebra
    m: int
    matrix: Matrix
    chains: ChainSpace

    def value(self, i: int, j: int) -> Vector:
        """sigma(e_i ^ e_j) for i < j; zero off the degree-0 slice."""
        k = self.chains.wedge.index((i, j))
        row = self.chains.position().get(k)
        if row is None:
            return tuple([self.base.field.zero] * self.m)
        return self.matrix.column(row)


def check_cocycle(c: Cocycle2) -> CheckResult:
    """sigma vanishes on the degree-0 boundaries d_2((^3 L)_0)."""
    name = "graded_cocycle"
    if not (c.matrix @ boundary_matrix(c.base, 2, True)).is_zero():
        return record(Violation(name, "sigma does not vanish on boundaries"))
    return record(Certificate(name))


def cocycle_from_witness(l: GradedLieAlgebra, cycle: Vector) -> Cocycle2:
    """
    A k-valued cocycle taking the value 1 on `cycle` and 0 on every boundary.

    Raises:
        NoSolution: if `cycle` is itself a boundary
    """
    chains = chain_space(l, 2, True)
    boundaries = Subspace.span(l.field, chains.dim, boundary_matrix(l, 2, True).columns())
    rows = list(boundaries.basis) + [tuple(cycle)]
    rhs = tuple([l.field.zero] * boundaries.dim + [l.field.one])
    functional = solve(Matrix.from_rows(l.field, rows, chains.dim), rhs)
    cocycle = Cocycle2(l, 1, Matrix.from_rows(l.field, [functional], chains.dim), chains)
    require_certified(check_cocycle(cocycle))
    return cocycle


def twisted_extension(l: GradedLieAlgebra, cocycle: Cocycle2) -> CentralExtension:
    """K = L (+) k^m with [x, y]_K = [x, y]_L + sigma(x ^ y); phi is the projection."""
    n, m = l.dim, cocycle.m
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            image = dict(l.bracket_basis(i, j))
            for r, c in enumerate(cocycle.value(i, j)):
                if c:
                    image[n + r] = c
            if image:
                brackets[(i, j)] = image
    labels = list(l.labels) + [f"z{r + 1}" for r in range(m)]
    total = from_brackets(l.field, labels, list(l.degrees) + [0] * m, brackets, name=f"{l.name}~sigma")
    return central_extension(_projection(total, l))


def trivial_extension(l: GradedLieAlgebra) -> CentralExtension:
    """L (+) k z with z central of degree 0."""
    return central_extension(_projection(central_sum(l), l))


def _projection(total: GradedLieAlgebra, base: GradedLieAlgebra) -> GradedHom:
    entries = {(i, i): base.field.one for i in range(base.dim)}
    return GradedHom(total, base, Matrix.from_entries(base.field, (base.dim, total.dim), entries))


def central_quotient(k: GradedLieAlgebra) -> CentralExtension:
    """K -> K / Z(K)_0."""
    degree_zero = Subspace.span(k.field, k.dim, [k.basis_vector(i) for i in k.degree_indices(0)])
    q = QuotientSpace(Subspace.span(k.field, k.dim, center(k)).intersection(degree_zero))
    free = q.free_cols
    brackets = {}
    for s in range(len(free)):
        for t in range(s + 1, len(free)):
            image = sparse_vector(q.project(k.bracket(k.basis_vector(free[s]), k.basis_vector(free[t]))))
            if image:
                brackets[(s, t)] = image
    base = from_brackets(
        k.field, [k.labels[c] for c in free], [k.degrees[c] for c in free], brackets, name=f"{k.name}/Z0"
    )
    return central_extension(GradedHom(k, base, q.projection_matrix()))


def _in_degree(l: GradedLieAlgebra, v: Vector, d: int) -> bool:
    return all(l.degrees[i] == d for i, c in enumerate(v) if c)


# ============================================================================
# SPLITTING
# ============================================================================

@dataclass(frozen=True)
class Obstruction:
    """A degree-0 cycle of L on which the extension cocycle is nonzero."""

    cycle: Vector
    value: Vector
    chains: ChainSpace

    def describe(self, field) -> str:
        labels = self.chains.labels()
        return " + ".join(f"{field.format(c)}*{labels[r]}" for r, c in enumerate(self.cycle) if c)


def canonical_section(ext: CentralExtension) -> Matrix:
    """eta: per degree, the canonical solution of phi_d(eta x) = x."""
    k, l = ext.total, ext.base
    entries = {}
    for d in l.degree_set():
        block = ext.phi.degree_block(d)
        rows = k.degree_indices(d)
        for col_pos, col in enumerate(l.degree_indices(d)):
            target = tuple(l.field.one if r == col_pos else l.field.zero for r in range(block.nrows))
            try:
                x = solve(block, target)
            except NoSolution:
                raise PreconditionError(f"phi is not surjective onto degree {d}") from None
            for r, c in zip(rows, x):
                if c:
                    entries[(r, col)] = c
    return Matrix.from_entries(l.field, (k.dim, l.dim), entries)


def _check_section(ext: CentralExtension, eta: Matrix) -> None:
    if ext.phi.matrix @ eta != Matrix.identity(ext.base.field, ext.base.dim):
        raise PreconditionError("section is not a right inverse of phi")
    for col, image in enumerate(eta.columns()):
        if not _in_degree(ext.total, image, ext.base.degrees[col]):
            raise PreconditionError("section is not graded")


@trace_operation("split_central_zero_extension")
def split_central_zero_extension(
    ext: CentralExtension, section: Optional[Matrix] = None
) -> Union[GradedHom, Obstruction]:
    """
    The splitting psi: L -> K with phi o psi = id, or the obstruction cycle.

    Raises:
        PreconditionError: if the base is not 0-perfect
    """
    k, l = ext.total, ext.base
    require_certified(check_central_zero_extension(ext.phi))
    if not is_zero_perfect(l):
        raise PreconditionError("splittings are constructed for 0-perfect bases")
    eta = canonical_section(ext) if section is None else section
    _check_section(ext, eta)

    chains = chain_space(l, 2, True)
    images = eta.columns()
    sigma_columns = []
    for t_index in chains.indices:
        i, j = chains.wedge.basis[t_index]
        lifted = k.bracket(images[i], images[j])
        sigma_columns.append(vsub(lifted, eta.apply(l.to_vector(l.bracket_basis(i, j)))))
    sigma = Matrix.from_columns(k.field, sigma_columns, k.dim)
    # [ , ] on (^2 L)_0 is -d_1
    bracket_map = boundary_matrix(l, 1, True).scale(l.field(-1))

    zero_idx = l.degree_indices(0)
    tau_entries = {}
    transposed = bracket_map.transpose()
    for r in range(k.dim):
        row = sigma.row(r)
        if not any(row):
            continue
        try:
            t_row = solve(transposed, row)
        except NoSolution:
            return _obstruction(l, bracket_map, sigma, chains)
        for pos, c in enumerate(t_row):
            if c:
                tau_entries[(r, zero_idx[pos])] = c
    tau = Matrix.from_entries(k.field, (k.dim, l.dim), tau_entries)
    psi = GradedHom(l, k, eta + tau)
    require_certified(check_graded_hom(psi))
    if ext.phi.matrix @ psi.matrix != Matrix.identity(l.field, l.dim):
        raise AssertionError("phi o psi != id")
    logger.debug("split central 0-extension", extra={"structure": l.name, "dimension": k.dim})
    return psi


def _obstruction(l: GradedLieAlgebra, bracket_map: Matrix, sigma: Matrix, chains: ChainSpace) -> Obstruction:
    for z in kernel_basis(bracket_map):
        value = sigma.apply(z)
        if any(value):
            logger.info("central 0-extension does not split", extra={"structure": l.name})
            return Obstruction(z, value, chains)
    raise AssertionError("no cycle carries the obstruction")


def splittings_agree(ext: CentralExtension, psi1: GradedHom, psi2: GradedHom) -> CheckResult:
    """Two splittings coincide on [L_-1, L_1], hence everywhere on a 0-perfect base."""
    name = "splitting_unique"
    l = ext.base
    for i in l.degree_indices(-1):
        for j in l.degree_indices(1):
            x = l.to_vector(l.bracket_basis(i, j))
            if psi1(x) != psi2(x):
                return record(Violation(name, "splittings differ on [L_-1, L_1]", (l.labels[i], l.labels[j])))
    if psi1.matrix != psi2.matrix:
        return record(Violation(name, "splittings differ"))
    return record(Certificate(name))


# ============================================================================
# UNIVERSALITY
# ============================================================================

def is_centrally_zero_closed(l: GradedLieAlgebra) -> bool:
    """
    H_2^gr(L) = 0.

    Raises:
        PreconditionError: if L is not 0-perfect
    """
    if not is_zero_perfect(l):
        raise PreconditionError("central 0-closedness is tested on 0-perfect algebras")
    return h2_graded(l).dimension == 0


@dataclass(frozen=True)
class UniversalityReport:
    zero_perfect: bool
    centrally_closed: Optional[bool]
    universal: bool
    reason: str = ""

    def as_check(self) -> CheckResult:
        if self.universal:
            return record(Certificate("universal_central_extension"))
        return record(Violation("universal_central_extension", self.reason))


def verify_universal(ext: CentralExtension) -> UniversalityReport:
    """A central 0-extension is universal iff its total algebra is 0-perfect and centrally 0-closed."""
    require_certified(check_central_zero_extension(ext.phi))
    if not is_zero_perfect(ext.base):
        raise PreconditionError("universality is tested over 0-perfect bases")
    if not is_zero_perfect(ext.total):
        return UniversalityReport(False, None, False, "total not 0-perfect")
    closed = is_centrally_zero_closed(ext.total)
    if not closed:
        return UniversalityReport(True, False, False, "total not centrally 0-closed")
    return UniversalityReport(True, True, True)


def extension_dims(ext: CentralExtension) -> Tuple[int, int, int]:
    return ext.total.dim, ext.base.dim, len(ext.kernel_basis)

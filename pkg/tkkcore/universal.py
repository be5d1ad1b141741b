"""
The universal TKK algebra P- (+) <P-, P+> (+) P+.

<P-, P+> is P- (x) P+ modulo the relation submodule A spanned by

    nu(a, b)(c (x) d) + nu(c, d)(a (x) b),

stored in coset coordinates (the non-pivot tensor coordinates of the RREF
of A). The canonical map mu: <P-, P+> -> ins(P) sends <a, b> to nu(a, b),
and upsilon = id + mu + id maps uTKK(P) onto TKK(P).
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from certificates import Certificate, CheckResult, Violation, record, require_certified
from config import config
from errors import AxiomViolation, NeitherForm
from exactla import Matrix, QuotientSpace, Scalar, Subspace, Vector, linear_combination, vneg, vscale
from freemod import sparse_vector, swap_tensor, tensor_index, tensor_vectors
from jordan import JordanAlgebra, JordanPair, JordanTriple, algebra_to_pair, double_jts
from memo import Memo
from liegrad import (
    AntiGradedInvolution,
    GradedHom,
    GradedLieAlgebra,
    Sl2Triple,
    center,
    check_graded_hom,
    check_graded_lie,
    check_sl2,
    forget_to_pair,
    from_brackets,
    induced_grading_matches,
    is_zero_perfect,
    make_involution,
)
from observability.logging_config import get_logger
from observability.metrics import track_construction, track_latency
from observability.tracing import trace_operation
from tkkcore.inner import InnerStructureAlgebra, OperatorPair, act_on_tensor, inner_structure_algebra
from tkkcore.tkk import TkkAlgebra, tkk, tkk_involution

logger = get_logger(__name__)

# the two printed readings of the sl2-triple of uTKK(J)
SL2_FORMS = ("theorem", "proof")


# ============================================================================
# RELATIONS
# ============================================================================

def relation_submodule(p: JordanPair) -> List[Vector]:
    """Generators of A(P- (x) P+) over basis quadruples (i, j) <= (k, l)."""
    cached = p._cache.get("relations")
    if cached is not None:
        return list(cached)
    ins = inner_structure_algebra(p)
    dm, dp = p.dims
    keys = [(i, j) for i in range(dm) for j in range(dp)]
    generators = []
    for n, (i, j) in enumerate(keys):
        x = ins.nu_basis(i, j)
        x_tensor = tensor_vectors(p.minus.basis_vector(i), p.plus.basis_vector(j))
        for k, l in keys[n:]:
            y = ins.nu_basis(k, l)
            y_tensor = tensor_vectors(p.minus.basis_vector(k), p.plus.basis_vector(l))
            first = act_on_tensor(p, x, y_tensor)
            second = act_on_tensor(p, y, x_tensor)
            generators.append(tuple(u + v for u, v in zip(first, second)))
    return list(p._cache.store("relations", tuple(generators)))


def lambda_operator(p: JordanPair, m: Vector) -> OperatorPair:
    """lambda(sum a_i (x) b_i) = sum nu(a_i, b_i) as an operator pair."""
    ins = inner_structure_algebra(p)
    dm, dp = p.dims
    minus = Matrix.zeros(p.field, dm, dm)
    plus = Matrix.zeros(p.field, dp, dp)
    for i in range(dm):
        for j in range(dp):
            c = m[tensor_index(i, j, dp)]
            if c:
                x = ins.nu_basis(i, j)
                minus = minus + x[0].scale(c)
                plus = plus + x[1].scale(c)
    return minus, plus


def relation_samples(p: JordanPair, seed: Optional[int] = None, count: Optional[int] = None) -> List[Vector]:
    """
    Tensors m fed to the unlinearized generator lambda(m).m: every basis
    tensor, every sum of two basis tensors and `count` seeded random ones.
    """
    seed = config.DEFAULT_SEED if seed is None else seed
    count = config.RELATION_SAMPLES if count is None else count
    dim = p.minus.dim * p.plus.dim
    units = [tuple(p.field.one if r == c else p.field.zero for r in range(dim)) for c in range(dim)]
    samples = list(units)
    for a in range(dim):
        for b in range(a + 1, dim):
            samples.append(tuple(x + y for x, y in zip(units[a], units[b])))
    if dim:
        rng = np.random.default_rng(seed)
        draws = rng.integers(-config.SPOT_RANGE, config.SPOT_RANGE + 1, size=(count, dim))
        samples.extend(tuple(p.field(int(v)) for v in row) for row in draws)
    return samples


def check_relation_oracle(p: JordanPair, seed: Optional[int] = None) -> CheckResult:
    """span{lambda(m).m} over the sample equals the linearized relation span."""
    name = "relation_oracle"
    dim = p.minus.dim * p.plus.dim
    linearized = Subspace.span(p.field, dim, relation_submodule(p))
    sampled_vectors = [act_on_tensor(p, lambda_operator(p, m), m) for m in relation_samples(p, seed)]
    for k, v in enumerate(sampled_vectors):
        if not linearized.contains(v):
            return record(Violation(name, "lambda(m).m lies outside the linearized span", (f"sample{k}",)))
    sampled = Subspace.span(p.field, dim, sampled_vectors)
    for k, v in enumerate(linearized.basis):
        if not sampled.contains(v):
            return record(Violation(name, "linearized generator outside the sampled span", (f"basis{k}",)))
    return record(Certificate(name, {"dim": linearized.dim}))


# ============================================================================
# THE UNIVERSAL ALGEBRA
# ============================================================================

@dataclass(frozen=True, eq=False)
class UtkkAlgebra:
    pair: JordanPair
    ins: InnerStructureAlgebra
    quotient: QuotientSpace
    lie: GradedLieAlgebra
    mu: Matrix
    tkk: TkkAlgebra
    upsilon: GradedHom
    _cache: Memo = field(default_factory=Memo, repr=False)

    @property
    def dim(self) -> int:
        return self.lie.dim

    @property
    def field(self):
        return self.lie.field

    @property
    def bracket_space_dim(self) -> int:
        """dim <P-, P+>."""
        return self.quotient.quotient_dim

    @property
    def relation_dim(self) -> int:
        return self.quotient.subspace.dim

    def pairing(self, a: Vector, b: Vector) -> Vector:
        """Coset coordinates of <a, b>."""
        return self.quotient.project(tensor_vectors(a, b))

    def embed_minus(self, a: Vector) -> Vector:
        return self.lie.embed(-1, a)

    def embed_plus(self, b: Vector) -> Vector:
        return self.lie.embed(1, b)

    def embed_bracket(self, coords: Vector) -> Vector:
        return self.lie.embed(0, coords)

    def kernel_upsilon(self) -> List[Vector]:
        return self.upsilon.kernel()

    @property
    def involution(self) -> Optional[AntiGradedInvolution]:
        return self._cache.get("involution")

    @property
    def sl2_triple(self) -> Optional[Sl2Triple]:
        chosen = self._cache.get("sl2")
        return chosen[1] if chosen else None

    @property
    def sl2_form(self) -> Optional[str]:
        chosen = self._cache.get("sl2")
        return chosen[0] if chosen else None


def _bracket_labels(p: JordanPair, q: QuotientSpace) -> List[str]:
    dp = p.plus.dim
    labels = []
    for col in q.free_cols:
        i, j = divmod(col, dp)
        labels.append(f"<{p.minus.labels[i]},{p.plus.labels[j]}>")
    return labels


def _mu_matrix(p: JordanPair, ins: InnerStructureAlgebra, q: QuotientSpace) -> Matrix:
    dp = p.plus.dim
    columns = [ins.nu_coords[divmod(col, dp)] for col in q.free_cols]
    return Matrix.from_columns(p.field, columns, ins.dim)


def _check_mu_vanishes(p: JordanPair, ins: InnerStructureAlgebra, q: QuotientSpace) -> CheckResult:
    """mu is well defined: lambda maps every relation to zero."""
    name = "mu_well_defined"
    dm, dp = p.dims
    for k, r in enumerate(q.subspace_basis):
        terms = [(c, ins.nu_coords[divmod(idx, dp)]) for idx, c in enumerate(r) if c]
        if any(linear_combination(p.field, ins.dim, terms)):
            return record(Violation(name, "lambda does not vanish on the relation span", (f"relation{k}",)))
    return record(Certificate(name))


def _utkk_brackets(
    p: JordanPair, ins: InnerStructureAlgebra, q: QuotientSpace, mu: Matrix
) -> Dict[Tuple[int, int], Dict[int, Scalar]]:
    dm, dp = p.dims
    k = q.quotient_dim
    off_q, off_plus = dm, dm + k
    brackets: Dict[Tuple[int, int], Dict[int, Scalar]] = {}

    def put(i: int, j: int, image: Dict[int, Scalar]) -> None:
        if image:
            brackets[(i, j)] = image
            brackets[(j, i)] = {l: -c for l, c in image.items()}

    for i in range(dm):
        for j in range(dp):
            image = sparse_vector(q.project(tensor_vectors(p.minus.basis_vector(i), p.plus.basis_vector(j))))
            put(i, off_plus + j, {off_q + l: c for l, c in image.items()})

    actions = [ins.element(column) for column in mu.columns()]
    lifts = [q.lift(tuple(p.field.one if r == s else p.field.zero for r in range(k))) for s in range(k)]
    for s, (x_minus, x_plus) in enumerate(actions):
        for i, column in enumerate(x_minus.columns()):
            put(off_q + s, i, sparse_vector(column))
        for j, column in enumerate(x_plus.columns()):
            put(off_q + s, off_plus + j, {off_plus + l: c for l, c in sparse_vector(column).items()})
        # [<a,b>, <c,d>] = <{a,b,c}, d> - <c, {b,a,d}>, computed for every ordered pair
        for t in range(k):
            image = sparse_vector(q.project(act_on_tensor(p, (x_minus, x_plus), lifts[t])))
            if image:
                brackets[(off_q + s, off_q + t)] = {off_q + l: c for l, c in image.items()}
    return brackets


def check_central_zero_extension(hom: GradedHom) -> CheckResult:
    """hom is a graded surjective Lie map with kernel central and inside degree 0."""
    name = "central_zero_extension"
    result = check_graded_hom(hom)
    if not result.passed:
        return result
    if not hom.is_surjective():
        return record(Violation(name, "map is not surjective"))
    total = hom.source
    kernel = hom.kernel()
    center_space = Subspace.span(total.field, total.dim, center(total))
    for v in kernel:
        if total.homogeneous_degree(v) != 0:
            return record(Violation(name, "kernel leaves degree 0", tuple(total.labels[i] for i, c in enumerate(v) if c)))
        if not center_space.contains(v):
            return record(Violation(name, "kernel is not central", tuple(total.labels[i] for i, c in enumerate(v) if c)))
    return record(Certificate(name, {"kernel_dim": len(kernel)}))


def check_utkk(u: "UtkkAlgebra") -> CheckResult:
    name = "utkk_algebra"
    result = check_graded_lie(u.lie)
    if not result.passed:
        return result
    if not is_zero_perfect(u.lie):
        return record(Violation(name, "L_0 != [L_-1, L_1]"))
    if forget_to_pair(u.lie) != u.pair:
        return record(Violation(name, "F_JP(uTKK(P)) differs from P"))
    return record(Certificate(name, {"dims": u.lie.component_dims}))


@trace_operation("utkk")
@track_latency("tkkcore.utkk")
def utkk(p: JordanPair, relations: Optional[Sequence[Vector]] = None) -> UtkkAlgebra:
    """
    uTKK(P) with its extension map upsilon onto TKK(P).

    `relations` replaces the generators of A when they are known to span
    the same subspace (the algebra shortcut supplies them).
    """
    if relations is None:
        cached = p._cache.get("utkk")
        if cached is not None:
            return cached
    target = tkk(p)
    ins = target.ins
    dm, dp = p.dims
    gens = relation_submodule(p) if relations is None else list(relations)
    q = QuotientSpace(Subspace.span(p.field, dm * dp, gens))
    require_certified(_check_mu_vanishes(p, ins, q))
    mu = _mu_matrix(p, ins, q)
    k = q.quotient_dim
    lie = from_brackets(
        p.field,
        [f"{label}_-" for label in p.minus.labels] + _bracket_labels(p, q) + [f"{label}_+" for label in p.plus.labels],
        [-1] * dm + [0] * k + [1] * dp,
        _utkk_brackets(p, ins, q, mu),
        name=f"uTKK({p.name})" if p.name else "uTKK",
        antisymmetrize=False,
    )
    # upsilon = id (+) mu (+) id
    entries = {}
    for i in range(dm):
        entries[(i, i)] = p.field.one
    for r, row in mu.sparse_rows().items():
        for c, v in row.items():
            entries[(dm + r, dm + c)] = v
    for j in range(dp):
        entries[(dm + ins.dim + j, dm + k + j)] = p.field.one
    upsilon = GradedHom(lie, target.lie, Matrix.from_entries(p.field, (target.lie.dim, lie.dim), entries))
    u = UtkkAlgebra(p, ins, q, lie, mu, target, upsilon)
    require_certified(check_utkk(u))
    require_certified(check_central_zero_extension(upsilon))
    track_construction("utkk", lie.dim)
    logger.info(
        "built universal TKK algebra",
        extra={"structure": p.name, "dimension": lie.dim},
    )
    if relations is None:
        u = p._cache.store("utkk", u)
    return u


# ============================================================================
# DECORATIONS
# ============================================================================

def check_omega_stable(t: JordanTriple) -> CheckResult:
    """The flip a (x) b -> b (x) a maps A(T (x) T) into itself."""
    pair, _ = double_jts(t)
    n = t.dim
    span = Subspace.span(pair.field, n * n, relation_submodule(pair))
    name = "omega_stable"
    for k, v in enumerate(span.basis):
        if not span.contains(swap_tensor(v, n, n)):
            return record(Violation(name, "flipped relation leaves A", (f"relation{k}",)))
    return record(Certificate(name, {"dim": span.dim}))


def utkk_involution(t: JordanTriple) -> AntiGradedInvolution:
    """
    kappa-hat on uTKK(T, T): a_- + <c, d> + b_+ -> b_- - <d, c> + a_+.

    Also certifies that upsilon intertwines it with the canonical
    involution of TKK(T, T).
    """
    pair, _ = double_jts(t)
    u = utkk(pair)
    cached = u.involution
    if cached is not None:
        return cached
    require_certified(check_omega_stable(t))
    n = t.dim
    q = u.quotient
    columns: List[Vector] = []
    for i in range(n):
        columns.append(u.embed_plus(pair.plus.basis_vector(i)))
    for s in range(q.quotient_dim):
        lift = q.lift(tuple(pair.field.one if r == s else pair.field.zero for r in range(q.quotient_dim)))
        columns.append(u.embed_bracket(q.project(vneg(swap_tensor(lift, n, n)))))
    for i in range(n):
        columns.append(u.embed_minus(pair.minus.basis_vector(i)))
    kappa = make_involution(u.lie, Matrix.from_columns(u.field, columns, u.dim))
    kappa_bar = tkk_involution(t)
    if u.upsilon.matrix @ kappa.matrix != kappa_bar.matrix @ u.upsilon.matrix:
        raise AxiomViolation(Violation("upsilon_involutary", "upsilon does not intertwine the involutions"))
    kappa = u._cache.store("involution", kappa)
    logger.debug("certified uTKK involution", extra={"structure": t.name, "dimension": u.dim})
    return kappa


def _candidate(u: UtkkAlgebra, one: Vector, form: str) -> Sl2Triple:
    two_one = vscale(u.field(2), one)
    if form == "theorem":
        # h = -<1, 2>
        h = vneg(u.pairing(one, two_one))
    else:
        # h = <2, 1>
        h = u.pairing(two_one, one)
    return Sl2Triple(u.embed_bracket(h), u.embed_plus(two_one), u.embed_minus(one))


def utkk_sl2(j: JordanAlgebra) -> Sl2Triple:
    """
    The sl2-triple (h, 2_+, 1_-) of uTKK(J). Both printed readings of h
    are tried; the one that certified is kept in `UtkkAlgebra.sl2_form`.

    Raises:
        NeitherForm: if neither reading is an sl2-triple
    """
    pair, one = algebra_to_pair(j)
    u = utkk(pair)
    cached = u.sl2_triple
    if cached is not None:
        return cached
    chosen = None
    for form in SL2_FORMS:
        candidate = _candidate(u, one, form)
        if check_sl2(u.lie, candidate).passed:
            chosen = form, candidate
            break
    if chosen is None:
        raise NeitherForm(f"no printed sl2-triple form certifies on uTKK({j.name})")
    form, triple = chosen
    if not induced_grading_matches(u.lie, triple):
        raise AxiomViolation(record(Violation("induced_grading", "ad h eigenspaces differ from the construction grading")))
    form, triple = u._cache.store("sl2", (form, triple))
    logger.info(f"sl2-triple certified in {form} form", extra={"structure": j.name, "dimension": u.dim})
    return triple

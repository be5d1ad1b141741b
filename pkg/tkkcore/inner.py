"""
nu-operators and the inner structure algebra ins(P).

An element of ins(P) is a pair (X_-, X_+) of linear maps on P- and P+.
Pairs are flattened to the coordinate vector vec(X_-) + vec(X_+)
(row-major), and ins(P) is stored as the RREF span of the flattened
nu(e_i, f_j) in that space.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from certificates import Certificate, CheckResult, Violation, record, require_certified
from errors import ComponentMismatchError, NoSolution
from exactla import Matrix, Subspace, Vector, linear_combination
from freemod import BilinearMap, FreeModule, sparse_vector, tensor_index
from jordan import MINUS, PLUS, JordanAlgebra, JordanPair, JordanTriple, algebra_to_triple, check_axioms, double_jts
from memo import Memo
from observability.logging_config import get_logger
from observability.metrics import track_construction, track_latency
from observability.tracing import trace_operation

logger = get_logger(__name__)

OperatorPair = Tuple[Matrix, Matrix]


def nu(p: JordanPair, a: Vector, b: Vector) -> OperatorPair:
    """nu(a, b) = (V_{a,b}, -V_{b,a}) with a in P- and b in P+."""
    if len(a) != p.minus.dim or len(b) != p.plus.dim:
        raise ComponentMismatchError("nu(a, b) needs a in P- and b in P+")
    return p.v_matrix(MINUS, a, b), -p.v_matrix(PLUS, b, a)


def flatten(x: OperatorPair) -> Vector:
    minus, plus = x
    return tuple(v for row in minus.entries() for v in row) + tuple(v for row in plus.entries() for v in row)


def commutator(x: OperatorPair, y: OperatorPair) -> OperatorPair:
    return x[0] @ y[0] - y[0] @ x[0], x[1] @ y[1] - y[1] @ x[1]


def act_on_tensor(p: JordanPair, x: OperatorPair, t: Vector) -> Vector:
    """X.(sum a_i (x) b_i) = sum X_- a_i (x) b_i + a_i (x) X_+ b_i."""
    dm, dp = p.dims
    out = [p.field.zero] * (dm * dp)
    minus_rows, plus_rows = x[0].sparse_rows(), x[1].sparse_rows()
    for i in range(dm):
        for j in range(dp):
            c = t[tensor_index(i, j, dp)]
            if not c:
                continue
            # X_- e_i (x) f_j
            for r, row in minus_rows.items():
                if i in row:
                    out[tensor_index(r, j, dp)] += c * row[i]
            # e_i (x) X_+ f_j
            for r, row in plus_rows.items():
                if j in row:
                    out[tensor_index(i, r, dp)] += c * row[j]
    return tuple(out)


@dataclass(frozen=True, eq=False)
class InnerStructureAlgebra:
    pair: JordanPair
    space: Subspace
    basis: Tuple[OperatorPair, ...]
    nu_coords: Dict[Tuple[int, int], Vector]
    bracket_map: BilinearMap
    module: FreeModule
    _nu_cache: Memo = field(default_factory=Memo, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self):
        return self.pair.field

    def element(self, coords: Vector) -> OperatorPair:
        return _unflatten(self.pair, self.space.combine(coords))

    def coordinates(self, x: OperatorPair) -> Vector:
        """Coordinates of an operator pair in the ins basis (NoSolution if outside)."""
        return self.space.coordinates(flatten(x))

    def act_minus(self, coords: Vector, v: Vector) -> Vector:
        return self.element(coords)[0].apply(v)

    def act_plus(self, coords: Vector, v: Vector) -> Vector:
        return self.element(coords)[1].apply(v)

    def act_tensor(self, coords: Vector, t: Vector) -> Vector:
        return act_on_tensor(self.pair, self.element(coords), t)

    def nu_basis(self, i: int, j: int) -> OperatorPair:
        cached = self._nu_cache.get((i, j))
        if cached is None:
            cached = nu(self.pair, self.pair.minus.basis_vector(i), self.pair.plus.basis_vector(j))
            cached = self._nu_cache.store((i, j), cached)
        return cached

    def nu_coordinates(self, a: Vector, b: Vector) -> Vector:
        """ins coordinates of nu(a, b), expanded bilinearly."""
        terms = [
            (a[i] * b[j], v)
            for (i, j), v in self.nu_coords.items()
            if a[i] and b[j]
        ]
        return linear_combination(self.field, self.dim, terms)

    def bracket(self, x: Vector, y: Vector) -> Vector:
        return self.bracket_map.apply(x, y)


def _unflatten(p: JordanPair, flat: Vector) -> OperatorPair:
    dm, dp = p.dims
    minus = Matrix.from_rows(p.field, [flat[r * dm:(r + 1) * dm] for r in range(dm)], dm)
    offset = dm * dm
    plus = Matrix.from_rows(p.field, [flat[offset + r * dp:offset + (r + 1) * dp] for r in range(dp)], dp)
    return minus, plus


def check_nu_closure(p: JordanPair) -> CheckResult:
    """[nu(a,b), nu(c,d)] = nu(nu(a,b)c, d) + nu(c, nu(a,b)d) on all basis quadruples."""
    dm, dp = p.dims
    name = "inner_structure_closure"
    generators = {
        (i, j): nu(p, p.minus.basis_vector(i), p.plus.basis_vector(j)) for i in range(dm) for j in range(dp)
    }
    for (i, j), x in generators.items():
        for (k, l), y in generators.items():
            lhs = flatten(commutator(x, y))
            xc = x[0].apply(p.minus.basis_vector(k))
            xd = x[1].apply(p.plus.basis_vector(l))
            rhs_first = flatten(nu(p, xc, p.plus.basis_vector(l)))
            rhs_second = flatten(nu(p, p.minus.basis_vector(k), xd))
            if lhs != tuple(u + v for u, v in zip(rhs_first, rhs_second)):
                return record(Violation(
                    name,
                    "[nu(a,b), nu(c,d)] != nu(nu(a,b)c, d) + nu(c, nu(a,b)d)",
                    (p.minus.labels[i], p.plus.labels[j], p.minus.labels[k], p.plus.labels[l]),
                ))
    return record(Certificate(name, {"generators": len(generators)}))


@trace_operation("inner_structure_algebra")
@track_latency("tkkcore.inner_structure_algebra")
def inner_structure_algebra(p: JordanPair) -> InnerStructureAlgebra:
    require_certified(check_axioms(p))
    cached = p._cache.get("ins")
    if cached is not None:
        return cached
    require_certified(check_nu_closure(p))
    dm, dp = p.dims
    flat_dim = dm * dm + dp * dp
    generators = {}
    for i in range(dm):
        for j in range(dp):
            generators[(i, j)] = nu(p, p.minus.basis_vector(i), p.plus.basis_vector(j))
    space = Subspace.span(p.field, flat_dim, [flatten(g) for g in generators.values()])
    basis = tuple(_unflatten(p, v) for v in space.basis)
    nu_coords = {key: space.coordinates(flatten(g)) for key, g in generators.items()}
    module = FreeModule(p.field, tuple(f"X{k + 1}" for k in range(len(basis))))
    table = {}
    for s, x in enumerate(basis):
        for t, y in enumerate(basis):
            if s == t:
                continue
            image = sparse_vector(space.coordinates(flatten(commutator(x, y))))
            if image:
                table[(s, t)] = image
    ins = InnerStructureAlgebra(
        p, space, basis, nu_coords, BilinearMap((module, module), module, table), module, dict(generators)
    )
    track_construction("ins", ins.dim)
    logger.info("built inner structure algebra", extra={"structure": p.name, "dimension": ins.dim})
    return p._cache.store("ins", ins)


def _swap_pair(x: OperatorPair) -> OperatorPair:
    return x[1], x[0]


def ins_decomposition_jts(t: JordanTriple) -> Tuple[List[Vector], List[Vector]]:
    """
    Eigenspaces of the automorphism nu(x, y) -> -nu(y, x) of ins(T), as
    ins coordinates: (ins_-1, ins_1). On operator pairs it is the swap
    (X_-, X_+) -> (X_+, X_-).
    """
    pair, _ = double_jts(t)
    ins = inner_structure_algebra(pair)
    half = pair.field.inverse(pair.field(2))
    plus_part, minus_part = [], []
    for x in ins.basis:
        swapped = flatten(_swap_pair(x))
        flat = flatten(x)
        plus_part.append(tuple(half * (u + v) for u, v in zip(flat, swapped)))
        minus_part.append(tuple(half * (u - v) for u, v in zip(flat, swapped)))
    ins_one = Subspace.span(pair.field, ins.space.ambient_dim, plus_part)
    ins_minus_one = Subspace.span(pair.field, ins.space.ambient_dim, minus_part)
    if not (ins_one.is_subspace_of(ins.space) and ins_minus_one.is_subspace_of(ins.space)):
        raise AssertionError("the swap automorphism does not preserve ins(T)")
    if ins_one.dim + ins_minus_one.dim != ins.dim:
        raise AssertionError("eigenspaces of the swap do not reconstruct ins(T)")

    n = t.dim
    skew = [flatten(_difference(ins, a, b, -1)) for a in range(n) for b in range(n)]
    sym = [flatten(_difference(ins, a, b, 1)) for a in range(n) for b in range(n)]
    if Subspace.span(pair.field, ins.space.ambient_dim, skew).basis != ins_one.basis:
        raise AssertionError("ins_1 differs from span{nu(a,b) - nu(b,a)}")
    if Subspace.span(pair.field, ins.space.ambient_dim, sym).basis != ins_minus_one.basis:
        raise AssertionError("ins_-1 differs from span{nu(a,b) + nu(b,a)}")

    to_coords = ins.space.coordinates
    return [to_coords(v) for v in ins_minus_one.basis], [to_coords(v) for v in ins_one.basis]


def _difference(ins: InnerStructureAlgebra, a: int, b: int, sign: int) -> OperatorPair:
    """nu(a, b) + sign * nu(b, a) on basis indices."""
    x, y = ins.nu_basis(a, b), ins.nu_basis(b, a)
    if sign > 0:
        return x[0] + y[0], x[1] + y[1]
    return x[0] - y[0], x[1] - y[1]


def check_right_multiplication_part(j: JordanAlgebra) -> CheckResult:
    """For unital J, ins_-1 is spanned by the pairs (R_c, -R_c), c in J."""
    name = "right_multiplication_part"
    t = algebra_to_triple(j)
    pair, _ = double_jts(t)
    ins = inner_structure_algebra(pair)
    minus_one, _ = ins_decomposition_jts(t)
    eigen = Subspace.span(pair.field, ins.dim, minus_one)
    right = []
    for k, c in enumerate(j.module.basis()):
        r = j.right_multiplication(c).matrix
        try:
            right.append(ins.coordinates((r, -r)))
        except NoSolution:
            return record(Violation(name, "(R_c, -R_c) is not in ins(J)", (j.module.labels[k],)))
    if Subspace.span(pair.field, ins.dim, right).basis != eigen.basis:
        return record(Violation(name, "span of (R_c, -R_c) differs from ins_-1"))
    return record(Certificate(name, {"dim": eigen.dim}))

"""
The classical TKK algebra P- (+) ins(P) (+) P+.

Basis order: the P- basis (labels suffixed "_-"), the ins(P) basis
(X1, X2, ...), then the P+ basis (labels suffixed "_+"). The bracket is

    [(a, X, b), (c, Y, d)] = (Xc - Ya) + ([X, Y] + nu(a, d) - nu(c, b)) + (Xd - Yb).
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from certificates import Certificate, CheckResult, Violation, record, require_certified
from errors import NoSolution, PreconditionError
from exactla import Matrix, Scalar, Vector
from freemod import sparse_vector
from jordan import JordanPair, JordanTriple, double_jts
from liegrad import (
    AntiGradedInvolution,
    GradedLieAlgebra,
    check_graded_lie,
    forget_to_pair,
    from_brackets,
    is_zero_perfect,
    make_involution,
)
from observability.logging_config import get_logger
from observability.metrics import track_construction, track_latency
from observability.tracing import trace_operation
from tkkcore.inner import InnerStructureAlgebra, inner_structure_algebra

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class TkkAlgebra:
    pair: JordanPair
    ins: InnerStructureAlgebra
    lie: GradedLieAlgebra

    @property
    def dim(self) -> int:
        return self.lie.dim

    @property
    def field(self):
        return self.lie.field

    def minus_offset(self) -> int:
        return 0

    def ins_offset(self) -> int:
        return self.pair.minus.dim

    def plus_offset(self) -> int:
        return self.pair.minus.dim + self.ins.dim

    def embed_minus(self, a: Vector) -> Vector:
        return self.lie.embed(-1, a)

    def embed_plus(self, b: Vector) -> Vector:
        return self.lie.embed(1, b)

    def embed_ins(self, coords: Vector) -> Vector:
        return self.lie.embed(0, coords)


def _labels(p: JordanPair, ins_dim: int) -> List[str]:
    return (
        [f"{label}_-" for label in p.minus.labels]
        + [f"X{k + 1}" for k in range(ins_dim)]
        + [f"{label}_+" for label in p.plus.labels]
    )


def _shift(v: Dict[int, Scalar], offset: int) -> Dict[int, Scalar]:
    return {i + offset: c for i, c in v.items()}


def tkk_brackets(p: JordanPair, ins: InnerStructureAlgebra) -> Dict[Tuple[int, int], Dict[int, Scalar]]:
    """Bracket entries for i < j; the remaining ones follow by antisymmetry."""
    dm, dp = p.dims
    k = ins.dim
    off_ins, off_plus = dm, dm + k
    brackets: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    # [a_-, b_+] = nu(a, b)
    for i in range(dm):
        for j in range(dp):
            image = sparse_vector(ins.nu_coords[(i, j)])
            if image:
                brackets[(i, off_plus + j)] = _shift(image, off_ins)
    for s, (x_minus, x_plus) in enumerate(ins.basis):
        # [X, c_-] = X_- c; stored as (c, X) with the opposite sign
        for i, column in enumerate(x_minus.columns()):
            image = sparse_vector(column)
            if image:
                brackets[(i, off_ins + s)] = {l: -c for l, c in image.items()}
        for j, column in enumerate(x_plus.columns()):
            image = sparse_vector(column)
            if image:
                brackets[(off_ins + s, off_plus + j)] = _shift(image, off_plus)
        for t in range(s + 1, k):
            image = ins.bracket_map.table.get((s, t))
            if image:
                brackets[(off_ins + s, off_ins + t)] = _shift(image, off_ins)
    return brackets


def check_tkk(algebra: TkkAlgebra) -> CheckResult:
    """Lie axioms, 0-perfectness and F_JP(TKK(P)) = P."""
    name = "tkk_algebra"
    lie = algebra.lie
    result = check_graded_lie(lie)
    if not result.passed:
        return result
    if not is_zero_perfect(lie):
        return record(Violation(name, "L_0 != [L_-1, L_1]"))
    if forget_to_pair(lie) != algebra.pair:
        return record(Violation(name, "F_JP(TKK(P)) differs from P"))
    return record(Certificate(name, {"dims": lie.component_dims}))


@trace_operation("tkk")
@track_latency("tkkcore.tkk")
def tkk(p: JordanPair) -> TkkAlgebra:
    cached = p._cache.get("tkk")
    if cached is not None:
        return cached
    ins = inner_structure_algebra(p)
    dm, dp = p.dims
    lie = from_brackets(
        p.field,
        _labels(p, ins.dim),
        [-1] * dm + [0] * ins.dim + [1] * dp,
        tkk_brackets(p, ins),
        name=f"TKK({p.name})" if p.name else "TKK",
    )
    algebra = TkkAlgebra(p, ins, lie)
    require_certified(check_tkk(algebra))
    track_construction("tkk", lie.dim)
    logger.info("built TKK algebra", extra={"structure": p.name, "dimension": lie.dim})
    return p._cache.store("tkk", algebra)


def tkk_involution(t: JordanTriple) -> AntiGradedInvolution:
    """
    The canonical involution of TKK(T, T): a_- + X + b_+ -> b_- + X^swap + a_+,
    where (X_-, X_+)^swap = (X_+, X_-).
    """
    pair, _ = double_jts(t)
    algebra = tkk(pair)
    lie = algebra.lie
    n = t.dim
    ins = algebra.ins
    columns: List[Vector] = []
    for i in range(n):
        columns.append(algebra.embed_plus(pair.plus.basis_vector(i)))
    for x_minus, x_plus in ins.basis:
        try:
            coords = ins.coordinates((x_plus, x_minus))
        except NoSolution as exc:
            raise PreconditionError("ins(T, T) is not stable under the swap") from exc
        columns.append(algebra.embed_ins(coords))
    for i in range(n):
        columns.append(algebra.embed_minus(pair.minus.basis_vector(i)))
    return make_involution(lie, Matrix.from_columns(lie.field, columns, lie.dim))

"""
Conversions between the Jordan structures: opposite pair, doubling of a
triple system, the triple system of a unital algebra and the pair with
marked invertible element.
"""
from typing import Tuple

from certificates import require_certified
from exactla import Matrix, Vector, rank, vadd, vsub
from freemod import LinearMap, TrilinearMap
from jordan.axioms import check_axioms
from jordan.homs import PairHom, PairInvolution, check_involution
from jordan.structures import JordanAlgebra, JordanPair, JordanTriple
from observability.logging_config import get_logger

logger = get_logger(__name__)


def opposite(p: JordanPair) -> JordanPair:
    """P^op: components and products exchanged."""
    cached = p._cache.get("opposite")
    if cached is None:
        cached = JordanPair(p.plus, p.minus, p.t_plus, p.t_minus, name=f"{p.name}^op" if p.name else "")
        cached._cache["opposite"] = p
        cached = p._cache.store("opposite", cached)
    return cached


def double_jts(t: JordanTriple, check: bool = True) -> Tuple[JordanPair, PairInvolution]:
    """The pair (T, T) with both products equal to t, and its identity involution."""
    if check:
        require_certified(check_axioms(t))
    cached = t._cache.get("double")
    if cached is not None:
        return cached
    pair = JordanPair(t.module, t.module, t.t, t.t, name=t.name)
    involution = PairInvolution(
        pair, PairHom(pair, opposite(pair), LinearMap.identity(t.module), LinearMap.identity(t.module))
    )
    if check:
        require_certified(check_axioms(pair))
        require_certified(check_involution(pair, involution))
        pair, involution = t._cache.store("double", (pair, involution))
        logger.debug("doubled triple system", extra={"structure": t.name, "dimension": t.dim})
    return pair, involution


def algebra_triple_product(j: JordanAlgebra, a: Vector, b: Vector, c: Vector) -> Vector:
    """{a, b, c} = (ab)c + a(bc) - b(ca)."""
    return vsub(
        vadd(j.multiply(j.multiply(a, b), c), j.multiply(a, j.multiply(b, c))),
        j.multiply(b, j.multiply(c, a)),
    )


def algebra_to_triple(j: JordanAlgebra) -> JordanTriple:
    require_certified(check_axioms(j))
    cached = j._cache.get("triple")
    if cached is None:
        m = j.module
        cached = JordanTriple(
            m,
            TrilinearMap.from_function((m, m, m), m, lambda a, b, c: algebra_triple_product(j, a, b, c)),
            name=j.name,
        )
        cached = j._cache.store("triple", cached)
    return cached


def algebra_to_pair(j: JordanAlgebra) -> Tuple[JordanPair, Vector]:
    """The doubled pair of the induced triple, with 1 marked in P+."""
    pair, _ = double_jts(algebra_to_triple(j))
    one = tuple(j.identity)
    if not is_invertible(pair, 1, one):
        raise AssertionError("identity element is not invertible in the doubled pair")
    return pair, one


def quadratic_matrix(p: JordanPair, sigma: int, b: Vector) -> Matrix:
    """Matrix of a -> {b, a, b}_sigma from P_-sigma to P_sigma."""
    other = p.component(-sigma)
    return Matrix.from_columns(
        p.field, [p.product(sigma, b, e, b) for e in other.basis()], p.component(sigma).dim
    )


def is_invertible(p: JordanPair, sigma: int, b: Vector) -> bool:
    own, other = p.component(sigma), p.component(-sigma)
    if own.dim != other.dim:
        return False
    if own.dim == 0:
        return True
    return rank(quadratic_matrix(p, sigma, b)) == own.dim

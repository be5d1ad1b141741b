"""
<J, J> for a unital Jordan algebra J straight from the multiplication:
A(J (x) J) is the span of a^2 (x) a - 1 (x) a^3, and splits into its
symmetric and skew parts.

All spans are taken over the full linearization in a, evaluated on
basis triples x <= y <= z.
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from typing import List, Tuple

from errors import SpanMismatch
from exactla import Subspace, Vector, vadd, vsub
from freemod import tensor_vectors
from jordan import JordanAlgebra, algebra_to_pair
from observability.logging_config import get_logger
from observability.tracing import trace_operation
from tkkcore.universal import UtkkAlgebra, relation_submodule, utkk

logger = get_logger(__name__)

# sign of the 1 (x) a^2 + a^2 (x) 1 terms in the symmetric generator
SYMMETRIC_READINGS = (("printed", 1), ("corrected", -1))


def _sum(j: JordanAlgebra, vectors) -> Vector:
    out = tuple([j.field.zero] * (j.dim * j.dim))
    for v in vectors:
        out = vadd(out, v)
    return out


def cubic_relations(j: JordanAlgebra) -> List[Vector]:
    """Linearized a^2 (x) a - 1 (x) a^3 on basis triples."""
    one = tuple(j.identity)
    basis = list(j.module.basis())
    relations = []
    for triple in combinations_with_replacement(range(j.dim), 3):
        terms = []
        for p, q, r in permutations(triple):
            pq = j.multiply(basis[p], basis[q])
            terms.append(tensor_vectors(pq, basis[r]))
            terms.append(tuple(-c for c in tensor_vectors(one, j.multiply(pq, basis[r]))))
        relations.append(_sum(j, terms))
    return relations


def _first_outside(span: Subspace, vectors: List[Vector]):
    for k, v in enumerate(vectors):
        if not span.contains(v):
            return k
    return None


def _require_equal_spans(j: JordanAlgebra, left: List[Vector], right: List[Vector], what: str) -> Subspace:
    dim = j.dim * j.dim
    left_span = Subspace.span(j.field, dim, left)
    right_span = Subspace.span(j.field, dim, right)
    k = _first_outside(right_span, list(left_span.basis))
    if k is not None:
        raise SpanMismatch(f"{what}: left span is not contained in the right span", ("left", k))
    k = _first_outside(left_span, list(right_span.basis))
    if k is not None:
        raise SpanMismatch(f"{what}: right span is not contained in the left span", ("right", k))
    return left_span


@trace_operation("utkk_shortcut")
def utkk_algebra_shortcut(j: JordanAlgebra) -> UtkkAlgebra:
    """
    uTKK of the pair of J, with <J, J> = J (x) J / span{a^2 (x) a - 1 (x) a^3}.

    Raises:
        SpanMismatch: if the cubic span differs from A of the doubled pair
    """
    pair, _ = algebra_to_pair(j)
    cubic = cubic_relations(j)
    _require_equal_spans(j, cubic, relation_submodule(pair), "cubic relations vs A")
    u = utkk(pair, relations=cubic)
    logger.info(
        "built <J, J> from cubic relations",
        extra={"structure": j.name, "dimension": u.bracket_space_dim},
    )
    return u


@dataclass(frozen=True)
class SymmSkewSplit:
    symmetric: Tuple[Vector, ...]
    skew: Tuple[Vector, ...]
    symmetric_reading: str
    relation_dim: int


def symmetric_square_basis(j: JordanAlgebra) -> List[Vector]:
    basis = list(j.module.basis())
    return [
        vadd(tensor_vectors(basis[a], basis[b]), tensor_vectors(basis[b], basis[a]))
        for a, b in combinations_with_replacement(range(j.dim), 2)
    ]


def exterior_square_basis(j: JordanAlgebra) -> List[Vector]:
    basis = list(j.module.basis())
    return [
        vsub(tensor_vectors(basis[a], basis[b]), tensor_vectors(basis[b], basis[a]))
        for a in range(j.dim)
        for b in range(a + 1, j.dim)
    ]


def symmetric_generators(j: JordanAlgebra, sign: int) -> List[Vector]:
    """Linearized 2a (x) a + sign * (1 (x) a^2 + a^2 (x) 1)."""
    one = tuple(j.identity)
    basis = list(j.module.basis())
    out = []
    for a, b in combinations_with_replacement(range(j.dim), 2):
        x, y = basis[a], basis[b]
        xy = j.multiply(x, y)
        cross = vadd(tensor_vectors(one, xy), tensor_vectors(xy, one))
        if sign < 0:
            cross = tuple(-c for c in cross)
        out.append(vadd(vadd(tensor_vectors(x, y), tensor_vectors(y, x)), cross))
    return out


def skew_generators(j: JordanAlgebra) -> List[Vector]:
    """Linearized a^2 (x) a - a (x) a^2."""
    basis = list(j.module.basis())
    out = []
    for triple in combinations_with_replacement(range(j.dim), 3):
        terms = []
        for p, q, r in permutations(triple):
            pq = j.multiply(basis[p], basis[q])
            terms.append(vsub(tensor_vectors(pq, basis[r]), tensor_vectors(basis[r], pq)))
        out.append(_sum(j, terms))
    return out


def symm_skew_split(j: JordanAlgebra) -> SymmSkewSplit:
    """
    A = (A meet S^2 J) (+) (A meet J^J), each part compared with its spanning set.

    Raises:
        SpanMismatch: if a part differs from every reading of its spanning set
    """
    pair, _ = algebra_to_pair(j)
    dim = j.dim * j.dim
    relations = Subspace.span(j.field, dim, relation_submodule(pair))
    symmetric = relations.intersection(Subspace.span(j.field, dim, symmetric_square_basis(j)))
    skew = relations.intersection(Subspace.span(j.field, dim, exterior_square_basis(j)))
    if symmetric.dim + skew.dim != relations.dim or (symmetric + skew).basis != relations.basis:
        raise SpanMismatch("symmetric and skew parts do not reconstruct A")

    _require_equal_spans(j, list(skew.basis), skew_generators(j), "skew part")

    reading = None
    for name, sign in SYMMETRIC_READINGS:
        candidate = Subspace.span(j.field, dim, symmetric_generators(j, sign))
        if candidate.basis == symmetric.basis:
            reading = name
            break
    if reading is None:
        raise SpanMismatch("no reading of the symmetric generator spans the symmetric part")
    logger.info(
        f"symmetric part matches the {reading} generator",
        extra={"structure": j.name, "dimension": relations.dim},
    )
    return SymmSkewSplit(symmetric.basis, skew.basis, reading, relations.dim)

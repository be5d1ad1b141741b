"""
The forgetful functors from 3-graded Lie algebras to Jordan structures.
"""
from typing import Tuple

from certificates import require_certified
from errors import PreconditionError
from exactla import Matrix, vscale
from freemod import BilinearMap, LinearMap, TrilinearMap
from jordan import JordanAlgebra, JordanPair, JordanTriple, PairHom, PairInvolution, check_axioms, check_involution, opposite
from liegrad.algebra import GradedLieAlgebra, check_graded_lie
from liegrad.homs import AntiGradedInvolution, check_involution as check_lie_involution
from liegrad.sl2 import Sl2Triple, check_sl2, induced_grading_matches


def _require_three_graded(l: GradedLieAlgebra) -> None:
    require_certified(check_graded_lie(l))
    if not l.is_three_graded():
        raise PreconditionError(f"algebra {l.name or '<unnamed>'} is not 3-graded")


def _component_trilinear(l: GradedLieAlgebra, degrees: Tuple[int, int, int], f) -> TrilinearMap:
    modules = tuple(l.component_module(d) for d in degrees)
    out_degree = degrees[0]
    return TrilinearMap.from_function(
        modules,
        l.component_module(out_degree),
        lambda a, b, c: l.restrict(
            out_degree, f(l.embed(degrees[0], a), l.embed(degrees[1], b), l.embed(degrees[2], c))
        ),
    )


def forget_to_pair(l: GradedLieAlgebra) -> JordanPair:
    """(L_-1, L_1) with {a, b, c}_sigma = [[a, b], c]."""
    _require_three_graded(l)
    cached = l._cache.get("pair")
    if cached is not None:
        return cached

    def triple(a, b, c):
        return l.bracket(l.bracket(a, b), c)

    pair = JordanPair(
        l.component_module(-1),
        l.component_module(1),
        _component_trilinear(l, (-1, 1, -1), triple),
        _component_trilinear(l, (1, -1, 1), triple),
        name=l.name,
    )
    require_certified(check_axioms(pair))
    return l._cache.store("pair", pair)


def restriction(l: GradedLieAlgebra, m: Matrix, source_degree: int, target_degree: int) -> LinearMap:
    """The block of m from L_source_degree to L_target_degree as a linear map."""
    src = l.component_module(source_degree)
    dst = l.component_module(target_degree)
    return LinearMap.from_function(src, dst, lambda v: l.restrict(target_degree, m.apply(l.embed(source_degree, v))))


def pair_involution_from(l: GradedLieAlgebra, eps: AntiGradedInvolution) -> PairInvolution:
    """The involution of F_JP(L) obtained by restricting eps to L_-1 and L_1."""
    pair = forget_to_pair(l)
    hom = PairHom(pair, opposite(pair), restriction(l, eps.matrix, -1, 1), restriction(l, eps.matrix, 1, -1))
    require_certified(check_involution(pair, hom))
    return PairInvolution(pair, hom)


def forget_to_jts(l: GradedLieAlgebra, eps: AntiGradedInvolution) -> JordanTriple:
    """L_1 with {a, b, c} = [[a, eps(b)], c]."""
    _require_three_graded(l)
    require_certified(check_lie_involution(l, eps))
    l1 = l.component_module(1)
    t = TrilinearMap.from_function(
        (l1, l1, l1),
        l1,
        lambda a, b, c: l.restrict(
            1, l.bracket(l.bracket(l.embed(1, a), eps(l.embed(1, b))), l.embed(1, c))
        ),
    )
    triple = JordanTriple(l1, t, name=l.name)
    require_certified(check_axioms(triple))
    return triple


def forget_to_ja(l: GradedLieAlgebra, s: Sl2Triple) -> JordanAlgebra:
    """L_1 with a * b = [[a, f], b] and identity e/2."""
    _require_three_graded(l)
    require_certified(check_sl2(l, s))
    if not induced_grading_matches(l, s):
        raise PreconditionError("the grading is not the one induced by the sl2-triple")
    l1 = l.component_module(1)
    mult = BilinearMap.from_function(
        (l1, l1),
        l1,
        lambda a, b: l.restrict(1, l.bracket(l.bracket(l.embed(1, a), s.f), l.embed(1, b))),
    )
    identity = l.restrict(1, vscale(l.field.inverse(l.field(2)), s.e))
    algebra = JordanAlgebra(l1, mult, identity, name=l.name)
    require_certified(check_axioms(algebra))
    return algebra

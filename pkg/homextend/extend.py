"""
Extending homomorphisms of Jordan data to graded Lie homomorphisms out of uTKK.

A pair homomorphism gamma: P -> F_JP(L) extends uniquely to

    a_- + sum <c_i, d_i> + b_+  ->  gamma_-(a) + sum [gamma_-(c_i), gamma_+(d_i)] + gamma_+(b).
"""
from typing import List, Tuple

from certificates import Violation, record, require_certified
from errors import AxiomViolation, NeitherForm, PreconditionError
from exactla import Matrix, Vector
from freemod import LinearMap
from jordan import JordanAlgebra, JordanTriple, PairHom, algebra_to_pair, check_hom, check_involution, double_jts, opposite
from liegrad import (
    AntiGradedInvolution,
    GradedHom,
    GradedLieAlgebra,
    Sl2Triple,
    check_graded_hom,
    forget_to_ja,
    forget_to_jts,
    forget_to_pair,
    restriction,
)
from observability.logging_config import get_logger
from tkkcore import utkk, utkk_involution, utkk_sl2

logger = get_logger(__name__)

# coefficients (c_e, c_f) of the involution (c_e (ad e)^2, c_f (ad f)^2) on (L_-1, L_1)
JA_INVOLUTION_READINGS = (
    ("printed", (-1, 2), (-1, 2)),
    ("normalized", (-1, 4), (-1, 1)),
)


def extend_pair_hom(gamma: PairHom, l: GradedLieAlgebra) -> GradedHom:
    """
    The graded Lie homomorphism uTKK(P) -> L restricting to gamma on degrees -1 and 1.

    Raises:
        PreconditionError: if gamma does not land in F_JP(L)
        AxiomViolation: if gamma is not a pair homomorphism
    """
    target = forget_to_pair(l)
    if gamma.target != target:
        raise PreconditionError("gamma must map into the Jordan pair of L")
    p = gamma.source
    require_certified(check_hom("pair", gamma, p, target))
    u = utkk(p)
    dm, dp = p.dims
    minus_images = [l.embed(-1, gamma.minus(e)) for e in p.minus.basis()]
    plus_images = [l.embed(1, gamma.plus(e)) for e in p.plus.basis()]
    pairings = {}
    for i in range(dm):
        for j in range(dp):
            pairings[(i, j)] = l.bracket(minus_images[i], plus_images[j])

    for k, r in enumerate(u.quotient.subspace_basis):
        total = [l.field.zero] * l.dim
        for idx, c in enumerate(r):
            if c:
                for m, v in enumerate(pairings[divmod(idx, dp)]):
                    if v:
                        total[m] += c * v
        if any(total):
            raise AxiomViolation(record(Violation("extension_well_defined", "a relation maps to a nonzero element", (f"relation{k}",))))

    columns: List[Vector] = list(minus_images)
    columns.extend(pairings[divmod(col, dp)] for col in u.quotient.free_cols)
    columns.extend(plus_images)
    hom = GradedHom(u.lie, l, Matrix.from_columns(l.field, columns, l.dim))
    require_certified(check_graded_hom(hom))
    return hom


def _pair_hom(p, target, minus: Matrix, plus: Matrix) -> PairHom:
    return PairHom(p, target, LinearMap(p.minus, target.minus, minus), LinearMap(p.plus, target.plus, plus))


def extend_jts_hom(
    gamma: LinearMap, t: JordanTriple, l: GradedLieAlgebra, eps: AntiGradedInvolution
) -> GradedHom:
    """
    The involutary homomorphism (uTKK(T, T), kappa-hat) -> (L, eps) extending
    the triple homomorphism gamma: T -> F_JTS(L, eps).
    """
    require_certified(check_hom("triple", gamma, t, forget_to_jts(l, eps)))
    pair, _ = double_jts(t)
    target = forget_to_pair(l)
    flip = restriction(l, eps.matrix, 1, -1)
    hom = extend_pair_hom(_pair_hom(pair, target, flip.matrix @ gamma.matrix, gamma.matrix), l)
    kappa = utkk_involution(t)
    if hom.matrix @ kappa.matrix != eps.matrix @ hom.matrix:
        raise AxiomViolation(record(Violation("involutary_hom", "extension does not intertwine the involutions")))
    return hom


def _ad_squared(l: GradedLieAlgebra, x: Vector, coefficient: Tuple[int, int]) -> Matrix:
    ad = l.ad(x)
    c = l.field.quo(l.field(coefficient[0]), l.field(coefficient[1]))
    return (ad @ ad).scale(c)


def lift_ja_hom(gamma: LinearMap, j: JordanAlgebra, l: GradedLieAlgebra, s: Sl2Triple) -> Tuple[PairHom, str]:
    """
    The pair homomorphism (eps gamma, gamma) from the pair of J into F_JP(L),
    with eps built from the sl2-triple. Both readings of eps are tried; the
    first that is a pair involution making the lift a homomorphism with
    1_- -> f wins.

    Raises:
        NeitherForm: if no reading works
    """
    pair, one = algebra_to_pair(j)
    target = forget_to_pair(l)
    f_minus = l.restrict(-1, s.f)
    for name, on_minus, on_plus in JA_INVOLUTION_READINGS:
        eps_minus = restriction(l, _ad_squared(l, s.e, on_minus), -1, 1)
        eps_plus = restriction(l, _ad_squared(l, s.f, on_plus), 1, -1)
        if not check_involution(target, PairHom(target, opposite(target), eps_minus, eps_plus)).passed:
            continue
        candidate = _pair_hom(pair, target, eps_plus.matrix @ gamma.matrix, gamma.matrix)
        if candidate.minus(one) != f_minus:
            continue
        if check_hom("pair", candidate, pair, target).passed:
            logger.debug(f"Jordan algebra lift uses the {name} involution", extra={"structure": j.name})
            return candidate, name
    raise NeitherForm("no reading of the sl2 involution lifts the algebra homomorphism")


def extend_ja_hom(gamma: LinearMap, j: JordanAlgebra, l: GradedLieAlgebra, s: Sl2Triple) -> GradedHom:
    """
    The A1-graded homomorphism (uTKK(J), s-hat) -> (L, s) extending the
    unital algebra homomorphism gamma: J -> F_JA(L, s).
    """
    require_certified(check_hom("algebra", gamma, j, forget_to_ja(l, s)))
    lifted, _ = lift_ja_hom(gamma, j, l, s)
    hom = extend_pair_hom(lifted, l)
    s_hat = utkk_sl2(j)
    for label, source, wanted in zip("hef", s_hat.as_tuple(), s.as_tuple()):
        if hom(source) != tuple(wanted):
            raise AxiomViolation(record(Violation("a1_graded_hom", "extension does not preserve the sl2-triple", (label,))))
    return hom

"""
End-to-end pipelines: the Jordan pair / triple / algebra equivalences and
the recognition of 0-perfect centrally 0-closed algebras.

Each pipeline returns a list of check results; nothing is assumed that is
not re-verified on the instance.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from certificates import Certificate, CheckResult, Violation, record
from errors import FeasibilityError, NotA1, PreconditionError, SpanMismatch, TkkError
from freemod import LinearMap
from homextend.chains import delta_squared_is_zero, h2_graded, h2_ungraded
from homextend.extend import extend_ja_hom, extend_jts_hom, extend_pair_hom, lift_ja_hom
from homextend.extensions import (
    Obstruction,
    central_extension,
    cocycle_from_witness,
    split_central_zero_extension,
    twisted_extension,
    verify_universal,
)
from jordan import JordanAlgebra, JordanPair, JordanTriple, PairHom, algebra_to_pair, algebra_to_triple, double_jts
from liegrad import (
    AntiGradedInvolution,
    GradedHom,
    GradedLieAlgebra,
    Sl2Triple,
    check_graded_lie,
    check_involution,
    forget_to_ja,
    forget_to_jts,
    forget_to_pair,
    grading_from_sl2,
    is_zero_perfect,
)
from observability.logging_config import get_logger
from observability.tracing import trace_operation
from tkkcore import (
    check_central_zero_extension,
    check_omega_stable,
    symm_skew_split,
    utkk,
    utkk_algebra_shortcut,
    utkk_involution,
    utkk_sl2,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class Iso:
    hom: GradedHom


@dataclass(frozen=True)
class Failure:
    reasons: Tuple[str, ...]
    witness: Optional[str] = None
    hom: Optional[GradedHom] = None


def roundtrip_iso(l: GradedLieAlgebra) -> Union[Iso, Failure]:
    """
    upsilon-hat: uTKK(F_JP L) -> L, the extension of the identity of F_JP(L).

    It is bijective exactly when L is 0-perfect with H_2^gr(L) = 0; both
    sides of that equivalence are computed and compared.
    """
    if not l.is_three_graded():
        raise PreconditionError("roundtrip_iso needs a 3-graded algebra")
    pair = forget_to_pair(l)
    return _roundtrip_outcome(l, extend_pair_hom(PairHom.identity(pair), l))


def involutive_roundtrip_iso(l: GradedLieAlgebra, eps: AntiGradedInvolution) -> Union[Iso, Failure]:
    """
    The extension (uTKK(F_JTS(L, eps)), kappa-hat) -> (L, eps) of the identity
    of F_JTS(L, eps); bijective under the same condition as roundtrip_iso.
    """
    if not l.is_three_graded():
        raise PreconditionError("involutive_roundtrip_iso needs a 3-graded algebra")
    t = forget_to_jts(l, eps)
    return _roundtrip_outcome(l, extend_jts_hom(LinearMap.identity(t.module), t, l, eps))


def _roundtrip_outcome(l: GradedLieAlgebra, hom: GradedHom) -> Union[Iso, Failure]:
    zero_perfect = is_zero_perfect(l)
    h2 = h2_graded(l)
    bijective = hom.is_bijective()
    if bijective != (zero_perfect and h2.dimension == 0):
        raise AssertionError(
            f"roundtrip bijective={bijective} but 0-perfect={zero_perfect}, dim H2_gr={h2.dimension}"
        )
    if bijective:
        return Iso(hom)
    reasons = []
    if not zero_perfect:
        reasons.append("not 0-perfect")
    witness = None
    if h2.dimension:
        reasons.append("H2_gr != 0")
        witness = h2.describe(h2.witnesses[0], l.field)
    return Failure(tuple(reasons), witness, hom)


def _as_check(name: str, outcome: Union[Iso, Failure]) -> CheckResult:
    if isinstance(outcome, Iso):
        return record(Certificate(name))
    witness = (outcome.witness,) if outcome.witness else None
    return record(Violation(name, "; ".join(outcome.reasons), witness))


def _guard(name: str, fn, *args) -> CheckResult:
    """Run a step that raises on failure and turn the outcome into a check result."""
    try:
        details = fn(*args)
    except TkkError as exc:
        return record(Violation(name, str(exc)))
    return record(Certificate(name, details if isinstance(details, dict) else {}))


@dataclass
class PipelineResult:
    checks: List[CheckResult] = field(default_factory=list)
    dimensions: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result


# ============================================================================
# THEOREM A: Jordan pairs <-> 0-perfect centrally 0-closed 3-graded algebras
# ============================================================================

@trace_operation("theorem_a_pair")
def theorem_a_pair(p: JordanPair) -> PipelineResult:
    out = PipelineResult()
    u = utkk(p)
    out.dimensions.update({
        "ins": u.ins.dim,
        "brackets": u.bracket_space_dim,
        "relations": u.relation_dim,
        "kernel_upsilon": len(u.kernel_upsilon()),
        "utkk": u.dim,
        "tkk": u.tkk.dim,
    })
    out.add(check_central_zero_extension(u.upsilon))
    h2 = h2_graded(u.lie)
    out.dimensions["h2_graded"] = h2.dimension
    if h2.dimension:
        out.add(record(Violation("h2_graded_vanishes", "H2_gr(uTKK) != 0", (h2.describe(h2.witnesses[0], u.field),))))
    else:
        out.add(record(Certificate("h2_graded_vanishes")))
    out.add(_as_check("roundtrip_iso", roundtrip_iso(u.lie)))
    out.add(verify_universal(central_extension(u.upsilon)).as_check())
    return out


@trace_operation("theorem_a_lie")
def theorem_a_lie(l: GradedLieAlgebra) -> PipelineResult:
    """The recognition half: L ~ uTKK(F_JP L) iff L is 0-perfect and centrally 0-closed."""
    out = PipelineResult()
    out.add(check_graded_lie(l))
    out.dimensions["dims"] = {str(d): n for d, n in l.component_dims.items()}
    h2 = h2_graded(l)
    out.dimensions["h2_graded"] = h2.dimension
    outcome = roundtrip_iso(l)
    out.add(_as_check("roundtrip_iso", outcome))
    if isinstance(outcome, Failure) and h2.dimension and is_zero_perfect(l):
        out.add(non_split_witness(l))
    return out


def non_split_witness(l: GradedLieAlgebra) -> CheckResult:
    """The extension twisted by a nonzero class of H_2^gr must not split."""
    name = "non_split_witness"
    h2 = h2_graded(l)
    cocycle = cocycle_from_witness(l, h2.witnesses[0])
    ext = twisted_extension(l, cocycle)
    outcome = split_central_zero_extension(ext)
    if isinstance(outcome, Obstruction):
        return record(Certificate(name, {"cycle": outcome.describe(l.field)}))
    return record(Violation(name, "twisted extension splits"))


# ============================================================================
# THEOREM B: triple systems <-> involutary algebras
# ============================================================================

@trace_operation("theorem_b")
def theorem_b(t: JordanTriple) -> PipelineResult:
    out = PipelineResult()
    pair, _ = double_jts(t)
    u = utkk(pair)
    out.dimensions.update({"utkk": u.dim, "brackets": u.bracket_space_dim})
    out.add(_guard("utkk_involution", utkk_involution, t))
    if not out.passed:
        return out
    kappa = utkk_involution(t)
    recovered = forget_to_jts(u.lie, kappa)
    if recovered == t:
        out.add(record(Certificate("jts_roundtrip")))
    else:
        out.add(record(Violation("jts_roundtrip", "F_JTS(uTKK(T), kappa) differs from T")))
        return out

    def identity_extends():
        hom = extend_jts_hom(LinearMap.identity(t.module), t, u.lie, kappa)
        if not hom.is_bijective() or hom.matrix != GradedHom.identity(u.lie).matrix:
            raise PreconditionError("extension of the identity is not the identity")

    out.add(_guard("extend_identity", identity_extends))
    return out


@trace_operation("theorem_b_lie")
def theorem_b_lie(l: GradedLieAlgebra) -> PipelineResult:
    """
    The involutary recognition half: (L, eps) ~ (uTKK(F_JTS(L, eps)), kappa-hat)
    iff L is 0-perfect with H_2^gr(L) = 0. eps is the involution L carries.
    """
    if l.involution is None:
        raise PreconditionError(f"algebra {l.name or '<unnamed>'} carries no anti-graded involution")
    out = PipelineResult()
    out.add(check_graded_lie(l))
    out.add(check_involution(l, l.involution))
    if not out.passed:
        return out
    out.dimensions["dims"] = {str(d): n for d, n in l.component_dims.items()}
    h2 = h2_graded(l)
    out.dimensions["h2_graded"] = h2.dimension
    outcome = involutive_roundtrip_iso(l, AntiGradedInvolution(l, l.involution))
    out.add(_as_check("involutive_roundtrip_iso", outcome))
    if isinstance(outcome, Failure) and h2.dimension and is_zero_perfect(l):
        out.add(non_split_witness(l))
    return out


# ============================================================================
# THEOREM C: unital algebras <-> A1-graded algebras
# ============================================================================

@trace_operation("theorem_c")
def theorem_c(j: JordanAlgebra) -> PipelineResult:
    out = PipelineResult()
    pair, _ = algebra_to_pair(j)
    u = utkk(pair)
    out.dimensions.update({"utkk": u.dim, "brackets": u.bracket_space_dim})
    sl2_check = out.add(_guard("utkk_sl2", utkk_sl2, j))
    if not sl2_check.passed:
        return out
    s = utkk_sl2(j)
    out.dimensions["sl2_form"] = u.sl2_form
    recovered = forget_to_ja(u.lie, s)
    if recovered == j:
        out.add(record(Certificate("ja_roundtrip")))
    else:
        out.add(record(Violation("ja_roundtrip", "F_JA(uTKK(J), s) differs from J")))
        return out

    identity = LinearMap.identity(j.module)

    def identity_extends():
        _, reading = lift_ja_hom(identity, j, u.lie, s)
        out.dimensions["involution_reading"] = reading
        hom = extend_ja_hom(identity, j, u.lie, s)
        if hom.matrix != GradedHom.identity(u.lie).matrix:
            raise PreconditionError("extension of the identity is not the identity")

    out.add(_guard("extend_identity", identity_extends))
    out.add(_ungraded_h2_check(u.lie, out))
    return out


def _ungraded_h2_check(l: GradedLieAlgebra, out: PipelineResult) -> CheckResult:
    name = "h2_ungraded_vanishes"
    try:
        dimension = h2_ungraded(l)
    except FeasibilityError as exc:
        out.dimensions["h2_ungraded"] = None
        return record(Certificate(name, {"skipped": str(exc)}))
    out.dimensions["h2_ungraded"] = dimension
    if dimension:
        return record(Violation(name, f"H2(L) has dimension {dimension}"))
    return record(Certificate(name))


@trace_operation("theorem_c_lie")
def theorem_c_lie(l: GradedLieAlgebra, s: Sl2Triple) -> PipelineResult:
    """An A1-graded algebra is recognised through its induced grading."""
    out = PipelineResult()
    try:
        graded = grading_from_sl2(l, s)
    except NotA1 as exc:
        out.add(record(Violation("a1_grading", exc.reason, (exc.detail,) if exc.detail else None)))
        return out
    out.add(record(Certificate("a1_grading", {"dims": graded.component_dims})))
    out.dimensions["dims"] = {str(d): n for d, n in graded.component_dims.items()}
    out.add(_ungraded_h2_check(l, out))
    out.dimensions["h2_graded"] = h2_graded(graded).dimension
    out.add(_as_check("roundtrip_iso", roundtrip_iso(graded)))
    # the triple in the coordinates of the eigenbasis
    induced = Sl2Triple.from_algebra(graded)

    def identity_extends():
        j = forget_to_ja(graded, induced)
        hom = extend_ja_hom(LinearMap.identity(j.module), j, graded, induced)
        if not hom.is_bijective():
            raise PreconditionError("extension of the identity of F_JA(L, s) is not bijective")
        return {"dim": j.dim}

    out.add(_guard("extend_identity", identity_extends))
    return out


def homology_substrate(l: GradedLieAlgebra) -> PipelineResult:
    """d_1 d_2 = 0 on the graded and, where feasible, ungraded chains."""
    out = PipelineResult()
    out.add(delta_squared_is_zero(l, graded=True))
    try:
        out.add(delta_squared_is_zero(l, graded=False))
    except FeasibilityError as exc:
        out.dimensions["ungraded"] = str(exc)
    return out


def theorem_a(structure: Union[JordanPair, GradedLieAlgebra]) -> PipelineResult:
    if isinstance(structure, JordanPair):
        return theorem_a_pair(structure)
    return theorem_a_lie(structure)


# ============================================================================
# <J, J> FROM THE MULTIPLICATION
# ============================================================================

def lemma_aspan(j: JordanAlgebra) -> PipelineResult:
    """The cubic span a^2 (x) a - 1 (x) a^3 equals the relation span of the pair of J."""
    out = PipelineResult()

    def shortcut():
        u = utkk_algebra_shortcut(j)
        out.dimensions.update({"relations": u.relation_dim, "brackets": u.bracket_space_dim})
        if u.dim != utkk(algebra_to_pair(j)[0]).dim:
            raise SpanMismatch("shortcut and generic constructions differ in dimension")

    out.add(_guard("cubic_span", shortcut))
    return out


def remark_split(j: JordanAlgebra) -> PipelineResult:
    """A splits into its symmetric and skew parts, each spanned by its quoted generators."""
    out = PipelineResult()
    try:
        split = symm_skew_split(j)
    except SpanMismatch as exc:
        out.add(record(Violation("symmetric_skew_split", str(exc), exc.witness)))
        return out
    out.dimensions.update({
        "relations": split.relation_dim,
        "symmetric": len(split.symmetric),
        "skew": len(split.skew),
        "symmetric_reading": split.symmetric_reading,
    })
    out.add(record(Certificate("symmetric_skew_split", {"reading": split.symmetric_reading})))
    out.add(check_omega_stable(algebra_to_triple(j)))
    return out

"""
Command implementations. Each takes a loaded input and returns a Report;
exit codes and printing are left to the typer layer in cli.main.
"""
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional

from certificates import Certificate, CheckResult, Violation, record
from cli.catalog import catalog, catalog_names
from cli.fileformat import AlgebraFile, Structure, digest, emit, from_structure, parse, to_structure
from cli.reports import Report
from errors import FieldMismatchError, KindMismatch, SpanMismatch
from exactla import Field, Matrix
from freemod import LinearMap
from homextend import (
    Obstruction,
    PipelineResult,
    canonical_section,
    central_extension,
    central_quotient,
    cocycle_from_witness,
    delta_squared_is_zero,
    extend_ja_hom,
    extend_jts_hom,
    extend_pair_hom,
    h2_cohomology_graded,
    h2_graded,
    h2_ungraded,
    lemma_aspan,
    remark_split,
    roundtrip_iso,
    split_central_zero_extension,
    splittings_agree,
    theorem_a,
    theorem_b,
    theorem_b_lie,
    theorem_c,
    theorem_c_lie,
    trivial_extension,
    twisted_extension,
    verify_universal,
)
from homextend.theorems import Iso
from jordan import JordanAlgebra, JordanPair, JordanTriple, PairHom, algebra_to_pair, algebra_to_triple, check_axioms, double_jts
from liegrad import GradedHom, GradedLieAlgebra, Sl2Triple, check_graded_lie, check_involution, check_sl2, forget_to_pair
from observability.logging_config import get_context_logger
from observability.metrics import timing_snapshot, track_construction
from tkkcore import (
    check_central_zero_extension,
    check_relation_oracle,
    check_right_multiplication_part,
    check_tkk,
    inner_structure_algebra,
    ins_decomposition_jts,
    tkk,
    utkk,
    utkk_involution,
    utkk_sl2,
)


class Construction(str, Enum):
    tkk = "tkk"
    utkk = "utkk"


class HomologyKind(str, Enum):
    h2gr = "h2gr"
    h2 = "h2"
    h2coh = "h2coh"


class Claim(str, Enum):
    theorem_a = "theorem-a"
    theorem_b = "theorem-b"
    theorem_c = "theorem-c"
    lemma_aspan = "lemma-aspan"
    remark_split = "remark-split"
    universality = "universality"


@dataclass(frozen=True)
class LoadedInput:
    target: str
    source: AlgebraFile
    structure: Structure

    @property
    def kind(self) -> str:
        return self.source.kind


def load_input(target: str, f: Optional[Field] = None) -> LoadedInput:
    """
    A structure file when `target` names an existing file, a catalog entry otherwise.

    Raises:
        ParseError, UnknownName: for unreadable input
        FieldMismatchError: if `f` disagrees with the field declared in the file
    """
    path = Path(target)
    if path.is_file():
        source = parse(path.read_bytes())
        if f is not None and source.scalar_field != f:
            raise FieldMismatchError(f"{target} is over {source.field}, not {f.descriptor}")
    else:
        source = catalog(target) if f is None else catalog(target, f)
    return LoadedInput(target, source, to_structure(source))


def _report(command: str, inp: LoadedInput, seed: int) -> Report:
    return Report(command=command, input_digest=digest(inp.source), seed=seed)


def _finish(report: Report, timing: bool) -> Report:
    if timing:
        report.timing = timing_snapshot()
    return report


def _pair_of(command: str, inp: LoadedInput) -> JordanPair:
    s = inp.structure
    if isinstance(s, JordanPair):
        return s
    if isinstance(s, JordanTriple):
        return double_jts(s)[0]
    if isinstance(s, JordanAlgebra):
        return algebra_to_pair(s)[0]
    raise KindMismatch(command, inp.kind)


def _lie_of(command: str, inp: LoadedInput) -> GradedLieAlgebra:
    if not isinstance(inp.structure, GradedLieAlgebra):
        raise KindMismatch(command, inp.kind)
    return inp.structure


def _merge(report: Report, result: PipelineResult) -> Report:
    report.add(result.checks)
    report.dimensions.update(result.dimensions)
    return report


# ============================================================================
# check
# ============================================================================

def run_check(inp: LoadedInput, seed: int, timing: bool = False) -> Report:
    report = _report(f"check {inp.target}", inp, seed)
    log = get_context_logger(__name__, structure=inp.target, command="check")
    s = inp.structure
    if isinstance(s, GradedLieAlgebra):
        report.dimensions["dims"] = {str(d): n for d, n in s.component_dims.items()}
        results: List[CheckResult] = [check_graded_lie(s)]
        if s.involution is not None:
            results.append(check_involution(s, s.involution))
        if s.sl2_triple is not None:
            results.append(check_sl2(s, Sl2Triple.from_algebra(s)))
        return _finish(report.add(results), timing)

    axioms = check_axioms(s, seed)
    report.add([axioms])
    if not axioms.passed:
        return _finish(report, timing)
    pair = _pair_of("check", inp)
    ins = inner_structure_algebra(pair)
    report.dimensions.update({"P-": pair.dims[0], "P+": pair.dims[1], "ins": ins.dim})
    results = [check_relation_oracle(pair, seed)]
    triple = s if isinstance(s, JordanTriple) else algebra_to_triple(s) if isinstance(s, JordanAlgebra) else None
    if triple is not None:
        try:
            minus_part, plus_part = ins_decomposition_jts(triple)
            report.dimensions.update({"ins_-1": len(minus_part), "ins_1": len(plus_part)})
            results.append(record(Certificate("ins_eigenspace_split")))
        except SpanMismatch as exc:
            results.append(record(Violation("ins_eigenspace_split", str(exc), exc.witness)))
    if isinstance(s, JordanAlgebra):
        results.append(check_right_multiplication_part(s))
    log.info("checked structure")
    return _finish(report.add(results), timing)


# ============================================================================
# build
# ============================================================================

def run_build(inp: LoadedInput, which: Construction, seed: int, output: Optional[Path] = None, timing: bool = False) -> Report:
    report = _report(f"build {which.value} {inp.target}", inp, seed)
    pair = _pair_of(f"build {which.value}", inp)
    if which is Construction.tkk:
        built = tkk(pair)
        lie = built.lie
        report.dimensions.update({"P-": pair.dims[0], "ins": built.ins.dim, "P+": pair.dims[1], "total": built.dim})
        report.add([check_tkk(built)])
    else:
        u = utkk(pair)
        lie = u.lie
        report.dimensions.update({
            "P-": pair.dims[0],
            "brackets": u.bracket_space_dim,
            "P+": pair.dims[1],
            "total": u.dim,
            "relations": u.relation_dim,
            "kernel_upsilon": len(u.kernel_upsilon()),
        })
        report.add([check_graded_lie(lie), check_central_zero_extension(u.upsilon)])
    track_construction(which.value, lie.dim)
    if output is not None:
        output.write_text(emit(from_structure(lie)) + "\n", encoding="utf-8")
    return _finish(report, timing)


# ============================================================================
# homology
# ============================================================================

def run_homology(inp: LoadedInput, which: HomologyKind, seed: int, m: int = 1, timing: bool = False) -> Report:
    command = f"homology {which.value} {inp.target}" + (f" {m}" if which is HomologyKind.h2coh else "")
    report = _report(command, inp, seed)
    l = _lie_of(f"homology {which.value}", inp)
    if which is HomologyKind.h2:
        report.dimensions["h2"] = h2_ungraded(l)
        report.add([delta_squared_is_zero(l, graded=False)])
    elif which is HomologyKind.h2coh:
        report.dimensions[f"h2coh_{m}"] = h2_cohomology_graded(l, m)
        report.add([delta_squared_is_zero(l, graded=True)])
    else:
        h2 = h2_graded(l)
        report.dimensions["h2_graded"] = h2.dimension
        report.dimensions["witnesses"] = [h2.describe(w, l.field) for w in h2.witnesses]
        report.add([delta_squared_is_zero(l, graded=True)])
    return _finish(report, timing)


# ============================================================================
# verify
# ============================================================================

def run_verify(inp: LoadedInput, claim: Claim, seed: int, timing: bool = False) -> Report:
    report = _report(f"verify {claim.value} {inp.target}", inp, seed)
    s = inp.structure
    command = f"verify {claim.value}"
    if claim is Claim.theorem_a:
        subject = s if isinstance(s, GradedLieAlgebra) else _pair_of(command, inp)
        return _finish(_merge(report, theorem_a(subject)), timing)
    if claim is Claim.theorem_b:
        if isinstance(s, JordanTriple):
            return _finish(_merge(report, theorem_b(s)), timing)
        if isinstance(s, JordanAlgebra):
            return _finish(_merge(report, theorem_b(algebra_to_triple(s))), timing)
        if isinstance(s, GradedLieAlgebra) and s.involution is not None:
            return _finish(_merge(report, theorem_b_lie(s)), timing)
        raise KindMismatch(command, inp.kind)
    if claim is Claim.theorem_c:
        if isinstance(s, JordanAlgebra):
            return _finish(_merge(report, theorem_c(s)), timing)
        if isinstance(s, GradedLieAlgebra) and s.sl2_triple is not None:
            return _finish(_merge(report, theorem_c_lie(s, Sl2Triple.from_algebra(s))), timing)
        raise KindMismatch(command, inp.kind)
    if claim in (Claim.lemma_aspan, Claim.remark_split):
        if not isinstance(s, JordanAlgebra):
            raise KindMismatch(command, inp.kind)
        pipeline = lemma_aspan if claim is Claim.lemma_aspan else remark_split
        return _finish(_merge(report, pipeline(s)), timing)

    if isinstance(s, GradedLieAlgebra):
        ext = central_quotient(s)
    else:
        ext = central_extension(utkk(_pair_of(command, inp)).upsilon)
    outcome = verify_universal(ext)
    report.dimensions.update({"total": ext.total.dim, "base": ext.base.dim, "kernel": len(ext.kernel_basis)})
    report.add([outcome.as_check()])
    return _finish(report, timing)


# ============================================================================
# extend-hom
# ============================================================================

def _identity_into(pair: JordanPair, target: JordanPair) -> PairHom:
    f = pair.field
    dm, dp = pair.dims
    return PairHom(
        pair,
        target,
        LinearMap(pair.minus, target.minus, Matrix.identity(f, dm)),
        LinearMap(pair.plus, target.plus, Matrix.identity(f, dp)),
    )


def run_extend_hom(inp: LoadedInput, seed: int, timing: bool = False) -> Report:
    """Extend identities: into TKK(P) (recovering upsilon) and along the triple or algebra structure."""
    report = _report(f"extend-hom {inp.target}", inp, seed)
    s = inp.structure
    if isinstance(s, GradedLieAlgebra):
        outcome = roundtrip_iso(s)
        name = "roundtrip_iso"
        report.add([record(Certificate(name)) if isinstance(outcome, Iso) else record(Violation(name, "; ".join(outcome.reasons)))])
        return _finish(report, timing)

    pair = _pair_of("extend-hom", inp)
    t = tkk(pair)
    u = utkk(pair)
    hom = extend_pair_hom(_identity_into(pair, forget_to_pair(t.lie)), t.lie)
    report.dimensions.update({"source": u.dim, "target": t.dim, "rank": hom.rank()})
    name = "extension_recovers_upsilon"
    if hom.matrix == u.upsilon.matrix:
        report.add([record(Certificate(name))])
    else:
        report.add([record(Violation(name, "extended identity differs from upsilon"))])

    identity = GradedHom.identity(u.lie).matrix
    if isinstance(s, JordanTriple):
        kappa = utkk_involution(s)
        same = extend_jts_hom(LinearMap.identity(s.module), s, u.lie, kappa).matrix == identity
        report.add([record(Certificate("triple_extension_is_identity") if same else Violation("triple_extension_is_identity", "not the identity"))])
    elif isinstance(s, JordanAlgebra):
        same = extend_ja_hom(LinearMap.identity(s.module), s, u.lie, utkk_sl2(s)).matrix == identity
        report.add([record(Certificate("algebra_extension_is_identity") if same else Violation("algebra_extension_is_identity", "not the identity"))])
    return _finish(report, timing)


# ============================================================================
# split-extension
# ============================================================================

def _shifted_section(ext, eta: Matrix) -> Optional[Matrix]:
    """eta plus a kernel element on the first degree-0 basis vector, when both exist."""
    zero = ext.base.degree_indices(0)
    kernel = ext.kernel_basis
    if not zero or not kernel:
        return None
    entries = {(r, c): v for r, row in eta.sparse_rows().items() for c, v in row.items()}
    col = zero[0]
    for r, v in enumerate(kernel[0]):
        if v:
            entries[(r, col)] = entries.get((r, col), ext.base.field.zero) + v
    return Matrix.from_entries(ext.base.field, eta.shape, entries)


def run_split_extension(inp: LoadedInput, seed: int, timing: bool = False) -> Report:
    report = _report(f"split-extension {inp.target}", inp, seed)
    l = _lie_of("split-extension", inp)
    ext = trivial_extension(l)
    psi = split_central_zero_extension(ext)
    results: List[CheckResult] = []
    if isinstance(psi, Obstruction):
        results.append(record(Violation("trivial_extension_splits", "obstruction on a trivial extension", (psi.describe(l.field),))))
    else:
        results.append(record(Certificate("trivial_extension_splits")))
        shifted = _shifted_section(ext, canonical_section(ext))
        if shifted is not None:
            other = split_central_zero_extension(ext, section=shifted)
            if isinstance(other, Obstruction):
                results.append(record(Violation("splitting_unique", "second section gives an obstruction")))
            else:
                results.append(splittings_agree(ext, psi, other))

    h2 = h2_graded(l)
    report.dimensions["h2_graded"] = h2.dimension
    name = "centrally_zero_closed"
    if h2.dimension:
        twisted = twisted_extension(l, cocycle_from_witness(l, h2.witnesses[0]))
        outcome = split_central_zero_extension(twisted)
        if isinstance(outcome, Obstruction):
            results.append(record(Violation(name, "twisted extension does not split", (outcome.describe(l.field),))))
        else:
            raise AssertionError("an extension twisted by a nonzero class split")
    else:
        results.append(record(Certificate(name)))
    return _finish(report.add(results), timing)


# ============================================================================
# catalog
# ============================================================================

def run_catalog_list() -> List[str]:
    return catalog_names()


def run_catalog_emit(name: str, f: Optional[Field] = None) -> str:
    source = catalog(name) if f is None else catalog(name, f)
    return emit(source)

"""
Structure-constant files.

A file is one JSON object validated by `AlgebraFile`. Scalars are strings
("3", "-1/2"), entries are index tuples followed by the coefficient:

    jordan_algebra   product     [i, j, l, "c"]      e_i * e_j = ... + c e_l
    jordan_triple    product     [i, j, k, l, "c"]   {e_i, e_j, e_k} = ... + c e_l
    jordan_pair      t_minus     [i, j, k, l, "c"]   i, k, l in P-, j in P+
                     t_plus      [i, j, k, l, "c"]   i, k, l in P+, j in P-
    lie_graded       product     [i, j, l, "c"]      [e_i, e_j] = ... + c e_l

Lie files list only i < j; antisymmetry fills in the rest.
"""
import hashlib
import json
from typing import Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from errors import ParseError
from exactla import Field, Matrix, Scalar
from freemod import BilinearMap, FreeModule, TrilinearMap, table_from_entries
from jordan import JordanAlgebra, JordanPair, JordanTriple
from liegrad import GradedLieAlgebra, from_brackets

Kind = Literal["jordan_algebra", "jordan_triple", "jordan_pair", "lie_graded"]
Entry = List[Union[int, str]]
Structure = Union[JordanAlgebra, JordanTriple, JordanPair, GradedLieAlgebra]

ARITY = {"jordan_algebra": 2, "jordan_triple": 3, "jordan_pair": 3, "lie_graded": 2}


class AlgebraFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Kind
    name: str = ""
    field: str = "rational"
    basis: List[str] = []
    minus: List[str] = []
    plus: List[str] = []
    degrees: List[int] = []
    product: List[Entry] = []
    t_minus: List[Entry] = []
    t_plus: List[Entry] = []
    identity: Optional[List[str]] = None
    involution: Optional[List[List[str]]] = None
    sl2_triple: Optional[List[List[str]]] = None

    @field_validator("field")
    @classmethod
    def _known_field(cls, value: str) -> str:
        return Field.from_descriptor(value).descriptor

    @property
    def scalar_field(self) -> Field:
        return Field.from_descriptor(self.field)


# ============================================================================
# PARSING
# ============================================================================

def parse(data: Union[bytes, str]) -> AlgebraFile:
    """
    Decode and validate a structure file.

    Raises:
        ParseError: carrying the line (JSON syntax) or the field path
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    try:
        parsed = AlgebraFile.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = ".".join(str(part) for part in first["loc"])
        raise ParseError(first["msg"], field=path or None) from None
    _validate(parsed)
    return parsed


def _scalar(f: Field, text, where: str) -> Scalar:
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {text!r}", field=where)
    try:
        return f.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc), field=where) from None


def _entry_table(f: Field, entries: Sequence[Entry], ranges: Sequence[int], where: str):
    """Entries -> sparse table; `ranges` bounds each index including the output."""
    rows = []
    for n, entry in enumerate(entries):
        spot = f"{where}[{n}]"
        if len(entry) != len(ranges) + 1:
            raise ParseError(f"expected {len(ranges)} indices and a scalar, got {len(entry)} items", field=spot)
        *indices, value = entry
        for idx, bound in zip(indices, ranges):
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise ParseError(f"index {idx!r} is not an integer", field=spot)
            if not 0 <= idx < bound:
                raise ParseError(f"index {idx} out of range 0..{bound - 1}", field=spot)
        rows.append((tuple(indices[:-1]), indices[-1], _scalar(f, value, spot)))
    return table_from_entries(rows)


def _vector(f: Field, values: Sequence[str], dim: int, where: str) -> Tuple[Scalar, ...]:
    if len(values) != dim:
        raise ParseError(f"expected {dim} coordinates, got {len(values)}", field=where)
    return tuple(_scalar(f, v, f"{where}[{k}]") for k, v in enumerate(values))


def _validate(a: AlgebraFile) -> None:
    """Shape checks that need the kind; the structure is built as part of the check."""
    to_structure(a)


# ============================================================================
# FILE <-> STRUCTURE
# ============================================================================

def to_structure(a: AlgebraFile) -> Structure:
    f = a.scalar_field
    if a.kind == "jordan_pair":
        # either component may be empty (e.g. the pair of an algebra with L_1 = 0)
        minus, plus = _module(f, a.minus, "minus"), _module(f, a.plus, "plus")
        dm, dp = minus.dim, plus.dim
        t_minus = _entry_table(f, a.t_minus, (dm, dp, dm, dm), "t_minus")
        t_plus = _entry_table(f, a.t_plus, (dp, dm, dp, dp), "t_plus")
        return JordanPair(
            minus,
            plus,
            TrilinearMap((minus, plus, minus), minus, t_minus),
            TrilinearMap((plus, minus, plus), plus, t_plus),
            name=a.name,
        )

    module = _module(f, a.basis)
    n = module.dim
    if a.kind == "jordan_triple":
        table = _entry_table(f, a.product, (n, n, n, n), "product")
        return JordanTriple(module, TrilinearMap((module, module, module), module, table), name=a.name)
    if a.kind == "jordan_algebra":
        if a.identity is None:
            raise ParseError("a unital algebra needs its identity element", field="identity")
        table = _entry_table(f, a.product, (n, n, n), "product")
        one = _vector(f, a.identity, n, "identity")
        return JordanAlgebra(module, BilinearMap((module, module), module, table), one, name=a.name)

    if len(a.degrees) != n:
        raise ParseError(f"expected {n} degrees, got {len(a.degrees)}", field="degrees")
    table = _entry_table(f, a.product, (n, n, n), "product")
    for (i, j), _ in table.items():
        if i >= j:
            raise ParseError(f"list brackets with i < j only, got ({i}, {j})", field="product")
    l = from_brackets(f, a.basis, a.degrees, table, name=a.name)
    involution = None
    if a.involution is not None:
        if len(a.involution) != n:
            raise ParseError(f"involution needs {n} rows", field="involution")
        involution = Matrix.from_rows(f, [_vector(f, row, n, f"involution[{r}]") for r, row in enumerate(a.involution)], n)
    triple = None
    if a.sl2_triple is not None:
        if len(a.sl2_triple) != 3:
            raise ParseError("an sl2-triple lists h, e and f", field="sl2_triple")
        triple = tuple(_vector(f, v, n, f"sl2_triple[{k}]") for k, v in enumerate(a.sl2_triple))
    if involution is not None or triple is not None:
        l = l.with_decorations(involution=involution, sl2_triple=triple)
    return l


def _module(f: Field, labels: Sequence[str], where: str = "basis") -> FreeModule:
    try:
        return FreeModule(f, tuple(labels))
    except ValueError as exc:
        raise ParseError(str(exc), field=where) from None


def _entries(f: Field, table) -> List[Entry]:
    out = []
    for key in sorted(table):
        for l in sorted(table[key]):
            out.append([*key, l, f.format(table[key][l])])
    return out


def _formatted(f: Field, v) -> List[str]:
    return [f.format(c) for c in v]


def from_structure(s: Structure) -> AlgebraFile:
    if isinstance(s, JordanPair):
        f = s.field
        return AlgebraFile(
            kind="jordan_pair",
            name=s.name,
            field=f.descriptor,
            minus=list(s.minus.labels),
            plus=list(s.plus.labels),
            t_minus=_entries(f, s.t_minus.table),
            t_plus=_entries(f, s.t_plus.table),
        )
    f = s.field
    if isinstance(s, JordanTriple):
        return AlgebraFile(
            kind="jordan_triple", name=s.name, field=f.descriptor, basis=list(s.module.labels), product=_entries(f, s.t.table)
        )
    if isinstance(s, JordanAlgebra):
        return AlgebraFile(
            kind="jordan_algebra",
            name=s.name,
            field=f.descriptor,
            basis=list(s.module.labels),
            product=_entries(f, s.mult.table),
            identity=_formatted(f, s.identity),
        )
    upper = {key: image for key, image in s.bracket_map.table.items() if key[0] < key[1]}
    return AlgebraFile(
        kind="lie_graded",
        name=s.name,
        field=f.descriptor,
        basis=list(s.labels),
        degrees=list(s.degrees),
        product=_entries(f, upper),
        involution=[_formatted(f, row) for row in s.involution.entries()] if s.involution is not None else None,
        sl2_triple=[_formatted(f, v) for v in s.sl2_triple] if s.sl2_triple is not None else None,
    )


def emit(a: AlgebraFile) -> str:
    return a.model_dump_json(indent=2, exclude_defaults=True)


def digest(a: AlgebraFile) -> str:
    """SHA-256 of the canonical emitted form."""
    return hashlib.sha256(emit(a).encode("utf-8")).hexdigest()


def with_field(a: AlgebraFile, f: Field) -> AlgebraFile:
    """The same file read over another field; scalars are re-validated."""
    moved = a.model_copy(update={"field": f.descriptor})
    _validate(moved)
    return moved

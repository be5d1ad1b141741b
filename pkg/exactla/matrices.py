"""
Exact matrices over a Field, backed by sparse sympy DomainMatrix.

Semantics are dense (row-major entries); storage is sparse. Vectors are
plain tuples of field elements.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError, FieldMismatchError, NoSolution
from exactla.fields import Field, Scalar

Vector = Tuple[Scalar, ...]


# ============================================================================
# VECTORS
# ============================================================================

def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> Vector:
    entries = [field.zero] * n
    entries[i] = field.one
    return tuple(entries)


def vadd(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot add vectors of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot subtract vectors of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vneg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return not any(v)


def support(v: Vector) -> List[int]:
    return [i for i, a in enumerate(v) if a]


def linear_combination(field: Field, n: int, terms: Iterable[Tuple[Scalar, Vector]]) -> Vector:
    """Sum of c * v over the given terms, all vectors of length n."""
    acc = [field.zero] * n
    for c, v in terms:
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                acc[i] += c * a
    return tuple(acc)


def as_vector(field: Field, values: Iterable) -> Vector:
    return tuple(field(v) for v in values)


# ============================================================================
# MATRICES
# ============================================================================

@dataclass(frozen=True, eq=False)
class Matrix:
    """
    An nrows x ncols matrix over `field`.
    """

    field: Field
    dm: DomainMatrix

    # -- construction --------------------------------------------------------

    @classmethod
    def from_entries(cls, field: Field, shape: Tuple[int, int], entries: Mapping[Tuple[int, int], Scalar]) -> "Matrix":
        rows: Dict[int, Dict[int, Scalar]] = {}
        nrows, ncols = shape
        for (i, j), value in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionMismatchError(f"entry ({i},{j}) outside shape {shape}")
            value = field(value)
            if value:
                rows.setdefault(i, {})[j] = value
        return cls(field, DomainMatrix(rows, (nrows, ncols), field.domain))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int = None) -> "Matrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatchError(f"row {i} has length {len(row)}, expected {ncols}")
            for j, value in enumerate(row):
                entries[(i, j)] = value
        return cls.from_entries(field, (len(rows), ncols), entries)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int = None) -> "Matrix":
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        entries = {}
        for j, column in enumerate(columns):
            if len(column) != nrows:
                raise DimensionMismatchError(f"column {j} has length {len(column)}, expected {nrows}")
            for i, value in enumerate(column):
                entries[(i, j)] = value
        return cls.from_entries(field, (nrows, len(columns)), entries)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, DomainMatrix({}, (nrows, ncols), field.domain))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, DomainMatrix({i: {i: field.one} for i in range(n)}, (n, n), field.domain))

    # -- access --------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.dm.shape

    @property
    def nrows(self) -> int:
        return self.dm.shape[0]

    @property
    def ncols(self) -> int:
        return self.dm.shape[1]

    def sparse_rows(self) -> Dict[int, Dict[int, Scalar]]:
        """Nonzero entries as {row: {col: value}}."""
        return {i: dict(row) for i, row in self.dm.to_sdm().items() if row}

    def entries(self) -> Tuple[Vector, ...]:
        zero = self.field.zero
        dense = [[zero] * self.ncols for _ in range(self.nrows)]
        for i, row in self.sparse_rows().items():
            for j, value in row.items():
                dense[i][j] = value
        return tuple(tuple(row) for row in dense)

    def row(self, i: int) -> Vector:
        values = self.sparse_rows().get(i, {})
        return tuple(values.get(j, self.field.zero) for j in range(self.ncols))

    def column(self, j: int) -> Vector:
        zero = self.field.zero
        out = [zero] * self.nrows
        for i, row in self.sparse_rows().items():
            if j in row:
                out[i] = row[j]
        return tuple(out)

    def columns(self) -> List[Vector]:
        dense = self.entries()
        return [tuple(dense[i][j] for i in range(self.nrows)) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return not self.sparse_rows()

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.field, self.dm.to_sparse().matmul(other.dm.to_sparse()))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, self.dm.to_sparse() + other.dm.to_sparse())

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.field, self.dm.to_sparse() - other.dm.to_sparse())

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, -self.dm.to_sparse())

    def scale(self, c: Scalar) -> "Matrix":
        c = self.field(c)
        entries = {
            (i, j): c * value
            for i, row in self.sparse_rows().items()
            for j, value in row.items()
        }
        return Matrix.from_entries(self.field, self.shape, entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.dm.to_sparse().transpose())

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(v)} for matrix {self.shape}")
        zero = self.field.zero
        out = [zero] * self.nrows
        for i, row in self.sparse_rows().items():
            acc = zero
            for j, value in row.items():
                if v[j]:
                    acc += value * v[j]
            out[i] = acc
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.sparse_rows() == other.sparse_rows()
        )

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(self.field.format(x) for x in row) + "]" for row in self.entries()]
        return f"Matrix({self.field}, {self.shape}, [{', '.join(rows)}])"


def hstack(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    nrows = blocks[0].nrows if blocks else 0
    entries = {}
    offset = 0
    for block in blocks:
        if block.nrows != nrows:
            raise DimensionMismatchError("hstack blocks need equal row counts")
        for i, row in block.sparse_rows().items():
            for j, value in row.items():
                entries[(i, offset + j)] = value
        offset += block.ncols
    return Matrix.from_entries(field, (nrows, offset), entries)


def vstack(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    ncols = blocks[0].ncols if blocks else 0
    entries = {}
    offset = 0
    for block in blocks:
        if block.ncols != ncols:
            raise DimensionMismatchError("vstack blocks need equal column counts")
        for i, row in block.sparse_rows().items():
            for j, value in row.items():
                entries[(offset + i, j)] = value
        offset += block.nrows
    return Matrix.from_entries(field, (offset, ncols), entries)


# ============================================================================
# ROW REDUCTION
# ============================================================================

def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...], int]:
    """
    Reduced row echelon form, pivot columns and rank.

    Pivots are chosen leftmost-first, so the result is the unique RREF.
    """
    if m.nrows == 0 or m.ncols == 0:
        return m, (), 0
    reduced, pivots = m.dm.to_sparse().rref()
    pivots = tuple(int(p) for p in pivots)
    return Matrix(m.field, reduced.to_sparse()), pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def inverse(m: Matrix) -> Matrix:
    """
    Raises:
        NoSolution: if m is singular
    """
    if m.nrows != m.ncols:
        raise DimensionMismatchError(f"cannot invert a {m.shape} matrix")
    if m.nrows == 0:
        return m
    if rank(m) != m.nrows:
        raise NoSolution(None, "matrix is singular")
    return Matrix(m.field, m.dm.to_dense().inv().to_sparse())


def kernel_basis(m: Matrix) -> List[Vector]:
    """
    Basis of the null space: one vector per free column, in increasing
    column order, with that free variable set to 1 and the others to 0.
    """
    reduced, pivots, _ = rref(m)
    rows = reduced.sparse_rows()
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [m.field.zero] * m.ncols
        v[free] = m.field.one
        for r, p in enumerate(pivots):
            value = rows.get(r, {}).get(free)
            if value:
                v[p] = -value
        basis.append(tuple(v))
    return basis


def solve(a: Matrix, b: Vector) -> Vector:
    """
    Canonical solution of a.x = b (free variables set to zero).

    Raises:
        NoSolution: if b is not in the column space of a
    """
    if len(b) != a.nrows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for matrix {a.shape}")
    augmented = hstack(a.field, [a, Matrix.from_columns(a.field, [b], a.nrows)])
    reduced, pivots, _ = rref(augmented)
    if a.ncols in pivots:
        raise NoSolution(b)
    rows = reduced.sparse_rows()
    x = [a.field.zero] * a.ncols
    for r, p in enumerate(pivots):
        x[p] = rows.get(r, {}).get(a.ncols, a.field.zero)
    x = tuple(x)
    if a.apply(x) != tuple(b):
        raise AssertionError("canonical solution does not satisfy the system")
    return x

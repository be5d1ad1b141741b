"""
Builders for concrete graded Lie algebras: matrix Lie algebras by
commutators, sl2, block-graded special linear algebras, abelian algebras
and central enlargements.
"""
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from errors import NoSolution, PreconditionError
from exactla import Field, Matrix, Vector, solve
from freemod import sparse_vector
from liegrad.algebra import GradedLieAlgebra, from_brackets
from liegrad.homs import make_involution


def _flatten(m: Matrix) -> Vector:
    return tuple(x for row in m.entries() for x in row)


def lie_algebra_from_matrices(
    field: Field,
    labels: Sequence[str],
    matrices: Sequence[Sequence[Sequence[int]]],
    degrees: Sequence[int],
    name: str = "",
) -> GradedLieAlgebra:
    """
    Structure constants of the span of `matrices` under the commutator.

    Raises:
        PreconditionError: if the span is not closed under commutators
    """
    mats = [Matrix.from_rows(field, m) for m in matrices]
    n = mats[0].nrows if mats else 0
    frame = Matrix.from_columns(field, [_flatten(m) for m in mats], n * n)
    brackets: Dict[Tuple[int, int], Dict[int, object]] = {}
    for i, j in product(range(len(mats)), repeat=2):
        if i >= j:
            continue
        commutator = mats[i] @ mats[j] - mats[j] @ mats[i]
        try:
            coords = solve(frame, _flatten(commutator))
        except NoSolution:
            raise PreconditionError(f"[{labels[i]}, {labels[j]}] leaves the span") from None
        image = sparse_vector(coords)
        if image:
            brackets[(i, j)] = image
    return from_brackets(field, labels, degrees, brackets, name=name)


def _unit(n: int, i: int, j: int) -> List[List[int]]:
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def vector_of(l: GradedLieAlgebra, coefficients: Dict[str, int]) -> Vector:
    """Coordinates of sum c * label."""
    out = [l.field.zero] * l.dim
    for label, c in coefficients.items():
        out[l.module.index(label)] = l.field(c)
    return tuple(out)


def sl2(field: Field) -> GradedLieAlgebra:
    """sl2 with basis f, h, e in degrees -1, 0, 1, its standard triple and the involution e <-> f, h -> -h."""
    l = lie_algebra_from_matrices(
        field,
        ("f", "h", "e"),
        ([[0, 0], [1, 0]], [[1, 0], [0, -1]], [[0, 1], [0, 0]]),
        (-1, 0, 1),
        name="sl2",
    )
    involution = Matrix.from_columns(field, [(0, 0, 1), (0, -1, 0), (1, 0, 0)], 3)
    make_involution(l, involution)
    triple = (vector_of(l, {"h": 1}), vector_of(l, {"e": 1}), vector_of(l, {"f": 1}))
    return l.with_decorations(involution=involution, sl2_triple=triple)


def special_linear(field: Field, n: int, split: Optional[int] = None, name: str = "") -> GradedLieAlgebra:
    """
    sl_n on the basis E_ij (i != j) and H_k = E_kk - E_k+1,k+1.

    With `split`, E_ij has degree 1 when i < split <= j, degree -1 when
    j < split <= i and degree 0 otherwise; without it everything has
    degree 0. The basis is ordered by degree.
    """
    items = []
    for i, j in product(range(n), repeat=2):
        if i == j:
            continue
        degree = 0
        if split is not None:
            if i < split <= j:
                degree = 1
            elif j < split <= i:
                degree = -1
        items.append((degree, f"E{i + 1}{j + 1}", _unit(n, i, j)))
    for k in range(n - 1):
        h = [[0] * n for _ in range(n)]
        h[k][k], h[k + 1][k + 1] = 1, -1
        items.append((0, f"H{k + 1}", h))
    items.sort(key=lambda item: item[0])
    return lie_algebra_from_matrices(
        field,
        [label for _, label, _ in items],
        [m for _, _, m in items],
        [d for d, _, _ in items],
        name=name or f"sl{n}",
    )


def sl4_block(field: Field) -> GradedLieAlgebra:
    """sl4 with the 2+2 block grading (dims 4/7/4) and e = E13 + E24, f = E31 + E42."""
    l = special_linear(field, 4, split=2, name="sl4block")
    triple = (
        vector_of(l, {"H1": 1, "H2": 2, "H3": 1}),
        vector_of(l, {"E13": 1, "E24": 1}),
        vector_of(l, {"E31": 1, "E42": 1}),
    )
    return l.with_decorations(sl2_triple=triple)


def sl3_root(field: Field) -> GradedLieAlgebra:
    """sl3, trivially graded, with the root sl2-triple (H1, E12, E21)."""
    l = special_linear(field, 3, name="sl3")
    triple = (vector_of(l, {"H1": 1}), vector_of(l, {"E12": 1}), vector_of(l, {"E21": 1}))
    return l.with_decorations(sl2_triple=triple)


def abelian(field: Field, labels: Sequence[str], degrees: Sequence[int], name: str = "") -> GradedLieAlgebra:
    return from_brackets(field, labels, degrees, {}, name=name)


def central_sum(l: GradedLieAlgebra, label: str = "z", degree: int = 0, name: str = "") -> GradedLieAlgebra:
    """l (+) k z with z central of the given degree, appended as the last basis vector."""
    brackets = {key: dict(image) for key, image in l.bracket_map.table.items()}
    return from_brackets(
        l.field,
        list(l.labels) + [label],
        list(l.degrees) + [degree],
        brackets,
        name=name or f"{l.name}+{label}",
        antisymmetrize=False,
    )

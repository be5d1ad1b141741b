"""
Jordan pairs, Jordan triple systems and unital Jordan algebras given by
structure constants.

Components of a pair are indexed by sigma in {MINUS, PLUS}; the product
{a, b, c}_sigma takes a, c in P_sigma and b in P_-sigma.
"""
from dataclasses import dataclass, field

from errors import ComponentMismatchError, DimensionMismatchError
from exactla import Field, Matrix, Vector
from freemod import BilinearMap, FreeModule, LinearMap, TrilinearMap, same_field
from memo import Memo

MINUS = -1
PLUS = 1
SIGNS = (MINUS, PLUS)


def _check_sigma(sigma: int) -> None:
    if sigma not in SIGNS:
        raise ComponentMismatchError(f"component sign must be +1 or -1, got {sigma}")


@dataclass(frozen=True, eq=False)
class JordanPair:
    minus: FreeModule
    plus: FreeModule
    t_minus: TrilinearMap
    t_plus: TrilinearMap
    name: str = ""
    _cache: Memo = field(default_factory=Memo, repr=False)

    def __post_init__(self):
        same_field(self.minus, self.plus)
        expected = {
            "t_minus": ((self.minus, self.plus, self.minus), self.minus),
            "t_plus": ((self.plus, self.minus, self.plus), self.plus),
        }
        for attr, (domains, codomain) in expected.items():
            t = getattr(self, attr)
            dims = tuple(m.dim for m in t.domains)
            if dims != tuple(m.dim for m in domains) or t.codomain.dim != codomain.dim:
                raise DimensionMismatchError(f"{attr} has shape {dims} -> {t.codomain.dim}")

    @property
    def field(self) -> Field:
        return self.minus.field

    @property
    def dims(self):
        return self.minus.dim, self.plus.dim

    def component(self, sigma: int) -> FreeModule:
        _check_sigma(sigma)
        return self.plus if sigma == PLUS else self.minus

    def triple(self, sigma: int) -> TrilinearMap:
        _check_sigma(sigma)
        return self.t_plus if sigma == PLUS else self.t_minus

    def product(self, sigma: int, a: Vector, b: Vector, c: Vector) -> Vector:
        """{a, b, c}_sigma."""
        own, other = self.component(sigma), self.component(-sigma)
        if len(a) != own.dim or len(c) != own.dim or len(b) != other.dim:
            raise ComponentMismatchError(
                f"product_{sigma:+d} needs vectors of dims ({own.dim}, {other.dim}, {own.dim})"
            )
        return self.triple(sigma).apply(a, b, c)

    def v_matrix(self, sigma: int, a: Vector, b: Vector) -> Matrix:
        """Matrix of c -> {a, b, c}_sigma on P_sigma."""
        own = self.component(sigma)
        return Matrix.from_columns(
            self.field, [self.product(sigma, a, b, e) for e in own.basis()], own.dim
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JordanPair):
            return NotImplemented
        return (
            self.field == other.field
            and self.dims == other.dims
            and self.t_minus == other.t_minus
            and self.t_plus == other.t_plus
        )

    __hash__ = object.__hash__


@dataclass(frozen=True, eq=False)
class JordanTriple:
    module: FreeModule
    t: TrilinearMap
    name: str = ""
    _cache: Memo = field(default_factory=Memo, repr=False)

    def __post_init__(self):
        if tuple(m.dim for m in self.t.domains) != (self.module.dim,) * 3 or self.t.codomain.dim != self.module.dim:
            raise DimensionMismatchError("triple product must map T x T x T -> T")

    @property
    def field(self) -> Field:
        return self.module.field

    @property
    def dim(self) -> int:
        return self.module.dim

    def product(self, a: Vector, b: Vector, c: Vector) -> Vector:
        return self.t.apply(a, b, c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JordanTriple):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and self.t == other.t

    __hash__ = object.__hash__


@dataclass(frozen=True, eq=False)
class JordanAlgebra:
    """A commutative algebra with a distinguished identity element."""

    module: FreeModule
    mult: BilinearMap
    identity: Vector
    name: str = ""
    _cache: Memo = field(default_factory=Memo, repr=False)

    def __post_init__(self):
        if tuple(m.dim for m in self.mult.domains) != (self.module.dim,) * 2 or self.mult.codomain.dim != self.module.dim:
            raise DimensionMismatchError("product must map J x J -> J")
        self.module.check_vector(self.identity)

    @property
    def field(self) -> Field:
        return self.module.field

    @property
    def dim(self) -> int:
        return self.module.dim

    def multiply(self, a: Vector, b: Vector) -> Vector:
        return self.mult.apply(a, b)

    def square(self, a: Vector) -> Vector:
        return self.mult.apply(a, a)

    def right_multiplication(self, a: Vector) -> LinearMap:
        """R_a: x -> x * a."""
        return LinearMap.from_function(self.module, self.module, lambda x: self.multiply(x, a))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JordanAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and tuple(self.identity) == tuple(other.identity)
        )

    __hash__ = object.__hash__

"""
Exact scalar fields: the rationals and prime fields GF(p) with p >= 5.

Elements are sympy domain elements, so arithmetic is exact and rationals
are always kept in lowest terms.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ

Scalar = Any
ScalarLike = Union[int, Fraction, str, Scalar]


@lru_cache(maxsize=None)
def _domain(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class Field:
    """
    Descriptor of the scalar field: characteristic 0 means Q.

    Only Q and GF(p) with p >= 5 are admitted; the constructions need
    2 and 3 to be invertible.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p < 5 or not isprime(p)):
            raise ValueError(f"GF({p}) is not admitted: need a prime p >= 5")

    @classmethod
    def rational(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def from_descriptor(cls, descriptor: str) -> "Field":
        """Parse 'rational' or 'p:<prime>'."""
        text = descriptor.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls.rational()
        if text.startswith("p:"):
            return cls.prime(int(text[2:]))
        raise ValueError(f"unknown field descriptor {descriptor!r}")

    @property
    def descriptor(self) -> str:
        return "rational" if self.characteristic == 0 else f"p:{self.characteristic}"

    @property
    def domain(self):
        return _domain(self.characteristic)

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def __call__(self, value: ScalarLike) -> Scalar:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.quo(self.domain.convert(value.numerator), self.domain.convert(value.denominator))
        if isinstance(value, int):
            return self.domain.convert(value)
        return value

    def parse(self, text: str) -> Scalar:
        """Parse an integer 'n' or a ratio 'n/d'."""
        raw = text.strip()
        numerator, _, denominator = raw.partition("/")
        try:
            n = int(numerator)
            d = int(denominator) if denominator else 1
        except ValueError:
            raise ValueError(f"not a scalar: {text!r}") from None
        if d == 0 or (self.characteristic and d % self.characteristic == 0):
            raise ValueError(f"denominator of {text!r} is not invertible over {self.descriptor}")
        return self.quo(self.domain.convert(n), self.domain.convert(d))

    def format(self, x: Scalar) -> str:
        if self.characteristic:
            return str(int(x) % self.characteristic)
        n, d = int(self.domain.numer(x)), int(self.domain.denom(x))
        return str(n) if d == 1 else f"{n}/{d}"

    def is_zero(self, x: Scalar) -> bool:
        return not x

    def quo(self, a: Scalar, b: Scalar) -> Scalar:
        return self.domain.quo(a, b)

    def inverse(self, a: Scalar) -> Scalar:
        return self.domain.quo(self.domain.one, a)

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ_FIELD = Field.rational()

"""
Exception hierarchy for tkkforge.

Check functions report outcomes as Certificate/Violation values; the
exceptions below are raised when an operation cannot produce its result.
"""
from typing import Any, Optional


class TkkError(Exception):
    """Base class for all tkkforge errors."""


class FieldMismatchError(TkkError, ValueError):
    """Two objects live over different fields."""


class DimensionMismatchError(TkkError, ValueError):
    """Vector or matrix dimensions do not fit together."""


class ComponentMismatchError(TkkError, ValueError):
    """A vector was given for the wrong component of a Jordan pair."""


class NoSolution(TkkError):
    """A linear system has no solution (right-hand side outside the column space)."""

    def __init__(self, rhs: Any = None, message: str = "right-hand side is not in the column space"):
        super().__init__(message)
        self.rhs = rhs


class AxiomViolation(TkkError):
    """A structure failed its axiom certification."""

    def __init__(self, violation: Any):
        super().__init__(f"{violation.name}: {violation.reason} (witness {violation.witness})")
        self.violation = violation


class NotA1(TkkError):
    """An sl2-triple does not induce an A1-grading."""

    REASONS = ("residual_eigenspace", "non_integral_weight", "not_zero_perfect")

    def __init__(self, reason: str, detail: str = ""):
        if reason not in self.REASONS:
            raise ValueError(f"unknown NotA1 reason {reason!r}")
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


class NeitherForm(TkkError):
    """None of the candidate printed forms certifies."""


class SpanMismatch(TkkError):
    """Two spans that must coincide differ."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(TkkError):
    """An operation was called on input violating its precondition."""


class FeasibilityError(TkkError):
    """The requested computation exceeds the configured size cap."""


class ParseError(TkkError):
    """An algebra file could not be parsed or validated."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field {field}")
        super().__init__(f"{message} ({', '.join(location)})" if location else message)
        self.line = line
        self.field = field


class UnknownName(TkkError, KeyError):
    """A catalog name is not known."""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown catalog name {self.name!r}"


class KindMismatch(TkkError):
    """A command was given a structure of a kind it does not accept."""

    def __init__(self, command: str, kind: str):
        super().__init__(f"{command} does not accept a {kind}")
        self.command = command
        self.kind = kind

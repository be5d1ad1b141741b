"""
Outcomes of verification checks.

Every check returns either a Certificate or a Violation. Both are plain
values; `require_certified` turns a Violation into an AxiomViolation for
callers that cannot proceed without a certified input.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

from errors import AxiomViolation
from observability.logging_config import get_logger
from observability.metrics import track_check

logger = get_logger(__name__)


@dataclass(frozen=True)
class Certificate:
    name: str
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    passed = True
    witness = None
    reason = ""


@dataclass(frozen=True)
class Violation:
    name: str
    reason: str
    witness: Optional[Tuple[Any, ...]] = None

    passed = False


CheckResult = Union[Certificate, Violation]


def record(result: CheckResult) -> CheckResult:
    """Log and count a check outcome; returns it unchanged."""
    track_check(result.name, result.passed)
    if result.passed:
        logger.debug("check passed", extra={"check": result.name})
    else:
        logger.warning(
            f"check failed: {result.reason} (witness {result.witness})",
            extra={"check": result.name},
        )
    return result


def require_certified(result: CheckResult) -> Certificate:
    if not result.passed:
        raise AxiomViolation(result)
    return result


def first_failure(*results: CheckResult) -> Optional[Violation]:
    for result in results:
        if not result.passed:
            return result
    return None

"""
Verification reports: a human-readable rendering for standard output and
a JSON document for `--report`.
"""
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from certificates import CheckResult


class Verdict(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(alias="pass")
    reason: str = ""
    witness: Optional[List[str]] = None

    @classmethod
    def from_check(cls, result: CheckResult) -> "Verdict":
        witness = None
        if result.witness is not None:
            items = result.witness if isinstance(result.witness, (tuple, list)) else (result.witness,)
            witness = [str(w) for w in items]
        return cls(name=result.name, passed=result.passed, reason=result.reason, witness=witness)


class Report(BaseModel):
    command: str
    input_digest: str = ""
    verdicts: List[Verdict] = []
    dimensions: Dict[str, Any] = {}
    seed: int
    timing: Optional[Dict[str, float]] = None

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def add(self, results: Iterable[CheckResult]) -> "Report":
        self.verdicts.extend(Verdict.from_check(r) for r in results)
        return self

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True, exclude_none=True)

    def write(self, path: Path) -> None:
        path.write_text(self.to_json() + "\n", encoding="utf-8")

    def render(self) -> str:
        lines = [f"command: {self.command}"]
        if self.input_digest:
            lines.append(f"input:   sha256:{self.input_digest[:16]}")
        lines.append(f"seed:    {self.seed}")
        for key, value in self.dimensions.items():
            lines.append(f"  {key} = {value}")
        for v in self.verdicts:
            mark = "PASS" if v.passed else "FAIL"
            line = f"[{mark}] {v.name}"
            if not v.passed and v.reason:
                line += f": {v.reason}"
            if v.witness:
                line += f" (witness: {', '.join(v.witness)})"
            lines.append(line)
        if self.timing:
            lines.append("timing (ms):")
            lines.extend(f"  {key}: {ms}" for key, ms in self.timing.items())
        lines.append("result: " + ("all checks passed" if self.passed else "verification failed"))
        return "\n".join(lines)

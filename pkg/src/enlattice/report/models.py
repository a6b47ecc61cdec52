"""Report models for verification suites."""

import json
from enum import Enum

from pydantic import BaseModel, Field, computed_field


class Scope(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"
    COMBINATORIAL = "combinatorial"


class IdentityRecord(BaseModel):
    """Outcome of one identity check."""

    id: str
    statement: str
    scope: Scope = Scope.EXHAUSTIVE
    lhs_size: int = 0
    rhs_size: int = 0
    evaluations: int | None = None  # tuples checked, for algebraic identities
    verified: bool
    counterexample: str | None = None
    elapsed: float | None = Field(default=None, exclude=True)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def paper_ref(self) -> str:
        """JSON name for the statement in pass/fail reports."""
        return self.statement

    @property
    def status(self) -> str:
        return "pass" if self.verified else "FAIL"


class Report(BaseModel):
    suite: str
    version: str
    inputs: dict[str, str | int | None] = Field(default_factory=dict)
    records: list[IdentityRecord] = Field(default_factory=list)
    timing: dict[str, float] | None = None

    @property
    def verified(self) -> bool:
        return all(r.verified for r in self.records)

    @property
    def failures(self) -> list[IdentityRecord]:
        return [r for r in self.records if not r.verified]

    def add(self, record: IdentityRecord) -> IdentityRecord:
        self.records.append(record)
        return record

    def extend(self, records: list[IdentityRecord]) -> None:
        self.records.extend(records)

    def to_json(self) -> str:
        """Stable JSON; timing only appears when it was collected."""
        data = self.model_dump(mode="json", exclude_none=False)
        if data.get("timing") is None:
            data.pop("timing", None)
        return json.dumps(data, indent=2, sort_keys=False)


def record(
    id: str,
    statement: str,
    lhs: int,
    rhs: int,
    verified: bool | None = None,
    scope: Scope = Scope.EXHAUSTIVE,
    counterexample: str | None = None,
    evaluations: int | None = None,
) -> IdentityRecord:
    """Build a record; verified defaults to size equality."""
    return IdentityRecord(
        id=id,
        statement=statement,
        scope=scope,
        lhs_size=lhs,
        rhs_size=rhs,
        evaluations=evaluations,
        verified=(lhs == rhs) if verified is None else verified,
        counterexample=counterexample,
    )

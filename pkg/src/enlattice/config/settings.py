"""Resolved run settings handed to the commands and suites."""

from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError

from enlattice.constants import (
    DEFAULT_DGON_NODE_BUDGET,
    DEFAULT_ORBIT_CAP,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    MAX_LATTICE_RANK,
)

from .errors import ConfigError
from .resolver import ConfigResolver


class RunSettings(BaseModel):
    dgon_nodes: int = Field(default=DEFAULT_DGON_NODE_BUDGET, gt=0)
    samples: int = Field(default=DEFAULT_SAMPLE_COUNT, gt=0)
    orbit_cap: int = Field(default=DEFAULT_ORBIT_CAP, gt=0)
    max_degree: int | None = Field(default=None, ge=0)
    seed: int = DEFAULT_SEED
    output_format: Literal["table", "json"] = "table"
    max_rank: int = Field(default=MAX_LATTICE_RANK, ge=0, le=MAX_LATTICE_RANK)

    @classmethod
    def from_resolver(cls, resolver: ConfigResolver) -> "RunSettings":
        values: dict[str, Any] = {
            "dgon_nodes": resolver.resolve_int("budget.dgon_nodes"),
            "samples": resolver.resolve_int("budget.samples"),
            "orbit_cap": resolver.resolve_int("budget.orbit_cap"),
            "max_degree": resolver.resolve_int("budget.max_degree"),
            "seed": resolver.resolve_int("sampling.seed"),
            "output_format": resolver.resolve("output.format"),
            "max_rank": resolver.resolve_int("limits.max_rank"),
        }
        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigError(f"Invalid settings:\n{e}") from e

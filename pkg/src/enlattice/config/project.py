"""Project configuration loading and validation from .enlatticerc.yaml."""

from pathlib import Path

import yaml
from pydantic import BaseModel, Field, ValidationError

from enlattice.constants import (
    DEFAULT_DGON_NODE_BUDGET,
    DEFAULT_ORBIT_CAP,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    MAX_LATTICE_RANK,
    OUTPUT_FORMATS,
)

from .errors import ConfigError

RC_FILENAME = ".enlatticerc.yaml"


class BudgetConfig(BaseModel):
    """Search budgets; None means not set at this level."""

    dgon_nodes: int | None = Field(default=None, gt=0)
    samples: int | None = Field(default=None, gt=0)
    orbit_cap: int | None = Field(default=None, gt=0)
    max_degree: int | None = Field(default=None, ge=0)


class SamplingConfig(BaseModel):
    seed: int | None = None


class OutputConfig(BaseModel):
    format: str | None = None  # table, json


class LimitsConfig(BaseModel):
    max_rank: int | None = Field(default=None, ge=0, le=MAX_LATTICE_RANK)


class EnlatticeRC(BaseModel):
    """Complete .enlatticerc.yaml schema."""

    budget: BudgetConfig = BudgetConfig()
    sampling: SamplingConfig = SamplingConfig()
    output: OutputConfig = OutputConfig()
    limits: LimitsConfig = LimitsConfig()


DEFAULTS = {
    "budget.dgon_nodes": DEFAULT_DGON_NODE_BUDGET,
    "budget.samples": DEFAULT_SAMPLE_COUNT,
    "budget.orbit_cap": DEFAULT_ORBIT_CAP,
    "budget.max_degree": None,
    "sampling.seed": DEFAULT_SEED,
    "output.format": "table",
    "limits.max_rank": MAX_LATTICE_RANK,
}


def load_enlatticerc(path: Path | None = None) -> EnlatticeRC | None:
    """Load and validate .enlatticerc.yaml; None when the file is absent."""
    if path is None:
        path = Path.cwd() / RC_FILENAME

    if not path.exists():
        return None

    try:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ConfigError(f"Invalid {RC_FILENAME} in {path}: expected a mapping")
        config = EnlatticeRC(**data)
        validate_enlatticerc(config)
        return config

    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}") from e
    except ValidationError as e:
        raise ConfigError(f"Invalid {RC_FILENAME} schema:\n{e}") from e


def validate_enlatticerc(config: EnlatticeRC) -> None:
    fmt = config.output.format
    if fmt is not None and fmt not in OUTPUT_FORMATS:
        raise ConfigError(
            f"Invalid output.format: {fmt}\n" f"Must be one of: {', '.join(OUTPUT_FORMATS)}"
        )

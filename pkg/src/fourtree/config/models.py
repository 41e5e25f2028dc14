"""
Validated settings for runs and generators.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from fourtree.domain.errors import BadParameters

Family = Literal["wheel", "prism", "antiprism", "platonic", "sample10", "crown", "random"]
PlatonicName = Literal["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"]


class GeneratorSpec(BaseModel):
    family: Family
    k: Optional[int] = Field(default=None, ge=3)
    n: Optional[int] = Field(default=None, ge=4)
    name: Optional[PlatonicName] = None
    seed: int = 0

    @model_validator(mode="after")
    def _check_parameters(self) -> "GeneratorSpec":
        if self.family in ("wheel", "prism", "antiprism", "crown") and self.k is None:
            raise ValueError(f"family {self.family} needs k")
        if self.family == "random" and self.n is None:
            raise ValueError("family random needs n")
        if self.family == "platonic" and self.name is None:
            raise ValueError("family platonic needs a name")
        return self

    @property
    def label(self) -> str:
        if self.family == "platonic":
            return str(self.name)
        if self.family == "random":
            return f"random-{self.n}-s{self.seed}"
        if self.k is not None:
            return f"{self.family}-{self.k}"
        return self.family


class LoggingSettings(BaseModel):
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"


class MinimizeSettings(BaseModel):
    flip_cap_factor: int = Field(default=4, ge=1)
    validate_every_flip: bool = True


class ConnectivitySettings(BaseModel):
    check: bool = True


class OracleSettings(BaseModel):
    tree_limit: int = Field(default=10_000_000, ge=1)
    keep_valid_pairs_limit: int = Field(default=200_000, ge=0)


class BenchSettings(BaseModel):
    schedule: List[int] = Field(default_factory=lambda: [1250, 2500, 5000, 10000, 20000])
    max_exponent: float = Field(default=2.3, gt=0)
    seed: int = 2024
    repeat: int = Field(default=1, ge=1)


class CorpusSettings(BaseModel):
    seed: int = 7
    small_triangulations: List[int] = Field(default_factory=lambda: list(range(5, 15)))
    medium_sizes: List[int] = Field(
        default_factory=lambda: [20, 30, 50, 75, 100, 150, 200, 300, 400, 500]
    )
    medium_per_size: int = Field(default=20, ge=1)


class RunConfig(BaseModel):
    """Settings shared by every subcommand, read from the YAML configuration."""

    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    minimize: MinimizeSettings = Field(default_factory=MinimizeSettings)
    connectivity: ConnectivitySettings = Field(default_factory=ConnectivitySettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    bench: BenchSettings = Field(default_factory=BenchSettings)
    corpus: CorpusSettings = Field(default_factory=CorpusSettings)


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        where = ".".join(str(x) for x in item["loc"]) or "spec"
        parts.append(f"{where}: {item['msg']}")
    return "; ".join(parts)


def make_spec(**values: Any) -> GeneratorSpec:
    """
    Build a generator spec, dropping unset values.

    Raises:
        BadParameters: A parameter is missing or out of range
    """
    try:
        return GeneratorSpec(**{k: v for k, v in values.items() if v is not None})
    except ValidationError as e:
        raise BadParameters(f"Invalid generator parameters: {_describe(e)}") from None


def make_run_config(data: Dict[str, Any]) -> RunConfig:
    """
    Validate a configuration mapping.

    Raises:
        BadParameters: A key has the wrong type or is out of range
    """
    try:
        return RunConfig(**data)
    except ValidationError as e:
        raise BadParameters(f"Invalid configuration: {_describe(e)}") from None

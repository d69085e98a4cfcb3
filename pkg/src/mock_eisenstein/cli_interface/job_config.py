"""Validated parameters of each subcommand."""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from mock_eisenstein.eisenstein.weights import HalfIntWeight
from mock_eisenstein.padic.residue import require_odd_prime, require_prime_at_least_five


def parse_int_list(value: object) -> object:
    """Accept "5,7,11" as well as lists."""
    if isinstance(value, str):
        return [int(part) for part in value.split(",") if part.strip()]
    if isinstance(value, int):
        return [value]
    return value


def parse_weight(value: object) -> object:
    """Accept "t/2" strings and return twice_k."""
    if isinstance(value, str):
        return HalfIntWeight.parse(value).twice_k
    if isinstance(value, HalfIntWeight):
        return value.twice_k
    return value


class JobConfig(BaseModel):
    """Base class for subcommand parameters."""

    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    out: Path | None = Field(default=None, description="Write the artifact here instead of stdout")


class EisensteinJob(JobConfig):
    weight: int = Field(description="twice_k of the weight k = t/2")
    precision: int = Field(ge=0)
    format: Literal["json", "csv", "table"] = "json"

    @field_validator("weight", mode="before")
    @classmethod
    def _parse_weight(cls, value: object) -> object:
        return parse_weight(value)

    @field_validator("weight")
    @classmethod
    def _check_weight(cls, value: int) -> int:
        HalfIntWeight(value).require_cohen_range()
        return value

    @property
    def half_int_weight(self) -> HalfIntWeight:
        return HalfIntWeight(self.weight)


class HurwitzJob(JobConfig):
    precision: int = Field(ge=0)
    format: Literal["json", "csv", "table"] = "table"


class VerifyJob(JobConfig):
    p: int
    l: int = Field(default=1, ge=1)
    precision: int = Field(default=100, ge=0)
    uncorrected: bool = False
    allow_deep: bool = False
    format: Literal["json", "yaml", "table"] = "json"

    @field_validator("p")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        require_prime_at_least_five(value)
        return value

    @model_validator(mode="after")
    def _check_level(self) -> "VerifyJob":
        if self.l > 2 and not self.allow_deep:
            raise ValueError(f"l={self.l} requires --allow-deep")
        return self


SuiteName = Literal["koblitz", "koblitz-negative", "kummer", "zeta", "proof", "weight-two", "completion"]

# Suites whose statements are only established for p >= 5.
PRIME_AT_LEAST_FIVE_SUITES = {"kummer", "zeta", "proof", "completion"}


class ChecksJob(JobConfig):
    suite: SuiteName
    primes: list[int] = Field(min_length=1)
    levels: list[int] = Field(default_factory=lambda: [1])
    weights: list[int] = Field(default_factory=list)
    precision: int | None = Field(default=None, ge=0)
    max_d0: int = Field(default=100, ge=3)
    max_m: int = Field(default=100, ge=3)
    allow_deep: bool = False
    format: Literal["json", "yaml", "markdown", "table"] = "table"

    @field_validator("primes", "levels", mode="before")
    @classmethod
    def _parse_lists(cls, value: object) -> object:
        return parse_int_list(value)

    @field_validator("weights", mode="before")
    @classmethod
    def _parse_weights(cls, value: object) -> object:
        if isinstance(value, str):
            return [parse_weight(part.strip()) for part in value.split(",") if part.strip()]
        return value

    @field_validator("weights")
    @classmethod
    def _check_weights(cls, value: list[int]) -> list[int]:
        for twice_k in value:
            HalfIntWeight(twice_k).require_cohen_range()
        return value

    @field_validator("levels")
    @classmethod
    def _check_levels(cls, value: list[int]) -> list[int]:
        if any(level < 1 for level in value):
            raise ValueError("levels must be >= 1")
        return value

    @model_validator(mode="after")
    def _check_primes(self) -> "ChecksJob":
        for p in self.primes:
            if self.suite in PRIME_AT_LEAST_FIVE_SUITES:
                require_prime_at_least_five(p)
            else:
                require_odd_prime(p)
        if self.suite == "completion" and max(self.levels) > 2 and not self.allow_deep:
            raise ValueError("completion levels above 2 require --allow-deep")
        return self

"""Structured response payloads for CLI commands without a domain model of their own."""

from pydantic import BaseModel, ConfigDict, Field

from balanced_episturmian.models import SCHEMA_VERSION


class _Response(BaseModel):
    model_config = ConfigDict(frozen=True)

    schema_version: int = SCHEMA_VERSION


class WordResponse(_Response):
    """A rendered finite word and what produced it."""

    source: str = Field(description="Directive word, spec or parameter the word came from")
    word: str
    length: int = Field(ge=0)


class FrequencyResponse(_Response):
    source: str
    frequencies: dict[int, str] = Field(description="Letter to exact frequency p/q")


class SpecialFactorsResponse(_Response):
    source: str
    side: str = Field(description="left or right")
    n: int = Field(ge=0)
    factors: list[str]
    exact: bool = True


class ClaimInfo(BaseModel):
    model_config = ConfigDict(frozen=True)

    claim: str
    statement: str


class ClaimCatalogue(_Response):
    claims: list[ClaimInfo]

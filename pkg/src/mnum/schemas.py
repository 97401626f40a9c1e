"""Pydantic request/response models for the HTTP service.

PolymsetDocument mirrors the JSON interchange format; the conversion
helpers delegate to :mod:`mnum.interchange` so the service and the file
format validate identically.
"""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, Field

from mnum import interchange
from mnum.polymset import DomainBase, Polymset

NonNegInt = Annotated[int, Field(ge=0)]
Style = Literal["sparse", "matrix"]


class DomainModel(BaseModel):
    name: str
    elements: list[str] = Field(min_length=1)


class PolymsetDocument(BaseModel):
    """The interchange document: dim, [index, multiplicity] entries, and
    optional domain metadata.  Accepts non-canonical entry lists."""

    dim: int = Field(ge=1)
    entries: list[tuple[list[NonNegInt], NonNegInt]] = []
    domain_base: list[DomainModel] | None = None

    def to_polymset(self) -> tuple[Polymset, DomainBase | None]:
        return interchange.decode(self.model_dump(mode="json"))

    @classmethod
    def from_polymset(
        cls, pm: Polymset, base: DomainBase | None = None
    ) -> "PolymsetDocument":
        return cls(**interchange.encode(pm, base))


class HealthResponse(BaseModel):
    status: Literal["ok"] = "ok"
    version: str


class EvalRequest(BaseModel):
    source: str
    style: Style = "sparse"


class EvalResponse(BaseModel):
    """One rendered line per bare expression in the source."""

    outputs: list[str]


class FmtRequest(BaseModel):
    document: PolymsetDocument


class FmtResponse(BaseModel):
    document: PolymsetDocument


class UniverseModel(BaseModel):
    dim: int = Field(ge=1)
    max_index: list[NonNegInt]
    max_mult: NonNegInt


class CheckLawsRequest(BaseModel):
    dim: int = Field(default=2, ge=1)
    max_index: list[NonNegInt] = [1, 1]
    max_mult: NonNegInt = 1
    budget: int = Field(default=1_000_000, ge=1)
    mutate: Literal["pointwise-mul"] | None = None


class LawResultModel(BaseModel):
    law: str
    status: Literal["pass", "fail"]
    coverage: Literal["exhaustive", "sampled"]
    checked: int
    counterexample: dict[str, str] | None = None


class CheckLawsResponse(BaseModel):
    universe: UniverseModel
    budget: int
    ok: bool
    laws: list[LawResultModel]

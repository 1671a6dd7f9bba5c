"""Request and response models for the HTTP endpoints.

Every response carries schema_version so table consumers survive additive
changes.  Primality is checked at the validation layer: a composite p is a
malformed request (422), not a computation failure.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from ..fppoly import is_prime

SCHEMA_VERSION = 1

FieldName = Literal["R", "C", "H"]


class GroupParams(BaseModel):
    p: int = Field(ge=2, description="prime")
    n: int = Field(default=1, ge=1, le=40, description="rank of C_p^n")

    @field_validator("p")
    @classmethod
    def _p_prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"primality check failed: {value} is composite")
        return value


# --- requests ---------------------------------------------------------------


class ClassesRequest(GroupParams):
    field: FieldName
    cap: int | None = Field(default=None, ge=0)


class IndexRequest(GroupParams):
    field: FieldName
    l: int = Field(ge=1)


class SphereRequest(GroupParams):
    dim: int | None = Field(default=None, ge=1, description="real dimension of V")
    m: int | None = Field(default=None, ge=1, description="shorthand: dim = m(p^n - 1)")
    fixed_point_free: bool = True

    @model_validator(mode="after")
    def _exactly_one_size(self) -> "SphereRequest":
        if (self.dim is None) == (self.m is None):
            raise ValueError("give exactly one of dim or m")
        return self


class KakutaniRequest(GroupParams):
    field: FieldName
    m: int = Field(ge=1)
    l: int | None = Field(default=None, ge=1, description="decide at this l; default is the bound's ceiling")


class KakutaniTableRequest(BaseModel):
    field: FieldName
    p_values: list[int] = Field(min_length=1)
    n_values: list[int] = Field(min_length=1)
    m_values: list[int] = Field(min_length=1)

    @field_validator("p_values")
    @classmethod
    def _all_prime(cls, values: list[int]) -> list[int]:
        for p in values:
            if not is_prime(p):
                raise ValueError(f"primality check failed: {p} is composite")
        return values

    @field_validator("n_values", "m_values")
    @classmethod
    def _all_positive(cls, values: list[int]) -> list[int]:
        if any(v < 1 for v in values):
            raise ValueError("values must be positive")
        return values


class SteenrodRequest(BaseModel):
    field: FieldName
    l: int = Field(ge=3, description="two-cell model needs l >= 3")


class VerifyRequest(BaseModel):
    suite: str | None = None
    p: int | None = Field(default=None, ge=2)
    k: int | None = Field(default=None, ge=1)

    @field_validator("p")
    @classmethod
    def _p_prime(cls, value: int | None) -> int | None:
        if value is not None and not is_prime(value):
            raise ValueError(f"primality check failed: {value} is composite")
        return value


# --- responses --------------------------------------------------------------


class TermRecord(BaseModel):
    exponents: list[int]
    coefficient: int


class HealthResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    status: str
    version: str


class ClassesResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    field: FieldName
    p: int
    n: int
    cap: int
    class_kind: str
    ring: str
    total_text: str
    inverse_text: str
    total_terms: list[TermRecord]
    inverse_terms: list[TermRecord]
    note: str | None = None


class StiefelIndexResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    kind: str
    generator_text: str | None
    degree: int | None
    certificate_label: str | None
    ideal_note: str | None
    field: FieldName
    p: int
    n: int
    l: int


class SphereIndexResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    kind: str
    generator_text: str | None
    degree: int | None
    certificate_label: str | None
    ideal_note: str | None
    p: int
    n: int
    dim: int


class DecisionRecord(BaseModel):
    l: int
    guaranteed: bool
    stiefel_index_degree: int
    sphere_index_degree: int
    mechanism: str
    bound_formula_value: str | None


class KakutaniResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    field: FieldName
    p: int
    n: int
    m: int
    bound: str | None = Field(description="exact rational, None when no bound is known")
    bound_ceiling: int | None
    threshold: int | None
    decision: DecisionRecord | None


class TableRowRecord(BaseModel):
    field: FieldName
    p: int
    n: int
    m: int
    bound: str | None
    bound_ceiling: int | None
    threshold: int | None


class KakutaniTableResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    rows: list[TableRowRecord]
    csv: str


class SteenrodResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    field: FieldName
    l: int
    cell_dimensions: list[int]
    sq_connects: bool
    lower_bound: int
    upper_bound: int


class VerifyRecord(BaseModel):
    suite: str
    case: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    results: list[VerifyRecord]
    all_passed: bool

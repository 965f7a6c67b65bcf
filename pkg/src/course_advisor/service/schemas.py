"""Pydantic request/response models for the HTTP service.

Rationals travel as "numerator/denominator" strings so that clients see
the exact values; *_pct fields carry the half-up integer display rounding.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class RuleModel(BaseModel):
    antecedent: list[str]
    consequent: list[str]
    support: str
    confidence: str
    confidence_pct: int


class ParamsModel(BaseModel):
    min_support: str
    min_confidence: str
    max_itemset_len: int | None = None


class MineRequest(BaseModel):
    csv_text: str
    major: str
    min_support: float | str
    min_confidence: float | str
    grade_threshold: int = Field(default=50, ge=0, le=100)
    max_itemset_len: int | None = Field(default=None, ge=1)


class MineResponse(BaseModel):
    transaction_count: int
    item_count: int
    level_counts: list[int]
    rule_count: int
    rules: list[RuleModel]
    rule_file_text: str


class SuggestionModel(BaseModel):
    course_id: str
    confidence: str
    confidence_pct: int
    best_rule: RuleModel


class AdviseRequest(BaseModel):
    csv_text: str
    student_id: str
    min_support: float | str
    min_confidence: float | str
    grade_threshold: int = Field(default=50, ge=0, le=100)
    max_itemset_len: int | None = Field(default=None, ge=1)
    top_k: int | None = Field(default=None, ge=0)
    rules_text: str | None = None


class AdviseResponse(BaseModel):
    student_id: str
    params: ParamsModel
    kept_rules: list[RuleModel]
    suggestions: list[SuggestionModel]


class ClusterModel(BaseModel):
    anchor: str
    followers: list[str]
    boost: float = Field(ge=0.0, le=1.0)


class GenerateRequest(BaseModel):
    num_students: int = Field(ge=1)
    majors: list[str] = ["CS"]
    semesters_per_student: tuple[int, int] = (2, 8)
    courses_per_semester: tuple[int, int] = (3, 6)
    course_pool_size: int = Field(default=40, ge=1)
    pass_rate: float = Field(default=0.85, ge=0.0, le=1.0)
    clusters: list[ClusterModel] = []
    seed: int = Field(ge=0, lt=2**64)


class GenerateResponse(BaseModel):
    csv_text: str
    enrollment_count: int
    student_count: int


class StatsRequest(BaseModel):
    csv_text: str
    grade_threshold: int = Field(default=50, ge=0, le=100)


class StatsResponse(BaseModel):
    student_count: int
    major_histogram: dict[str, int]
    transaction_count: int
    item_count: int
    length_histogram: dict[int, int]


class HealthResponse(BaseModel):
    status: str

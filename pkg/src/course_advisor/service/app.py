"""HTTP service wrapping the core package.

One endpoint per operation: mine rules, advise a student, generate
synthetic data, and summarize a dataset. CSV and rule-file payloads travel
inline as text, so the service holds no state between requests.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import advisor, ingest, rules_io, synthetic
from ..apriori import MiningParams, generate_rules, mine_frequent
from ..errors import DataError, UnknownStudentError
from . import schemas

app = FastAPI(
    title="course-advisor",
    description="Course suggestions mined from registration histories.",
    version="0.1.0",
)


def _parse_csv(csv_text: str) -> list[ingest.Enrollment]:
    try:
        return ingest.parse_records(csv_text)
    except DataError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _params(min_support, min_confidence, max_itemset_len) -> MiningParams:
    try:
        return MiningParams(min_support, min_confidence, max_itemset_len)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> dict:
    return {"status": "ok"}


@app.post("/mine", response_model=schemas.MineResponse)
def mine(request: schemas.MineRequest) -> dict:
    records = _parse_csv(request.csv_text)
    params = _params(request.min_support, request.min_confidence, request.max_itemset_len)
    db = ingest.build_transactions(records, request.major, request.grade_threshold)
    fis = mine_frequent(db, params)
    rules = generate_rules(fis, params, len(db.transactions)) if db.transactions else []
    return {
        "transaction_count": len(db.transactions),
        "item_count": len(db.item_universe),
        "level_counts": [len(level) for level in fis.levels],
        "rule_count": len(rules),
        "rules": [advisor.rule_to_dict(rule) for rule in rules],
        "rule_file_text": rules_io.rules_to_text(rules),
    }


@app.post("/advise", response_model=schemas.AdviseResponse)
def advise(request: schemas.AdviseRequest) -> dict:
    records = _parse_csv(request.csv_text)
    params = _params(request.min_support, request.min_confidence, request.max_itemset_len)
    try:
        if request.rules_text is not None:
            rules = rules_io.parse_rules_text(request.rules_text)
            report = advisor.advise_with_rules(
                records, request.student_id, params, rules, request.grade_threshold
            )
        else:
            report = advisor.advise(
                records, request.student_id, params, request.grade_threshold
            )
    except UnknownStudentError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
    except DataError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    suggestions = report.suggestions
    if request.top_k is not None:
        suggestions = suggestions[: request.top_k]
    trimmed = advisor.AdviceReport(
        report.student_id, report.params, report.kept_rules, suggestions
    )
    return advisor.report_to_dict(trimmed)


@app.post("/generate", response_model=schemas.GenerateResponse)
def generate(request: schemas.GenerateRequest) -> dict:
    try:
        params = synthetic.SynthParams(
            num_students=request.num_students,
            majors=tuple(request.majors),
            semesters_per_student=request.semesters_per_student,
            courses_per_semester=request.courses_per_semester,
            course_pool_size=request.course_pool_size,
            pass_rate=request.pass_rate,
            clusters=tuple(
                synthetic.CourseCluster(c.anchor, tuple(c.followers), c.boost)
                for c in request.clusters
            ),
            seed=request.seed,
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    records = synthetic.generate_enrollments(params)
    return {
        "csv_text": ingest.records_to_csv(records),
        "enrollment_count": len(records),
        "student_count": len({rec.student_id for rec in records}),
    }


@app.post("/stats", response_model=schemas.StatsResponse)
def stats(request: schemas.StatsRequest) -> dict:
    records = _parse_csv(request.csv_text)
    summary = ingest.summarize_dataset(records, request.grade_threshold)
    return {
        "student_count": summary.student_count,
        "major_histogram": summary.major_histogram,
        "transaction_count": summary.transaction_count,
        "item_count": summary.item_count,
        "length_histogram": summary.length_histogram,
    }

"""Registration-record ingestion.

Reads enrollment CSVs, builds per-student profiles, and turns the records
of one major into the per-semester transaction database that mining runs
on: one transaction per (student, semester), holding the courses passed
that semester.

CSV format: UTF-8, comma-separated, header line exactly
``student_id,major,semester,course_id,grade``, no quoting (fields must not
contain commas), one enrollment per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MajorConflictError, ParseError, UnknownStudentError

CSV_HEADER = "student_id,major,semester,course_id,grade"

DEFAULT_GRADE_THRESHOLD = 50


@dataclass(frozen=True)
class Enrollment:
    """One registration record: a student took a course in a semester."""

    student_id: str
    major: str
    semester: str
    course_id: str
    grade: int

    def __post_init__(self):
        for name in ("student_id", "major", "semester", "course_id"):
            if not getattr(self, name).strip():
                raise ValueError(f"{name} must be non-empty")
        if not isinstance(self.grade, int) or isinstance(self.grade, bool):
            raise ValueError("grade must be an integer")
        if not 0 <= self.grade <= 100:
            raise ValueError(f"grade {self.grade} outside [0, 100]")


@dataclass(frozen=True)
class StudentProfile:
    """A student's major and the set of courses they have passed."""

    student_id: str
    major: str
    passed_courses: frozenset[str]


@dataclass(frozen=True)
class Transaction:
    """The courses one student passed in one semester, in canonical order."""

    tid: int
    student_id: str
    semester: str
    items: tuple[str, ...]

    def __post_init__(self):
        if not self.items:
            raise ValueError("transaction items must be non-empty")
        if any(a >= b for a, b in zip(self.items, self.items[1:])):
            raise ValueError("transaction items must be strictly increasing")


@dataclass(frozen=True)
class TransactionDB:
    """An ordered set of transactions plus the universe of their items."""

    transactions: tuple[Transaction, ...]
    item_universe: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.transactions)


def parse_records(source: str | Iterable[str]) -> list[Enrollment]:
    """Parse enrollment CSV into records.

    ``source`` is the whole file as one string, or any iterable of text
    lines (an open file, a StringIO, a list of strings). Aborts on the
    first problem, reporting its line number: wrong column count,
    non-integer grade, grade outside [0, 100], empty field, or a duplicate
    (student, semester, course) triple.
    """
    if isinstance(source, str):
        source = source.splitlines()
    records: list[Enrollment] = []
    seen: set[tuple[str, str, str]] = set()
    line_number = 0
    lines = iter(source)
    while True:
        line_number += 1
        try:
            line = next(lines, None)
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 ({exc.reason})", line_number) from exc
        if line is None:
            if line_number == 1:
                raise ParseError("empty input: missing header line", 1)
            break
        line = line.rstrip("\r\n")
        if line_number == 1:
            if line.strip() != CSV_HEADER:
                raise ParseError(f"header must be exactly {CSV_HEADER!r}", 1)
            continue
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 5:
            raise ParseError(f"expected 5 fields, got {len(fields)}", line_number)
        student_id, major, semester, course_id, grade_text = (f.strip() for f in fields)
        try:
            grade = int(grade_text)
        except ValueError:
            raise ParseError(f"grade is not an integer: {grade_text!r}", line_number) from None
        try:
            record = Enrollment(student_id, major, semester, course_id, grade)
        except ValueError as exc:
            raise ParseError(str(exc), line_number) from None
        triple = (student_id, semester, course_id)
        if triple in seen:
            raise ParseError(
                f"duplicate enrollment for student {student_id!r}, "
                f"semester {semester!r}, course {course_id!r}",
                line_number,
            )
        seen.add(triple)
        records.append(record)
    return records


def records_to_csv(records: Sequence[Enrollment]) -> str:
    """Serialize records back to the CSV format accepted by parse_records."""
    lines = [CSV_HEADER]
    for rec in records:
        for value in (rec.student_id, rec.major, rec.semester, rec.course_id):
            if any(ch in value for ch in ",\r\n"):
                raise ValueError(f"field {value!r} contains a CSV separator character")
        lines.append(f"{rec.student_id},{rec.major},{rec.semester},{rec.course_id},{rec.grade}")
    return "\n".join(lines) + "\n"


def build_profile(
    records: Sequence[Enrollment],
    student_id: str,
    grade_threshold: int = DEFAULT_GRADE_THRESHOLD,
) -> StudentProfile:
    """Collect one student's major and passed courses (grade >= threshold)."""
    majors: list[str] = []
    passed: set[str] = set()
    for rec in records:
        if rec.student_id != student_id:
            continue
        if rec.major not in majors:
            majors.append(rec.major)
        if rec.grade >= grade_threshold:
            passed.add(rec.course_id)
    if not majors:
        raise UnknownStudentError(student_id)
    if len(majors) > 1:
        raise MajorConflictError(
            f"student {student_id!r} has records under majors {sorted(majors)}"
        )
    return StudentProfile(student_id, majors[0], frozenset(passed))


def build_transactions(
    records: Sequence[Enrollment],
    major: str,
    grade_threshold: int = DEFAULT_GRADE_THRESHOLD,
) -> TransactionDB:
    """Build the transaction database for every student of one major.

    Each (student, semester) with at least one passing grade becomes one
    transaction of exactly those passed courses. Transactions are ordered
    by student id, then by the semester's first appearance in the input;
    tids run 1..n. A major that matches no student yields an empty
    database.
    """
    if not 0 <= grade_threshold <= 100:
        raise ValueError(f"grade_threshold {grade_threshold} outside [0, 100]")
    # student -> semester -> passed courses; dict order preserves first appearance
    per_student: dict[str, dict[str, set[str]]] = {}
    for rec in records:
        if rec.major != major:
            continue
        semesters = per_student.setdefault(rec.student_id, {})
        passed = semesters.setdefault(rec.semester, set())
        if rec.grade >= grade_threshold:
            passed.add(rec.course_id)
    transactions: list[Transaction] = []
    for student_id in sorted(per_student):
        for semester, passed in per_student[student_id].items():
            if not passed:
                continue
            transactions.append(
                Transaction(len(transactions) + 1, student_id, semester, tuple(sorted(passed)))
            )
    universe = sorted({item for t in transactions for item in t.items})
    return TransactionDB(tuple(transactions), tuple(universe))


@dataclass(frozen=True)
class DatasetSummary:
    """Aggregate statistics over a registration CSV."""

    student_count: int
    major_histogram: dict[str, int]
    transaction_count: int
    item_count: int
    length_histogram: dict[int, int]
    databases: dict[str, TransactionDB]


def summarize_dataset(
    records: Sequence[Enrollment],
    grade_threshold: int = DEFAULT_GRADE_THRESHOLD,
) -> DatasetSummary:
    """Summarize a dataset: students, majors, and per-major transactions."""
    major_of: dict[str, str] = {}
    for rec in records:
        major_of.setdefault(rec.student_id, rec.major)
    histogram: dict[str, int] = {}
    for major in major_of.values():
        histogram[major] = histogram.get(major, 0) + 1
    databases: dict[str, TransactionDB] = {}
    for major in dict.fromkeys(major_of.values()):
        databases[major] = build_transactions(records, major, grade_threshold)
    lengths: dict[int, int] = {}
    universe: set[str] = set()
    total = 0
    for db in databases.values():
        total += len(db.transactions)
        universe.update(db.item_universe)
        for t in db.transactions:
            lengths[len(t.items)] = lengths.get(len(t.items), 0) + 1
    return DatasetSummary(
        student_count=len(major_of),
        major_histogram=histogram,
        transaction_count=total,
        item_count=len(universe),
        length_histogram=dict(sorted(lengths.items())),
        databases=databases,
    )

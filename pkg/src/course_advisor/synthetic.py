"""Deterministic synthetic registration data.

Produces enrollment CSVs at a realistic scale (thousands of semester
transactions) for benchmarking and end-to-end tests. Everything is driven
by one seeded RNG, so a fixed SynthParams value always yields a
byte-identical file.

Design note on co-occurrence clusters: a cluster names an anchor course,
follower courses, and a boost probability b. After a semester's base
courses are sampled, if the anchor was passed that semester, each follower
is independently planted as a *passed* registration with probability b
(overriding a failing grade if the follower was already sampled). Followers
are therefore present in at least the planted share of anchor-passing
semesters, so the expected mined confidence of anchor -> follower is at
least b; base sampling can only add further co-occurrences. With b = 1.0
the planting is deterministic and the rule's confidence is exactly 1.

Grades: passes are drawn from [50, 100] and failures from [0, 49],
matching the default advising threshold of 50.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ingest import Enrollment, records_to_csv

PASSING_GRADE = 50


@dataclass(frozen=True)
class CourseCluster:
    """Follower courses planted into semesters where the anchor is passed."""

    anchor: str
    followers: tuple[str, ...]
    boost: float

    def __post_init__(self):
        object.__setattr__(self, "followers", tuple(self.followers))
        if not self.followers:
            raise ValueError("cluster needs at least one follower course")
        if self.anchor in self.followers:
            raise ValueError("cluster anchor cannot also be a follower")
        if not 0 <= self.boost <= 1:
            raise ValueError(f"boost {self.boost} outside [0, 1]")


@dataclass(frozen=True)
class SynthParams:
    num_students: int
    majors: tuple[str, ...] = ("CS",)
    semesters_per_student: tuple[int, int] = (2, 8)
    courses_per_semester: tuple[int, int] = (3, 6)
    course_pool_size: int = 40
    pass_rate: float = 0.85
    clusters: tuple[CourseCluster, ...] = ()
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "majors", tuple(self.majors))
        object.__setattr__(self, "clusters", tuple(self.clusters))
        if self.num_students < 1:
            raise ValueError("num_students must be >= 1")
        if not self.majors:
            raise ValueError("majors must be non-empty")
        for name in ("semesters_per_student", "courses_per_semester"):
            lo, hi = getattr(self, name)
            if not 1 <= lo <= hi:
                raise ValueError(f"{name} range ({lo}, {hi}) is empty or below 1")
        if self.course_pool_size < self.courses_per_semester[1]:
            raise ValueError("course pool must cover the largest semester draw")
        if not 0 <= self.pass_rate <= 1:
            raise ValueError(f"pass_rate {self.pass_rate} outside [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        pools = {
            course
            for index in range(len(self.majors))
            for course in course_pool(index, self.course_pool_size)
        }
        for cluster in self.clusters:
            for course in (cluster.anchor, *cluster.followers):
                if course not in pools:
                    raise ValueError(f"cluster course {course!r} is outside every major's pool")


def course_pool(major_index: int, size: int) -> list[str]:
    """The course codes of the major at this index: 7-digit, zero-padded."""
    base = (major_index + 1) * 1_000_000
    return [str(base + offset) for offset in range(size)]


def generate_enrollments(params: SynthParams) -> list[Enrollment]:
    """Generate enrollment records; deterministic for a fixed params value."""
    rng = random.Random(params.seed)
    pools = [course_pool(i, params.course_pool_size) for i in range(len(params.majors))]
    records: list[Enrollment] = []
    for number in range(1, params.num_students + 1):
        student_id = f"S{number:05d}"
        major_index = rng.randrange(len(params.majors))
        major = params.majors[major_index]
        pool = pools[major_index]
        semester_count = rng.randint(*params.semesters_per_student)
        for term in range(1, semester_count + 1):
            semester = f"Term-{term:02d}"
            grades: dict[str, int] = {}
            for course in rng.sample(pool, rng.randint(*params.courses_per_semester)):
                if rng.random() < params.pass_rate:
                    grades[course] = rng.randint(PASSING_GRADE, 100)
                else:
                    grades[course] = rng.randint(0, PASSING_GRADE - 1)
            for cluster in params.clusters:
                # boost 0 is inert: consume no randomness, change nothing
                if cluster.boost == 0 or grades.get(cluster.anchor, -1) < PASSING_GRADE:
                    continue
                for follower in cluster.followers:
                    if rng.random() < cluster.boost and grades.get(follower, -1) < PASSING_GRADE:
                        grades[follower] = rng.randint(PASSING_GRADE, 100)
            for course, grade in grades.items():
                records.append(Enrollment(student_id, major, semester, course, grade))
    return records


def generate_csv(params: SynthParams) -> str:
    return records_to_csv(generate_enrollments(params))

import pytest

from course_advisor import Enrollment, records_to_csv

# The two-student worked example: (student, major, semester, course, grade).
TABLE1_ROWS = [
    ("1", "CIT", "First-Semester-2010-2011", "A", 50),
    ("1", "CIT", "First-Semester-2010-2011", "B", 78),
    ("1", "CIT", "First-Semester-2010-2011", "C", 40),
    ("1", "CIT", "Second-Semester-2010-2011", "D", 67),
    ("1", "CIT", "Second-Semester-2010-2011", "E", 30),
    ("1", "CIT", "Second-Semester-2010-2011", "F", 50),
    ("1", "CIT", "Summer-Semester-2010-", "G", 40),
    ("1", "CIT", "Summer-Semester-2010-", "H", 90),
    ("2", "CIT", "First-Semester-2010-2011", "A", 90),
    ("2", "CIT", "First-Semester-2010-2011", "C", 78),
    ("2", "CIT", "First-Semester-2010-2011", "D", 56),
    ("2", "CIT", "First-Semester-2010-2011", "F", 84),
    ("2", "CIT", "Second-Semester-2010-2011", "G", 76),
    ("2", "CIT", "Second-Semester-2010-2011", "H", 54),
    ("2", "CIT", "Second-Semester-2010-2011", "B", 94),
    ("2", "CIT", "Summer-Semester-2010-", "L", 87),
    ("2", "CIT", "Summer-Semester-2010-", "Z", 67),
]

# The six per-semester transactions the rows above must produce at
# threshold 50, in order.
TABLE2_ITEMSETS = [
    {"A", "B"},
    {"D", "F"},
    {"H"},
    {"A", "C", "D", "F"},
    {"B", "G", "H"},
    {"L", "Z"},
]


@pytest.fixture
def table1_records() -> list[Enrollment]:
    return [Enrollment(*row) for row in TABLE1_ROWS]


@pytest.fixture
def table1_csv(table1_records) -> str:
    return records_to_csv(table1_records)

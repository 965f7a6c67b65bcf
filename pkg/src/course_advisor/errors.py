"""Error types shared across the package."""


class DataError(ValueError):
    """Base class for problems in the supplied registration data."""


class ParseError(DataError):
    """A malformed input file; carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class UnknownStudentError(DataError):
    """The requested student id does not occur in the records."""

    def __init__(self, student_id: str):
        self.student_id = student_id
        super().__init__(f"unknown student id: {student_id!r}")


class MajorConflictError(DataError):
    """One student's records name more than one major (dirty data)."""

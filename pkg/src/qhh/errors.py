"""Exception hierarchy shared across the package.

CLI exit codes hang off these classes: validation problems exit 1,
infinite-dimensional input exits 2, a failed internal cross-check exits 3.
"""


class QHHError(Exception):
    exit_code = 1


class PresentationError(QHHError):
    """Malformed or semantically invalid presentation."""


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class ValidationError(PresentationError):
    pass


class NonComposableRelation(ValidationError):
    pass


class RelationTooShort(ValidationError):
    pass


class NonMinimalZ(ValidationError):
    def __init__(self, smaller, larger):
        super().__init__(
            f"relation {smaller} is a strict subpath of relation {larger}"
        )
        self.smaller = smaller
        self.larger = larger


class DuplicateRelation(ValidationError):
    pass


class InfiniteDimensional(QHHError):
    exit_code = 2

    def __init__(self, message: str, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class InternalCrossCheckFailure(QHHError):
    """Two independent computations of the same number disagree.

    This never signals bad user input; it means a bug somewhere in the package.
    """

    exit_code = 3

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


class NotACycle(QHHError):
    pass


class NotNeat(QHHError):
    pass

"""Exception hierarchy shared by all modules."""


class AffineIdentifyError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(AffineIdentifyError, ValueError):
    """Vector length, register width or index out of range."""


class RegisterLimitError(AffineIdentifyError):
    """Requested register is larger than the configured resource guard."""

    def __init__(self, n: int, limit: int, what: str):
        self.n = n
        self.limit = limit
        self.what = what
        super().__init__(f"{what}: n={n} exceeds the configured limit of {limit}")


class FunctionFileError(AffineIdentifyError, ValueError):
    """Malformed .bfn function file."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class InconsistentCompletionError(AffineIdentifyError, ValueError):
    """A truth table disagrees with a partial function on a defined entry."""

    def __init__(self, index: int, expected: int, found: int):
        self.index = index
        super().__init__(
            f"entry {index} is defined as {expected} but the completion has {found}"
        )


class DomainError(AffineIdentifyError, ValueError):
    """Arguments outside the domain where a closed form is valid."""


class MeasurementError(AffineIdentifyError):
    """Measurement attempted on a state with an all-zero marginal."""

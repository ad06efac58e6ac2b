"""
Exception Types

Error hierarchy shared by the library and the CLI. Input problems map to
exit code 2; verification failures are report entries, not exceptions.
"""


class SchurError(Exception):
    """Base class for all library errors."""


class InputError(SchurError, ValueError):
    """Malformed matrix, unknown catalog name or out-of-range parameter."""


class NumericalError(SchurError, ArithmeticError):
    """A linear system that should be well posed turned out singular."""

    def __init__(self, message: str, condition: float | None = None) -> None:
        if condition is not None:
            message = f"{message} (condition estimate {condition:.3e})"
        super().__init__(message)
        self.condition = condition


class ConfigError(SchurError):
    """Settings file exists but cannot be parsed or validated."""

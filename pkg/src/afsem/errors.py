"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parse/usage problems exit with 1,
size/cap/search limits with 2, and assert-mode property violations with 3.
"""


class AfsemError(Exception):
    """Base class for all package-specific errors."""


class FrameworkError(AfsemError, ValueError):
    """Invalid framework construction (duplicate label, unknown endpoint)."""


class ParseError(AfsemError, ValueError):
    """Malformed APX/TGF input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LimitError(AfsemError, RuntimeError):
    """An enumeration, cap or search budget was exceeded."""


class PremiseError(AfsemError, ValueError):
    """A checker's precondition does not hold for the given inputs."""

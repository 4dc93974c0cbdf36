# filename: utils/errors.py


class AlgebraError(Exception):
    """Root of everything the algebra library raises on purpose."""


class DimensionError(AlgebraError, ValueError):
    """Spaces, arities or degrees do not fit together."""


class FormatError(AlgebraError, ValueError):
    """A structure file could not be read."""


class StructureError(AlgebraError):
    """An input failed the check a construction depends on.

    The failing report is kept on ``.report`` so callers can show the
    violated identities.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_DISAGREEMENT = 3


def exit_code_for(error: Exception) -> int:
    """Unreadable or ill-shaped input is 2, a failed precondition is 1."""
    if isinstance(error, (FormatError, DimensionError)):
        return EXIT_INPUT
    if isinstance(error, StructureError):
        return EXIT_VIOLATION
    raise error

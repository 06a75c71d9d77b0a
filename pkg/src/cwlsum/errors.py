"""Exception hierarchy shared by the library and the command line."""


class CwlError(Exception):
    """Base class for every error raised by cwlsum."""


class RingMismatchError(CwlError, ValueError):
    pass


class DegenerateIdealError(CwlError, ValueError):
    """Raised when an operation needs a nonzero (or non-unit) ideal."""


class AssignmentError(CwlError, ValueError):
    """A full-set assignment failed validation and assembly was not forced."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class CrossCheckError(CwlError, AssertionError):
    """Two independent computations disagreed; always a bug."""


class ParseError(CwlError, ValueError):
    """Source-located error from the ideal document parser.

    ``code`` is one of the ``E...`` constants in :mod:`cwlsum.io.parser`.
    """

    def __init__(self, code, message, line=0, col=0):
        self.code = code
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"{code} at {line}:{col}: {message}")

"""Exception hierarchy.

Every error caused by the *data* (rather than by a programming mistake or a
bad command line) derives from :class:`DataError`, which the CLI maps to exit
status 1.
"""


class PeerStatsError(Exception):
    """Base class for all package errors."""


class DataError(PeerStatsError, ValueError):
    """Input data cannot be processed."""


class EmptyInput(DataError):
    pass


class MalformedLine(DataError):
    """A data line has the wrong column count or a non-numeric token."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class QualityOutOfRange(MalformedLine):
    pass


class NonpositiveIndicator(MalformedLine):
    pass


class EmptyGroup(DataError):
    pass


class LengthMismatch(DataError):
    pass


class DegenerateInput(DataError):
    """A constant vector makes a correlation undefined."""


class StatisticUndefined(DataError):
    pass


class TooManyDegenerateResamples(DataError):
    pass


class DivisionByNonpositive(DataError):
    pass

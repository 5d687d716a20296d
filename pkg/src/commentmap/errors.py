"""Shared exception types."""


class CommentMapError(Exception):
    """Base class for all package errors."""


class IngestError(CommentMapError):
    """Raised when an input file cannot be parsed or validated.

    ``line`` is the 1-based line number of the offending record when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PipelineError(CommentMapError):
    """Raised when a layout pipeline stage fails; carries the stage name."""

    def __init__(self, stage, message):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


class ClassifierTransportError(CommentMapError):
    """Raised when a remote classifier call fails after retries."""


class GridExhaustedError(CommentMapError):
    """Raised when the hex grid cannot fit all comments after densification retries."""

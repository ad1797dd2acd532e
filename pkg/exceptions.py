"""
Exception hierarchy for django_fuzzy_segmentation.

Every error raised by the engine or the I/O layer derives from
SegmentationError. Management commands map these onto exit codes:
InfeasibleError exits with 2, everything else with 1.
"""

from typing import Optional


class SegmentationError(Exception):
    """Base exception for segmentation operations."""

    exit_code: int = 1


class DegreeError(SegmentationError, ValueError):
    """A membership degree lies outside [0, 1] or cannot be parsed."""
    pass


class AlphabetError(SegmentationError, ValueError):
    """A text character is not part of the declared alphabet."""

    def __init__(self, message: str, position: Optional[int] = None, char: Optional[str] = None):
        super().__init__(message)
        self.position = position
        self.char = char


class ArityError(SegmentationError):
    """A unit-length symbol was evaluated on a string of another length."""
    pass


class PreconditionError(SegmentationError):
    """An operation was called outside its precondition."""
    pass


class InfeasibleError(SegmentationError):
    """The constraints admit no solution (m * lambda > n)."""

    exit_code = 2


class EnumerationLimitError(SegmentationError):
    """A brute-force oracle exceeded its candidate cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class PatternFileError(SegmentationError):
    """
    A pattern file is malformed or fails validation.

    Attributes:
        diagnostics: One entry per problem, prefixed with a line number
            ("line 3 column 5: ...") or a dotted field path ("symbols.S.kind: ...").
    """

    def __init__(self, message: str, diagnostics: Optional[list[str]] = None):
        self.diagnostics = diagnostics or []
        if self.diagnostics:
            message = f"{message}:\n" + "\n".join(f"  {d}" for d in self.diagnostics)
        super().__init__(message)

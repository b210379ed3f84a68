"""Exception types shared across the package.

Every error exposes a short machine-readable ``code`` (the class name) and
an optional 1-based ``index`` pointing at the offending knot or record, so
the CLI and the HTTP service can report failures uniformly.
"""
from __future__ import annotations


class CurveError(Exception):
    """Base class for all validation and evaluation errors."""

    def __init__(self, message: str, *, index: int | None = None):
        super().__init__(message)
        self.index = index

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        out = {"error": self.code, "detail": str(self)}
        if self.index is not None:
            out["index"] = self.index
        return out


class InvalidGrid(CurveError):
    """Data sites are unusable: too few, not strictly increasing, or non-finite."""


class InvalidPlacement(CurveError):
    """Placement parameters are out of range or sized wrong for the grid."""


class KnotOutOfInterval(CurveError):
    """A prescribed secondary knot falls outside its admissible interval."""


class DegenerateSegment(CurveError):
    """A segment's length is too small relative to the data scale."""


class DegeneratePlacement(CurveError):
    """A placement fraction is too close to zero for stable formulas."""


class UnstableC1(CurveError):
    """The leading error constant is too small to divide by."""


class OutOfDomain(CurveError):
    """Evaluation abscissa lies outside the curve's domain."""


class IndexOutOfRange(CurveError):
    """Knot or segment number outside the valid 2..N-1 range."""


class ParseError(CurveError):
    """Input document is malformed."""


class NotStrictlyIncreasing(CurveError):
    """Dataset abscissas are not strictly increasing."""


class LengthMismatch(CurveError):
    """Paired dataset arrays have different lengths."""


class NonPositiveError(CurveError):
    """A convergence order was requested from a non-positive error."""


class UnknownFunction(CurveError):
    """Requested test function is not registered."""


class InvalidRequest(CurveError):
    """Request body is missing fields or has wrong types."""

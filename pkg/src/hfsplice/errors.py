"""Exception hierarchy shared across the package."""

from __future__ import annotations

__all__ = [
    "HfspliceError",
    "DimensionMismatch",
    "SingularMatrix",
    "NotIdentityBlock",
    "IndexOutOfRange",
    "DataFormatError",
]


class HfspliceError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(HfspliceError):
    """Shapes of the operands do not fit together."""


class SingularMatrix(HfspliceError):
    """A square matrix required to be invertible over GF(2) is not."""


class NotIdentityBlock(HfspliceError):
    """A cancellation pivot is not an identity matrix."""


class IndexOutOfRange(HfspliceError):
    """A block coordinate refers to a row or column that does not exist."""


class DataFormatError(HfspliceError):
    """An input file or JSON object does not match the expected schema."""

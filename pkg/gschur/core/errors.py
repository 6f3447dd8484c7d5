"""
Error Types - gschur/core/errors.py

Exceptions raised by the library. Mathematical checks that can fail
legitimately (axioms, certification, multiplicities) return reports instead.
"""

from __future__ import annotations

from typing import Optional


class GSchurError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(GSchurError, ValueError):
    """Vectors or subspaces live in different ambient dimensions."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")


class DegreeMismatchError(GSchurError, ValueError):
    """Elements or weights of different degrees were combined."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"degree mismatch: expected {expected}, got {got}")


class PreconditionError(GSchurError, ValueError):
    """An operation was called outside its documented range."""


class HeredityDataError(GSchurError):
    """Heredity data is malformed (missing products, unknown colors, ...)."""


class HeredityViolation(GSchurError):
    """A reduction that must close inside a standard module did not."""


class CharacterDecompositionError(GSchurError):
    """A character is not a non-negative sum of standard characters."""


class CertificationError(GSchurError):
    """A filtration failed certification under strict mode."""


class AlgebraFileError(GSchurError):
    """An algebra JSON file could not be parsed or validated."""

    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        where = f" at {location}" if location else ""
        super().__init__(f"{message}{where}")


__all__ = [
    "GSchurError",
    "DimensionMismatchError",
    "DegreeMismatchError",
    "PreconditionError",
    "HeredityDataError",
    "HeredityViolation",
    "CharacterDecompositionError",
    "CertificationError",
    "AlgebraFileError",
]

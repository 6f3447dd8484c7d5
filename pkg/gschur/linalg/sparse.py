"""
Sparse Vectors - gschur/linalg/sparse.py

Exact rational scalars and sparse vectors keyed by basis index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from gschur.core.errors import DimensionMismatchError

Scalar = Fraction
ScalarLike = Union[int, Fraction]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int or Fraction to a Fraction (lowest terms by construction)."""
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class SparseVector:
    """
    Vector over Q stored as {index: value} with no explicit zeros.

    The entries mapping is never mutated after construction; arithmetic
    returns new vectors.
    """

    entries: Mapping[int, Fraction]
    dim: int
    _key: Tuple[Tuple[int, Fraction], ...] = field(
        init=False, repr=False, compare=False, hash=False, default=()
    )

    def __post_init__(self) -> None:
        clean: Dict[int, Fraction] = {}
        for index, value in self.entries.items():
            if not 0 <= index < self.dim:
                raise IndexError(f"index {index} outside dimension {self.dim}")
            value = as_scalar(value)
            if value:
                clean[index] = value
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "_key", tuple(sorted(clean.items())))

    # =========================================================================
    # CONSTRUCTORS
    # =========================================================================

    @classmethod
    def zero(cls, dim: int) -> "SparseVector":
        return cls({}, dim)

    @classmethod
    def unit(cls, index: int, dim: int) -> "SparseVector":
        return cls({index: Fraction(1)}, dim)

    @classmethod
    def from_dense(cls, values: Iterable[ScalarLike]) -> "SparseVector":
        values = list(values)
        return cls({k: as_scalar(v) for k, v in enumerate(values) if v}, len(values))

    # =========================================================================
    # ACCESS
    # =========================================================================

    def __getitem__(self, index: int) -> Fraction:
        return self.entries.get(index, Fraction(0))

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._key)

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.dim == other.dim and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.dim, self._key))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(index for index, _ in self._key)

    @property
    def pivot(self) -> int:
        """First nonzero coordinate; -1 for the zero vector."""
        return self._key[0][0] if self._key else -1

    def to_dense(self) -> list:
        return [self[k] for k in range(self.dim)]

    # =========================================================================
    # ARITHMETIC
    # =========================================================================

    def _check(self, other: "SparseVector") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(self.dim, other.dim)

    def __add__(self, other: "SparseVector") -> "SparseVector":
        self._check(other)
        out = dict(self.entries)
        for index, value in other.entries.items():
            out[index] = out.get(index, 0) + value
        return SparseVector(out, self.dim)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + other.scale(-1)

    def __neg__(self) -> "SparseVector":
        return self.scale(-1)

    def scale(self, factor: ScalarLike) -> "SparseVector":
        factor = as_scalar(factor)
        if not factor:
            return SparseVector.zero(self.dim)
        return SparseVector({k: v * factor for k, v in self.entries.items()}, self.dim)

    def __mul__(self, factor: ScalarLike) -> "SparseVector":
        return self.scale(factor)

    __rmul__ = __mul__

    def axpy(self, factor: ScalarLike, other: "SparseVector") -> "SparseVector":
        """Return self + factor * other."""
        self._check(other)
        factor = as_scalar(factor)
        if not factor:
            return self
        out = dict(self.entries)
        for index, value in other.entries.items():
            out[index] = out.get(index, 0) + factor * value
        return SparseVector(out, self.dim)

    def restrict(self, indices: Iterable[int]) -> "SparseVector":
        """Zero every coordinate outside `indices`."""
        keep = set(indices)
        return SparseVector(
            {k: v for k, v in self.entries.items() if k in keep}, self.dim
        )


def linear_combination(
    terms: Iterable[Tuple[ScalarLike, SparseVector]], dim: int
) -> SparseVector:
    """Sum of c * v over the given (c, v) pairs."""
    out: Dict[int, Fraction] = {}
    for coef, vec in terms:
        if vec.dim != dim:
            raise DimensionMismatchError(dim, vec.dim)
        coef = as_scalar(coef)
        if not coef:
            continue
        for index, value in vec.entries.items():
            out[index] = out.get(index, 0) + coef * value
    return SparseVector(out, dim)


def tensor_vectors(left: SparseVector, right: SparseVector) -> SparseVector:
    """Kronecker product with index a * right.dim + b."""
    out = {
        a * right.dim + b: x * y
        for a, x in left.entries.items()
        for b, y in right.entries.items()
    }
    return SparseVector(out, left.dim * right.dim)


__all__ = [
    "Scalar",
    "ScalarLike",
    "SparseVector",
    "as_scalar",
    "linear_combination",
    "tensor_vectors",
]

"""
Echelon Forms - gschur/linalg/echelon.py

Reduced row-echelon subspaces over Q: echelonize, membership, residuals,
tracked expression in terms of generators, and closure under operators.

Pivot of a row is its first nonzero coordinate, normalized to 1. Every
row vanishes at every other row's pivot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from gschur.core.errors import DimensionMismatchError
from gschur.linalg.sparse import SparseVector

Operator = Callable[[SparseVector], SparseVector]


# =============================================================================
# IMMUTABLE SUBSPACE
# =============================================================================


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^dim given by RREF rows sorted by pivot."""

    rows: Tuple[SparseVector, ...]
    dim: int

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(row.pivot for row in self.rows)

    def __contains__(self, v: SparseVector) -> bool:
        return member(self, v) is not None

    def is_full(self) -> bool:
        return self.rank == self.dim


def _check_dim(expected: int, v: SparseVector) -> None:
    if v.dim != expected:
        raise DimensionMismatchError(expected, v.dim)


# =============================================================================
# MUTABLE BUILDER
# =============================================================================


class EchelonBuilder:
    """
    Incremental RREF. Optionally tracks each row as a combination of the
    inserted generators (generator k is the k-th call to add()).
    """

    def __init__(self, dim: int, track: bool = False):
        self.dim = dim
        self.track = track
        self._rows: Dict[int, SparseVector] = {}
        self._combos: Dict[int, Dict[int, Fraction]] = {}
        self._generators = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def generator_count(self) -> int:
        return self._generators

    def residual(self, v: SparseVector) -> Tuple[SparseVector, Dict[int, Fraction]]:
        """Reduce v against the current rows; returns (residual, coefficients by pivot)."""
        _check_dim(self.dim, v)
        coords: Dict[int, Fraction] = {}
        out = dict(v.entries)
        for pivot in sorted(p for p in v.entries if p in self._rows):
            c = out.get(pivot)
            if not c:
                continue
            coords[pivot] = c
            for index, value in self._rows[pivot].entries.items():
                out[index] = out.get(index, 0) - c * value
        return SparseVector(out, self.dim), coords

    def add(self, v: SparseVector) -> bool:
        """Insert v. Returns True when the rank grew."""
        generator = self._generators
        self._generators += 1
        residual, coords = self.residual(v)
        if residual.is_zero:
            return False

        combo: Dict[int, Fraction] = {}
        if self.track:
            combo[generator] = Fraction(1)
            for pivot, c in coords.items():
                for g, w in self._combos[pivot].items():
                    combo[g] = combo.get(g, 0) - c * w

        pivot = residual.pivot
        lead = residual[pivot]
        row = residual.scale(1 / lead)
        if self.track:
            combo = {g: w / lead for g, w in combo.items() if w}

        # Keep reduced form: clear the new pivot from existing rows
        for other_pivot, other in list(self._rows.items()):
            c = other[pivot]
            if c:
                self._rows[other_pivot] = other.axpy(-c, row)
                if self.track:
                    merged = dict(self._combos[other_pivot])
                    for g, w in combo.items():
                        merged[g] = merged.get(g, 0) - c * w
                    self._combos[other_pivot] = {g: w for g, w in merged.items() if w}

        self._rows[pivot] = row
        if self.track:
            self._combos[pivot] = combo
        return True

    def extend(self, vectors: Iterable[SparseVector]) -> List[SparseVector]:
        """Add each vector; return the ones that increased the rank."""
        return [v for v in vectors if self.add(v)]

    def contains(self, v: SparseVector) -> bool:
        return self.residual(v)[0].is_zero

    def freeze(self) -> Subspace:
        return Subspace(tuple(self._rows[p] for p in sorted(self._rows)), self.dim)

    def express(self, v: SparseVector) -> Optional[Dict[int, Fraction]]:
        """Coordinates of v over the inserted generators, or None if v is outside."""
        if not self.track:
            raise RuntimeError("express() requires a tracking builder")
        residual, coords = self.residual(v)
        if not residual.is_zero:
            return None
        out: Dict[int, Fraction] = {}
        for pivot, c in coords.items():
            for g, w in self._combos[pivot].items():
                out[g] = out.get(g, 0) + c * w
        return {g: w for g, w in out.items() if w}


# =============================================================================
# OPERATIONS
# =============================================================================


def echelonize(vectors: Sequence[SparseVector], dim: Optional[int] = None) -> Subspace:
    """RREF of the span of `vectors`. An empty list spans the zero subspace."""
    if dim is None:
        dim = vectors[0].dim if vectors else 0
    builder = EchelonBuilder(dim)
    for v in vectors:
        _check_dim(dim, v)
        builder.add(v)
    return builder.freeze()


def reduce(S: Subspace, v: SparseVector) -> SparseVector:
    """Residual of v modulo S."""
    _check_dim(S.dim, v)
    out = dict(v.entries)
    for row in S.rows:
        c = out.get(row.pivot)
        if c:
            for index, value in row.entries.items():
                out[index] = out.get(index, 0) - c * value
    return SparseVector(out, S.dim)


def member(S: Subspace, v: SparseVector) -> Optional[List[Fraction]]:
    """Coordinates c with sum c_k row_k = v, or None when v is not in S."""
    _check_dim(S.dim, v)
    coords = [v[row.pivot] for row in S.rows]
    residual = v
    for c, row in zip(coords, S.rows):
        if c:
            residual = residual.axpy(-c, row)
    return coords if residual.is_zero else None


def closure(
    seed: Sequence[SparseVector], operators: Sequence[Operator], dim: Optional[int] = None
) -> Subspace:
    """Smallest subspace containing `seed` and stable under every operator."""
    if dim is None:
        dim = seed[0].dim if seed else 0
    builder = EchelonBuilder(dim)
    frontier = builder.extend(seed)
    while frontier:
        grown: List[SparseVector] = []
        for v in frontier:
            for op in operators:
                w = op(v)
                if builder.add(w):
                    grown.append(w)
        frontier = grown
    return builder.freeze()


def span_images(
    seed: Sequence[SparseVector],
    operators: Sequence[Operator],
    dim: int,
    base: Optional[Subspace] = None,
) -> Subspace:
    """
    base + span{op(v) : v in seed, op in operators}.

    Equals the closure when the operators span a unital algebra acting on
    the ambient space.
    """
    builder = EchelonBuilder(dim)
    if base is not None:
        builder.extend(base.rows)
    for v in seed:
        _check_dim(dim, v)
        for op in operators:
            builder.add(op(v))
    return builder.freeze()


class TrackedSpan:
    """Span of fixed generators that can express members in generator coordinates."""

    def __init__(self, generators: Sequence[SparseVector], dim: int):
        self.dim = dim
        self.generators = tuple(generators)
        self._builder = EchelonBuilder(dim, track=True)
        for g in self.generators:
            _check_dim(dim, g)
            self._builder.add(g)

    @property
    def rank(self) -> int:
        return self._builder.rank

    @property
    def independent(self) -> bool:
        return self.rank == len(self.generators)

    def subspace(self) -> Subspace:
        return self._builder.freeze()

    def residual(self, v: SparseVector) -> SparseVector:
        return self._builder.residual(v)[0]

    def express(self, v: SparseVector) -> Optional[List[Fraction]]:
        """Coordinates over the generators (dense list), or None if v is outside."""
        coords = self._builder.express(v)
        if coords is None:
            return None
        return [coords.get(k, Fraction(0)) for k in range(len(self.generators))]


def quotient_dimension(big: Subspace, small: Subspace) -> int:
    """dim(big / small); requires small to lie inside big."""
    for row in small.rows:
        if member(big, row) is None:
            raise ValueError("quotient_dimension requires small ⊆ big")
    return big.rank - small.rank


__all__ = [
    "Operator",
    "Subspace",
    "EchelonBuilder",
    "echelonize",
    "reduce",
    "member",
    "closure",
    "span_images",
    "TrackedSpan",
    "quotient_dimension",
]

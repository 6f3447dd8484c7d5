"""
Heredity Data - gschur/superalg/data.py

The base superalgebra A: poset I, colored sets X(i), Y(i) with parities,
heredity basis B = {x·y}, and the integer multiplication table on B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from gschur.combinat.partitions import Poset
from gschur.core.errors import HeredityDataError
from gschur.linalg.echelon import TrackedSpan
from gschur.linalg.sparse import SparseVector, linear_combination

# =============================================================================
# TYPES
# =============================================================================

AElement = SparseVector
BasisKey = Tuple[str, str]


@dataclass(frozen=True)
class Color:
    """A heredity element x ∈ X(i) or y ∈ Y(i)."""

    name: str
    parity: int
    label: int
    flavor: str  # "X" or "Y"
    rank: int
    declared_left: Optional[int] = None
    declared_right: Optional[int] = None

    @property
    def odd(self) -> bool:
        return self.parity == 1


@dataclass(frozen=True)
class BasisElement:
    """b = x·y with x ∈ X(i), y ∈ Y(i)."""

    x: Color
    y: Color
    label: int

    @property
    def key(self) -> BasisKey:
        return (self.x.name, self.y.name)

    @property
    def parity(self) -> int:
        return (self.x.parity + self.y.parity) % 2

    @property
    def in_bc(self) -> bool:
        """x and y both odd."""
        return self.x.odd and self.y.odd

    @property
    def in_ba(self) -> bool:
        """x and y both even."""
        return not self.x.odd and not self.y.odd

    @property
    def name(self) -> str:
        return f"{self.x.name}*{self.y.name}"


@dataclass(frozen=True)
class ColorSpec:
    name: str
    parity: int
    left: Optional[int] = None
    right: Optional[int] = None


def initial_name(label: int) -> str:
    return f"e{label}"


# =============================================================================
# HEREDITY DATA
# =============================================================================


class HeredityData:
    """
    Based quasi-hereditary superalgebra data over Z.

    Basis order (and hence every index used downstream) is by
    (poset label, X-rank, Y-rank).
    """

    def __init__(
        self,
        name: str,
        poset: Poset,
        X: Mapping[int, Sequence[ColorSpec]],
        Y: Mapping[int, Sequence[ColorSpec]],
        products: Mapping[Tuple[BasisKey, BasisKey], Mapping[BasisKey, int]],
    ):
        self.name = name
        self.poset = poset
        self._verified = False

        self.X: Dict[int, Tuple[Color, ...]] = {}
        self.Y: Dict[int, Tuple[Color, ...]] = {}
        for label in poset.labels:
            if label not in X or label not in Y:
                raise HeredityDataError(f"component {label} missing X or Y colors")
            self.X[label] = self._colors(label, "X", X[label])
            self.Y[label] = self._colors(label, "Y", Y[label])

        self._x_by_name = {c.name: c for cs in self.X.values() for c in cs}
        self._y_by_name = {c.name: c for cs in self.Y.values() for c in cs}
        if len(self._x_by_name) != sum(len(cs) for cs in self.X.values()):
            raise HeredityDataError("X color names must be unique")
        if len(self._y_by_name) != sum(len(cs) for cs in self.Y.values()):
            raise HeredityDataError("Y color names must be unique")

        basis: List[BasisElement] = []
        for label in poset.labels:
            for x in self.X[label]:
                for y in self.Y[label]:
                    basis.append(BasisElement(x, y, label))
        self.basis: Tuple[BasisElement, ...] = tuple(basis)
        self.dim = len(basis)
        self._index = {b.key: k for k, b in enumerate(basis)}

        self._table: Dict[Tuple[int, int], SparseVector] = {}
        for (left, right), result in products.items():
            a, b = self.index_of(left), self.index_of(right)
            entries: Dict[int, Fraction] = {}
            for key, coef in result.items():
                k = self.index_of(key)
                entries[k] = entries.get(k, 0) + Fraction(coef)
            self._table[(a, b)] = SparseVector(entries, self.dim)
        missing = [
            (self.basis[a].name, self.basis[b].name)
            for a in range(self.dim)
            for b in range(self.dim)
            if (a, b) not in self._table
        ]
        if missing:
            raise HeredityDataError(
                f"multiplication table is not total; missing {missing[0][0]} · {missing[0][1]}"
                f" and {len(missing) - 1} more"
            )

        self._left_idem = {
            (c.flavor, c.name): self._idempotent_of(c, side="left") for c in self.colors()
        }
        self._right_idem = {
            (c.flavor, c.name): self._idempotent_of(c, side="right") for c in self.colors()
        }

    # =========================================================================
    # CONSTRUCTION HELPERS
    # =========================================================================

    @staticmethod
    def _colors(label: int, flavor: str, specs: Sequence[ColorSpec]) -> Tuple[Color, ...]:
        if not specs or specs[0].name != initial_name(label):
            raise HeredityDataError(
                f"{flavor}({label}) must start with the initial element {initial_name(label)}"
            )
        if specs[0].parity != 0:
            raise HeredityDataError(f"initial element {initial_name(label)} must be even")
        return tuple(
            Color(s.name, int(s.parity), label, flavor, rank, s.left, s.right)
            for rank, s in enumerate(specs)
        )

    def _idempotent_of(self, color: Color, side: str) -> Optional[int]:
        """The unique j with e_j c = c (side='left') or c e_j = c (side='right')."""
        v = self.color_vector(color)
        hits = []
        for label in self.poset.labels:
            e = self.e(label)
            product = self.multiply(e, v) if side == "left" else self.multiply(v, e)
            if product == v:
                hits.append(label)
        return hits[0] if len(hits) == 1 else None

    # =========================================================================
    # LOOKUP
    # =========================================================================

    def index_of(self, key: BasisKey) -> int:
        try:
            return self._index[tuple(key)]
        except KeyError:
            raise HeredityDataError(f"unknown basis element {key[0]}*{key[1]}") from None

    def colors(self) -> List[Color]:
        return [c for label in self.poset.labels for c in self.X[label] + self.Y[label]]

    def x_color(self, name: str) -> Color:
        try:
            return self._x_by_name[name]
        except KeyError:
            raise HeredityDataError(f"unknown X color {name!r}") from None

    def y_color(self, name: str) -> Color:
        try:
            return self._y_by_name[name]
        except KeyError:
            raise HeredityDataError(f"unknown Y color {name!r}") from None

    def x_index(self, name: str) -> int:
        """Index of x = x·e_i in B."""
        x = self.x_color(name)
        return self._index[(x.name, initial_name(x.label))]

    def y_index(self, name: str) -> int:
        """Index of y = e_i·y in B."""
        y = self.y_color(name)
        return self._index[(initial_name(y.label), y.name)]

    def e_index(self, label: int) -> int:
        name = initial_name(label)
        return self._index[(name, name)]

    def color_vector(self, color: Color) -> AElement:
        k = self.x_index(color.name) if color.flavor == "X" else self.y_index(color.name)
        return SparseVector.unit(k, self.dim)

    def e(self, label: int) -> AElement:
        return SparseVector.unit(self.e_index(label), self.dim)

    def left_idempotent(self, color: Color) -> Optional[int]:
        return self._left_idem[(color.flavor, color.name)]

    def right_idempotent(self, color: Color) -> Optional[int]:
        return self._right_idem[(color.flavor, color.name)]

    def parity_of_index(self, k: int) -> int:
        return self.basis[k].parity

    def parity(self, a: AElement) -> Optional[int]:
        """Parity of a homogeneous element; None for zero or mixed support."""
        parities = {self.basis[k].parity for k in a.support}
        return parities.pop() if len(parities) == 1 else None

    @property
    def bc_indices(self) -> Tuple[int, ...]:
        return tuple(k for k, b in enumerate(self.basis) if b.in_bc)

    @property
    def ba_indices(self) -> Tuple[int, ...]:
        return tuple(k for k, b in enumerate(self.basis) if b.in_ba)

    def ideal_above(self, label: int) -> Tuple[int, ...]:
        """Indices of A^{>i} = span{xy : j > i}."""
        return tuple(k for k, b in enumerate(self.basis) if self.poset.lt(label, b.label))

    @property
    def verified(self) -> bool:
        return self._verified

    def mark_verified(self) -> None:
        self._verified = True

    # =========================================================================
    # MULTIPLICATION
    # =========================================================================

    def structure(self, a: int, b: int) -> SparseVector:
        """κ^·_{a,b}: the product of two basis elements."""
        return self._table[(a, b)]

    def multiply(self, u: AElement, v: AElement) -> AElement:
        terms = [
            (x * y, self._table[(a, b)])
            for a, x in u.entries.items()
            for b, y in v.entries.items()
        ]
        return linear_combination(terms, self.dim)

    def unit(self) -> Optional[AElement]:
        """Solve u·b = b = b·u for all b ∈ B; None when A has no unit."""
        width = self.dim
        ambient = 2 * width * width
        generators = []
        for a in range(width):
            entries: Dict[int, Fraction] = {}
            for b in range(width):
                for c, value in self._table[(a, b)].entries.items():
                    entries[b * width + c] = value
                for c, value in self._table[(b, a)].entries.items():
                    entries[width * width + b * width + c] = value
            generators.append(SparseVector(entries, ambient))
        target = {}
        for b in range(width):
            target[b * width + b] = Fraction(1)
            target[width * width + b * width + b] = Fraction(1)
        coords = TrackedSpan(generators, ambient).express(SparseVector(target, ambient))
        if coords is None:
            return None
        return SparseVector({k: c for k, c in enumerate(coords) if c}, width)

    def element_name(self, a: AElement) -> str:
        if a.is_zero:
            return "0"
        return " + ".join(f"{c}·{self.basis[k].name}" for k, c in a)

    def __repr__(self) -> str:
        return f"HeredityData(name={self.name!r}, I={self.poset.labels}, dim={self.dim})"


def multiply_A(A: HeredityData, a: AElement, b: AElement) -> AElement:
    """Bilinear extension of the table."""
    return A.multiply(a, b)


__all__ = [
    "AElement",
    "BasisElement",
    "Color",
    "ColorSpec",
    "HeredityData",
    "initial_name",
    "multiply_A",
]

"""
Colored Tableaux - gschur/combinat/tableaux.py

Standard X- and Y-colored tableaux of multipartition shape, reading words
and weights.

A node of component i holds a letter r ∈ [n] and a color from X(i) (or
Y(i)). Entries compare by (letter, color rank). Along a row entries weakly
increase, with equality only for an even color; down a column they weakly
increase, with equality only for an odd color.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from gschur.combinat.partitions import (
    Multipartition,
    Weight,
    enumerate_multipartitions,
    iota,
    multi_trim,
)
from gschur.core.errors import HeredityDataError
from gschur.superalg.data import Color, HeredityData

Entry = Tuple[int, str]  # (letter, color name)
Rows = Tuple[Tuple[Entry, ...], ...]

# =============================================================================
# TABLEAU
# =============================================================================


@dataclass(frozen=True)
class ColoredTableau:
    """
    Filling of a multipartition shape; entries[k][r][s] is the entry of
    row r, column s in slot k (slots in increasing label order).
    """

    shape: Multipartition
    entries: Tuple[Rows, ...]
    flavor: str = "X"
    n: int = 1

    def nodes(self) -> Iterator[Tuple[int, int, int, Entry]]:
        """(slot, row, column, entry) in reading order."""
        for slot, rows in enumerate(self.entries):
            for r, row in enumerate(rows):
                for s, entry in enumerate(row):
                    yield slot, r, s, entry

    @property
    def size(self) -> int:
        return sum(len(row) for rows in self.entries for row in rows)

    def __str__(self) -> str:
        pieces = []
        for rows in self.entries:
            pieces.append(
                "/".join(" ".join(f"{letter}^{color}" for letter, color in row) for row in rows)
            )
        return " | ".join(pieces)


def _palette(A: HeredityData, label: int, flavor: str) -> Tuple[Color, ...]:
    if flavor == "X":
        return A.X[label]
    if flavor == "Y":
        return A.Y[label]
    raise ValueError(f"flavor must be 'X' or 'Y', got {flavor!r}")


def _color(A: HeredityData, flavor: str, name: str) -> Color:
    return A.x_color(name) if flavor == "X" else A.y_color(name)


# =============================================================================
# ENUMERATION
# =============================================================================


def _fillings(shape: Sequence[int], palette: Sequence[Color], n: int) -> Iterator[Rows]:
    """Standard fillings of one component, lexicographic in the reading word."""
    alphabet = [(letter, color) for letter in range(1, n + 1) for color in palette]
    cells = [(r, s) for r, length in enumerate(shape) for s in range(length)]
    chosen: Dict[Tuple[int, int], int] = {}

    def admissible(r: int, s: int, k: int) -> bool:
        _, color = alphabet[k]
        if s > 0:
            left = chosen[(r, s - 1)]
            if k < left or (k == left and color.odd):
                return False
        if r > 0:
            above = chosen[(r - 1, s)]
            if k < above or (k == above and not color.odd):
                return False
        return True

    def walk(position: int) -> Iterator[Rows]:
        if position == len(cells):
            yield tuple(
                tuple(
                    (alphabet[chosen[(r, s)]][0], alphabet[chosen[(r, s)]][1].name)
                    for s in range(length)
                )
                for r, length in enumerate(shape)
            )
            return
        r, s = cells[position]
        for k in range(len(alphabet)):
            if admissible(r, s, k):
                chosen[(r, s)] = k
                yield from walk(position + 1)
        chosen.pop((r, s), None)

    yield from walk(0)


def enumerate_std_tableaux(
    shape: Multipartition, flavor: str, A: HeredityData, n: int
) -> List[ColoredTableau]:
    """Std^X(λ) (or Std^Y(λ)) at width n, lexicographic in the reading word."""
    shape = multi_trim(shape)
    if len(shape) != len(A.poset):
        raise ValueError(f"shape has {len(shape)} components, poset has {len(A.poset)}")
    pools = [
        list(_fillings(component, _palette(A, label, flavor), n))
        for component, label in zip(shape, A.poset.labels)
    ]
    return [ColoredTableau(shape, tuple(choice), flavor, n) for choice in product(*pools)]


def has_std_tableau(shape: Multipartition, flavor: str, A: HeredityData, n: int) -> bool:
    shape = multi_trim(shape)
    return all(
        next(_fillings(component, _palette(A, label, flavor), n), None) is not None
        for component, label in zip(shape, A.poset.labels)
    )


def restricted_multipartitions(n: int, d: int, A: HeredityData) -> List[Multipartition]:
    """Par_+^X(n,d): λ with at most d rows per slot admitting a width-n X-tableau."""
    return [
        la
        for la in enumerate_multipartitions(max(d, 1), d, A.poset)
        if has_std_tableau(la, "X", A, n)
    ]


# =============================================================================
# SPECIAL TABLEAUX
# =============================================================================


def initial_tableau(
    shape: Multipartition, A: HeredityData, flavor: str = "X", n: Optional[int] = None
) -> ColoredTableau:
    """T^λ: node (r, s) of slot i holds r^{e_i}."""
    shape = multi_trim(shape)
    entries = tuple(
        tuple(
            tuple((r + 1, _palette(A, label, flavor)[0].name) for _ in range(length))
            for r, length in enumerate(component)
        )
        for component, label in zip(shape, A.poset.labels)
    )
    if n is None:
        n = max((len(component) for component in shape), default=1) or 1
    return ColoredTableau(shape, entries, flavor, n)


def column_tableau(P: Sequence[int], label: int, A: HeredityData, n: int) -> ColoredTableau:
    """T^P: a single column in slot `label` reading p_1 < … < p_c, colored e_i."""
    slot = A.poset.position(label)
    name = A.X[label][0].name
    shape = iota(slot, (1,) * len(P), len(A.poset))
    entries = tuple(
        tuple(((p, name),) for p in P) if k == slot else ()
        for k in range(len(A.poset))
    )
    return ColoredTableau(shape, entries, "X", n)


# =============================================================================
# READING WORDS AND WEIGHTS
# =============================================================================


def reading_word(T: ColoredTableau) -> Tuple[Tuple[int, ...], Tuple[str, ...]]:
    """Row-by-row, left to right, slots in label order."""
    letters: List[int] = []
    colors: List[str] = []
    for _, _, _, (letter, color) in T.nodes():
        letters.append(letter)
        colors.append(color)
    return tuple(letters), tuple(colors)


def _weight(T: ColoredTableau, A: HeredityData, side: str) -> Weight:
    counts = [[0] * T.n for _ in A.poset.labels]
    for _, _, _, (letter, name) in T.nodes():
        color = _color(A, T.flavor, name)
        label: Optional[int] = (
            A.left_idempotent(color) if side == "left" else A.right_idempotent(color)
        )
        if label is None:
            raise HeredityDataError(f"color {name!r} has no unique {side} idempotent")
        counts[A.poset.position(label)][letter - 1] += 1
    return tuple(tuple(row) for row in counts)


def tableau_weight(T: ColoredTableau, A: HeredityData) -> Weight:
    """Left weight: letters grouped by the left idempotent of their color."""
    return _weight(T, A, "left")


def right_weight(T: ColoredTableau, A: HeredityData) -> Weight:
    """Letters grouped by the right idempotent of their color."""
    return _weight(T, A, "right")


def node_rows(T: ColoredTableau) -> Tuple[int, ...]:
    """Row index (1-based) of every node in reading order."""
    return tuple(r + 1 for _, r, _, _ in T.nodes())


# =============================================================================
# CHECKER
# =============================================================================


def check_tableau(T: ColoredTableau, A: HeredityData) -> List[str]:
    """Problems with T as a standard tableau; empty when T is standard."""
    problems: List[str] = []
    if len(T.entries) != len(A.poset):
        return [f"expected {len(A.poset)} components, got {len(T.entries)}"]
    for slot, (rows, label) in enumerate(zip(T.entries, A.poset.labels)):
        lengths = tuple(len(row) for row in rows)
        if lengths != tuple(T.shape[slot]):
            problems.append(f"slot {slot}: rows {lengths} do not match shape {T.shape[slot]}")
            continue
        rank = {c.name: c for c in _palette(A, label, T.flavor)}
        for r, row in enumerate(rows):
            for s, (letter, name) in enumerate(row):
                if name not in rank:
                    problems.append(
                        f"slot {slot} ({r},{s}): color {name!r} not in {T.flavor}({label})"
                    )
                    continue
                if not 1 <= letter <= T.n:
                    problems.append(f"slot {slot} ({r},{s}): letter {letter} outside [1,{T.n}]")
                here = (letter, rank[name].rank)
                if s > 0 and row[s - 1][1] in rank:
                    left = (row[s - 1][0], rank[row[s - 1][1]].rank)
                    if here < left or (here == left and rank[name].odd):
                        problems.append(f"slot {slot} ({r},{s}): row condition fails")
                if r > 0 and rows[r - 1][s][1] in rank:
                    above = (rows[r - 1][s][0], rank[rows[r - 1][s][1]].rank)
                    if here < above or (here == above and not rank[name].odd):
                        problems.append(f"slot {slot} ({r},{s}): column condition fails")
    return problems


__all__ = [
    "ColoredTableau",
    "check_tableau",
    "column_tableau",
    "enumerate_std_tableaux",
    "has_std_tableau",
    "initial_tableau",
    "node_rows",
    "reading_word",
    "restricted_multipartitions",
    "right_weight",
    "tableau_weight",
]

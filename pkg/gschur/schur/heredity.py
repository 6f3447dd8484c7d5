"""
Heredity Data of T(n,d) - gschur/schur/heredity.py

For d ≤ n the labels are Λ_+^I(n,d) ordered by ≤_I, and

    X_S = η^{x^S}_{l^S, l^λ}   (S ∈ Std^X(λ))
    Y_U = η^{y^U}_{l^λ, l^U}   (U ∈ Std^Y(λ))

where l^S is the reading word of S, x^S its colors and l^λ the row indices
of the nodes. The initial tableau gives X_{T^λ} = Y_{T^λ} = η_λ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from gschur.combinat.partitions import Multipartition, enumerate_multipartitions, order_ltI
from gschur.combinat.tableaux import (
    ColoredTableau,
    enumerate_std_tableaux,
    initial_tableau,
    node_rows,
    reading_word,
)
from gschur.core.errors import PreconditionError
from gschur.core.monitoring import log_event
from gschur.linalg.sparse import SparseVector
from gschur.schur.algebra import SchurAlgebra, TElement
from gschur.superalg.heredity import AxiomReport, HeredityInput, check_heredity

# =============================================================================
# ELEMENTS
# =============================================================================


def x_element(T: SchurAlgebra, S: ColoredTableau) -> TElement:
    letters, colors = reading_word(S)
    rows = node_rows(S)
    word = tuple((T.A.x_index(c), l, r) for l, c, r in zip(letters, colors, rows))
    return T.element(word)


def y_element(T: SchurAlgebra, U: ColoredTableau) -> TElement:
    letters, colors = reading_word(U)
    rows = node_rows(U)
    word = tuple((T.A.y_index(c), r, l) for l, c, r in zip(letters, colors, rows))
    return T.element(word)


def _initial_first(
    tableaux: List[ColoredTableau], initial: ColoredTableau
) -> List[ColoredTableau]:
    rest = [t for t in tableaux if t.entries != initial.entries]
    return [initial] + rest


@dataclass
class HeredityElements:
    """X(n,d) and Y(n,d) grouped by label, initial tableau first in each list."""

    n: int
    d: int
    labels: List[Multipartition]
    x_tableaux: Dict[Multipartition, List[ColoredTableau]] = field(default_factory=dict)
    y_tableaux: Dict[Multipartition, List[ColoredTableau]] = field(default_factory=dict)
    X: Dict[Multipartition, List[TElement]] = field(default_factory=dict)
    Y: Dict[Multipartition, List[TElement]] = field(default_factory=dict)

    def count(self) -> int:
        """Σ_λ |X(λ)|·|Y(λ)|, the size of the heredity basis."""
        return sum(len(self.X[la]) * len(self.Y[la]) for la in self.labels)


def heredity_elements(T: SchurAlgebra, d: int) -> HeredityElements:
    if d > T.n:
        raise PreconditionError(f"requires d ≤ n (d = {d}, n = {T.n})")
    key = f"heredity:{d}"
    cached = T.cache.get(key)
    if cached is not None:
        return cached  # type: ignore[return-value]

    labels = enumerate_multipartitions(T.n, d, T.A.poset)
    data = HeredityElements(n=T.n, d=d, labels=labels)
    for la in labels:
        xs = _initial_first(
            enumerate_std_tableaux(la, "X", T.A, T.n), initial_tableau(la, T.A, "X", T.n)
        )
        ys = _initial_first(
            enumerate_std_tableaux(la, "Y", T.A, T.n), initial_tableau(la, T.A, "Y", T.n)
        )
        data.x_tableaux[la] = xs
        data.y_tableaux[la] = ys
        data.X[la] = [x_element(T, S) for S in xs]
        data.Y[la] = [y_element(T, U) for U in ys]
    T.cache[key] = data
    log_event(
        "heredity_elements_built",
        level="debug",
        algebra=T.A.name,
        n=T.n,
        d=d,
        labels=len(labels),
        basis=data.count(),
    )
    return data


def heredity_input(
    T: SchurAlgebra, d: int, probes: Optional[Sequence[TElement]] = None
) -> HeredityInput:
    """T(n,d) in coordinates with labels Λ_+^I(n,d) under <_I."""
    data = heredity_elements(T, d)
    poset = T.A.poset
    if probes is None:
        probe_vectors = [SparseVector.unit(k, T.dim(d)) for k in range(T.dim(d))]
    else:
        probe_vectors = [T.to_vector(p) for p in probes]

    def describe(v: SparseVector) -> str:
        return " + ".join(f"{c}·η{list(t)}" for t, c in T.from_vector(d, v)) or "0"

    return HeredityInput(
        dim=T.dim(d),
        multiply=T.multiply_vectors(d),
        labels=data.labels,
        lt=lambda a, b: order_ltI(a, b, poset),
        X={la: [T.to_vector(x) for x in data.X[la]] for la in data.labels},
        Y={la: [T.to_vector(y) for y in data.Y[la]] for la in data.labels},
        probes=probe_vectors,
        describe=describe,
    )


def verify_schur_heredity(
    T: SchurAlgebra, d: int, probes: Optional[Sequence[TElement]] = None
) -> AxiomReport:
    """Heredity axioms of T(n,d) with the tableau data."""
    report = AxiomReport(subject=f"T^{T.A.name}({T.n},{d})")
    return check_heredity(heredity_input(T, d, probes), report)


__all__ = [
    "HeredityElements",
    "heredity_elements",
    "heredity_input",
    "verify_schur_heredity",
    "x_element",
    "y_element",
]

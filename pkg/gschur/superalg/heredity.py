"""
Heredity Checks - gschur/superalg/heredity.py

Algebra-agnostic verification of heredity data and the cell-quotient
realization of standard modules. Works for any finite-dimensional algebra
given as a bilinear multiplication on coordinate vectors, so the base
algebra A and the Schur algebra T(n,d) share one implementation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import (
    Callable,
    Dict,
    Generic,
    Hashable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

from gschur.core.errors import HeredityViolation
from gschur.core.monitoring import log_event
from gschur.linalg.echelon import EchelonBuilder, TrackedSpan
from gschur.linalg.sparse import SparseVector, linear_combination

Label = TypeVar("Label", bound=Hashable)
Multiply = Callable[[SparseVector, SparseVector], SparseVector]


# =============================================================================
# REPORTS
# =============================================================================


@dataclass
class AxiomFailure:
    """One failed check with a human-readable witness."""

    axiom: str
    detail: str


@dataclass
class AxiomReport:
    """Outcome of a heredity verification; `checks` maps check name to pass/fail."""

    subject: str
    checks: Dict[str, bool] = field(default_factory=dict)
    failures: List[AxiomFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, axiom: str, ok: bool, detail: str = "") -> None:
        self.checks[axiom] = self.checks.get(axiom, True) and ok
        if not ok:
            self.failures.append(AxiomFailure(axiom, detail))

    def failed_axioms(self) -> List[str]:
        return sorted({f.axiom for f in self.failures})


# =============================================================================
# GENERIC HEREDITY DATA
# =============================================================================


@dataclass
class HeredityInput(Generic[Label]):
    """
    Heredity data of an algebra given in coordinates.

    X[i][0] and Y[i][0] are the initial elements e_i. `probes` are the
    elements a used in axiom (b); a basis of the algebra is the full check.
    """

    dim: int
    multiply: Multiply
    labels: Sequence[Label]
    lt: Callable[[Label, Label], bool]
    X: Mapping[Label, Sequence[SparseVector]]
    Y: Mapping[Label, Sequence[SparseVector]]
    probes: Sequence[SparseVector]
    describe: Callable[[SparseVector], str] = str

    def leq(self, a: Label, b: Label) -> bool:
        return a == b or self.lt(a, b)

    def e(self, label: Label) -> SparseVector:
        return self.X[label][0]

    def products(self, label: Label) -> List[SparseVector]:
        return [self.multiply(x, y) for x in self.X[label] for y in self.Y[label]]

    def ideal_above(self, label: Label) -> List[SparseVector]:
        """Spanning set of A^{>i}."""
        out: List[SparseVector] = []
        for j in self.labels:
            if self.lt(label, j):
                out.extend(self.products(j))
        return out


def check_heredity(data: HeredityInput, report: Optional[AxiomReport] = None) -> AxiomReport:
    """Axioms (a), (b), (c) and the idempotent orthogonality that follows from them."""
    report = report or AxiomReport(subject="algebra")

    # (a) B = {xy} is a basis
    products = [p for i in data.labels for p in data.products(i)]
    builder = EchelonBuilder(data.dim)
    builder.extend(products)
    report.record(
        "a",
        len(products) == data.dim and builder.rank == data.dim,
        f"{len(products)} products of rank {builder.rank} in dimension {data.dim}",
    )

    # (b) a x ≡ Σ l(a) x' and y a ≡ Σ r(a) y' modulo A^{>i}
    for i in data.labels:
        above = data.ideal_above(i)
        left = EchelonBuilder(data.dim)
        left.extend(above)
        left.extend(data.X[i])
        right = EchelonBuilder(data.dim)
        right.extend(above)
        right.extend(data.Y[i])
        for a in data.probes:
            for x in data.X[i]:
                ax = data.multiply(a, x)
                if not left.contains(ax):
                    report.record(
                        "b",
                        False,
                        f"i={i}: {data.describe(a)} · {data.describe(x)}"
                        f" leaves span X({i}) + A^>{i}",
                    )
            for y in data.Y[i]:
                ya = data.multiply(y, a)
                if not right.contains(ya):
                    report.record(
                        "b",
                        False,
                        f"i={i}: {data.describe(y)} · {data.describe(a)}"
                        f" leaves span Y({i}) + A^>{i}",
                    )
        report.record("b", True)

    # (c) idempotent identities
    zero = SparseVector.zero(data.dim)
    for i in data.labels:
        e_i = data.e(i)
        for k, x in enumerate(data.X[i]):
            ok = data.multiply(x, e_i) == x
            ok &= data.multiply(e_i, x) == (x if k == 0 else zero)
            for j in data.labels:
                ok &= data.multiply(data.e(j), x) in (x, zero)
            report.record("c", ok, "" if ok else f"X({i}) element {data.describe(x)}")
        for k, y in enumerate(data.Y[i]):
            ok = data.multiply(e_i, y) == y
            ok &= data.multiply(y, e_i) == (y if k == 0 else zero)
            for j in data.labels:
                ok &= data.multiply(y, data.e(j)) in (y, zero)
            report.record("c", ok, "" if ok else f"Y({i}) element {data.describe(y)}")

    # e_i e_j = δ e_i, and e_j x = y e_j = 0 unless j ≤ i
    for i in data.labels:
        for j in data.labels:
            expected = data.e(i) if i == j else zero
            ok = data.multiply(data.e(i), data.e(j)) == expected
            if not data.leq(j, i):
                ok &= all(data.multiply(data.e(j), x).is_zero for x in data.X[i])
                ok &= all(data.multiply(y, data.e(j)).is_zero for y in data.Y[i])
            report.record("idempotents", ok, "" if ok else f"i={i}, j={j}")

    # X ∩ Y consists of the initial elements
    for i in data.labels:
        for x in data.X[i][1:]:
            clash = any(x == y for j in data.labels for y in data.Y[j])
            detail = f"{data.describe(x)} lies in X and Y" if clash else ""
            report.record("x_cap_y", not clash, detail)

    log_event(
        "heredity_checked",
        subject=report.subject,
        labels=len(data.labels),
        passed=report.passed,
        failures=len(report.failures),
    )
    return report


# =============================================================================
# STANDARD QUOTIENTS
# =============================================================================


class StandardQuotient:
    """
    Δ(i) = (A / A^{>i}) e_i with basis v_x = x̃ for x ∈ X(i).

    `ideal` spans the part of A^{>i} that the products a·x can reach. The
    action of a on v_x is read off by expressing a·x over ideal ∪ X(i).
    """

    def __init__(
        self,
        dim: int,
        multiply: Multiply,
        generators: Sequence[SparseVector],
        ideal: Sequence[SparseVector],
        parities: Optional[Sequence[int]] = None,
        names: Optional[Sequence[str]] = None,
    ):
        self.ambient = dim
        self.multiply = multiply
        self.generators: Tuple[SparseVector, ...] = tuple(generators)
        self.parities: Tuple[int, ...] = tuple(parities or (0,) * len(self.generators))
        self.names: Tuple[str, ...] = tuple(
            names or (f"v{k}" for k in range(len(self.generators)))
        )
        ideal_rank = TrackedSpan(list(ideal), dim).rank if ideal else 0
        self._span = TrackedSpan(list(ideal) + list(self.generators), dim)
        self._offset = len(ideal)
        if self._span.rank - ideal_rank != len(self.generators):
            log_event("heredity_violation", level="error", generators=len(self.generators))
            raise HeredityViolation(
                f"{len(self.generators)} generators are dependent modulo the ideal"
            )
        self._cache: Dict[Tuple[SparseVector, int], SparseVector] = {}

    @property
    def dim(self) -> int:
        return len(self.generators)

    def coordinates(self, element: SparseVector) -> SparseVector:
        """Class of an element of A e_i in the v-basis."""
        coords = self._span.express(element)
        if coords is None:
            log_event("heredity_violation", level="error", dim=self.dim)
            raise HeredityViolation("product leaves span of the generators modulo the ideal")
        return SparseVector(
            {k: coords[self._offset + k] for k in range(self.dim)}, self.dim
        )

    def act_on_basis(self, a: SparseVector, k: int) -> SparseVector:
        key = (a, k)
        if key not in self._cache:
            self._cache[key] = self.coordinates(self.multiply(a, self.generators[k]))
        return self._cache[key]

    def act(self, a: SparseVector, v: SparseVector) -> SparseVector:
        return linear_combination(
            ((c, self.act_on_basis(a, k)) for k, c in v.entries.items()), self.dim
        )


__all__ = [
    "AxiomFailure",
    "AxiomReport",
    "HeredityInput",
    "StandardQuotient",
    "check_heredity",
]

"""
Standard Modules - gschur/modules/standard.py

Δ(λ) = (T(n,d) / T^{>λ}) η_λ with basis v_S = X_S η_λ for S ∈ Std^X(λ).

The ideal is taken as T^{>λ} η_λ = span{X_{S'} Y_U : μ >_I λ, U of right
weight λ}, which is all that products a·X_S can reach.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from gschur.combinat.partitions import (
    Multipartition,
    Weight,
    degree,
    multi_pad,
    multi_trim,
    order_ltI,
)
from gschur.combinat.tableaux import (
    ColoredTableau,
    enumerate_std_tableaux,
    right_weight,
    tableau_weight,
)
from gschur.core.errors import PreconditionError
from gschur.core.monitoring import log_event
from gschur.linalg.sparse import SparseVector
from gschur.modules.base import ModuleRep, _from_weights
from gschur.schur.algebra import SchurAlgebra, TElement
from gschur.schur.heredity import heredity_elements
from gschur.schur.idempotents import include, weyl_element
from gschur.superalg.data import HeredityData
from gschur.superalg.heredity import AxiomReport, StandardQuotient
from gschur.symfunc.polynomials import MultiSymPolynomial

# =============================================================================
# STANDARD MODULE
# =============================================================================


class StandardModule(ModuleRep):
    """Δ(λ) over T(n,d); basis vector 0 is the highest weight vector v_λ."""

    def __init__(self, la: Multipartition, T: SchurAlgebra):
        super().__init__()
        la = multi_trim(la)
        d = degree(la)
        if d > T.n:
            raise PreconditionError(f"requires d ≤ n (d = {d}, n = {T.n})")
        if len(la) != len(T.A.poset):
            raise PreconditionError(f"{la} does not have {len(T.A.poset)} components")
        self.T = T
        self.la = la
        self.degree = d

        data = heredity_elements(T, d)
        if la not in data.X:
            raise PreconditionError(f"{la} is not a multipartition in Λ_+^I({T.n},{d})")
        self.tableaux: Tuple[ColoredTableau, ...] = tuple(data.x_tableaux[la])

        target = multi_pad(la, T.n)
        ideal: List[SparseVector] = []
        for mu in data.labels:
            if not order_ltI(la, mu, T.A.poset):
                continue
            for U, y in zip(data.y_tableaux[mu], data.Y[mu]):
                if right_weight(U, T.A) != target:
                    continue
                for x in data.X[mu]:
                    ideal.append(T.to_vector(T.multiply(x, y)))

        self.quotient = StandardQuotient(
            T.dim(d),
            T.multiply_vectors(d),
            [T.to_vector(x) for x in data.X[la]],
            ideal,
            parities=[T.element_parity(x) or 0 for x in data.X[la]],
            names=[f"v[{S}]" for S in self.tableaux],
        )
        self.parities = self.quotient.parities
        self.names = self.quotient.names
        self.weights = tuple(tableau_weight(S, T.A) for S in self.tableaux)
        log_event(
            "standard_module_built",
            level="debug",
            algebra=T.A.name,
            n=T.n,
            shape=la,
            dim=self.dim,
            ideal=len(ideal),
        )

    def _act_on_basis(self, u: TElement, k: int) -> SparseVector:
        return self.quotient.act_on_basis(self.T.to_vector(u), k)

    def index_of(self, S: ColoredTableau) -> int:
        for k, candidate in enumerate(self.tableaux):
            if candidate.entries == S.entries:
                return k
        raise KeyError(f"{S} is not a basis tableau of Δ({self.la})")

    def __repr__(self) -> str:
        return f"StandardModule(la={self.la}, n={self.n}, dim={self.dim})"


def standard_module(la: Multipartition, T: SchurAlgebra) -> StandardModule:
    """Cached Δ(λ) over T."""
    key = ("standard", multi_trim(la))
    if key not in T.cache:
        T.cache[key] = StandardModule(la, T)
    return T.cache[key]  # type: ignore[return-value]


def standard_dimension(la: Multipartition, n: int, A: HeredityData) -> int:
    """|Std^X(λ)| at width n."""
    return len(enumerate_std_tableaux(la, "X", A, n))


def costandard_character(la: Multipartition, n: int, A: HeredityData) -> MultiSymPolynomial:
    """ch ∇(λ) = Σ_μ |Std^Y(λ,μ)| z^μ, counting Y-tableaux by right weight."""
    if degree(la) > n:
        raise PreconditionError(f"requires d ≤ n (d = {degree(la)}, n = {n})")
    counts = {}
    for U in enumerate_std_tableaux(la, "Y", A, n):
        w = right_weight(U, A)
        counts[w] = counts.get(w, 0) + 1
    return _from_weights(A.poset.labels, n, counts)


# =============================================================================
# HIGHEST WEIGHT
# =============================================================================


def highest_weight_checks(V: StandardModule) -> AxiomReport:
    """
    Leading term z^λ with coefficient 1, every other weight composition
    strictly below λ in ≤_I (permutations of λ included), and Y-elements
    with a color outside X kill the vectors of top norm.
    """
    T, la = V.T, V.la
    report = AxiomReport(subject=f"Δ{la}")
    top = multi_pad(la, T.n)
    counts = V.weight_dimensions()
    report.record("leading_term", counts.get(top, 0) == 1, f"coefficient {counts.get(top, 0)}")

    for w in counts:
        if w == top:
            continue
        ok = order_ltI(w, la, T.A.poset)
        report.record("lower_weights", ok, "" if ok else f"weight {w} is not below {la}")
    report.record("lower_weights", True)

    x_names = {c.name for c in T.A.colors() if c.flavor == "X"}
    data = heredity_elements(T, V.degree)
    top_norm = tuple(sum(part) for part in la)
    tops = [k for k, w in enumerate(V.weights) if tuple(sum(p) for p in w) == top_norm]
    for mu in data.labels:
        for U, y in zip(data.y_tableaux[mu][1:], data.Y[mu][1:]):
            colors = {name for _, _, _, (_, name) in U.nodes()}
            if colors <= x_names:
                continue
            for k in tops:
                ok = V.act_on_basis(y, k).is_zero
                report.record("y_raising", ok, "" if ok else f"Y[{U}] raises {V.names[k]}")
    report.record("y_raising", True)
    return report


def stabilizer_sign(V: StandardModule, sigma: Sequence[Sequence[int]]) -> Optional[int]:
    """
    ε with ξ_d(σ) v_λ = ε v_λ, for σ in the stabilizer of λ; None when v_λ
    is not an eigenvector.
    """
    xi = weyl_element(V.T, sigma, V.degree)
    image = V.act_on_basis(xi, 0)
    value = image[0]
    if image != V.vector(0).scale(value) or value not in (1, -1):
        return None
    return int(value)


# =============================================================================
# TRUNCATION
# =============================================================================


def _letters_at_most(S: ColoredTableau, n: int) -> bool:
    return all(letter <= n for _, _, _, (letter, _) in S.nodes())


class TruncatedStandard(ModuleRep):
    """Δ_n(λ) = η^N_n(d) Δ_N(λ) as a T(n,d)-module."""

    def __init__(self, big: StandardModule, T: SchurAlgebra):
        super().__init__()
        if T.n > big.n:
            raise PreconditionError(f"requires N ≥ n (N = {big.n}, n = {T.n})")
        self.T = T
        self.big = big
        self.la = big.la
        self.degree = big.degree
        self.keep: Tuple[int, ...] = tuple(
            k for k, S in enumerate(big.tableaux) if _letters_at_most(S, T.n)
        )
        self._position = {k: j for j, k in enumerate(self.keep)}
        self.tableaux = tuple(big.tableaux[k] for k in self.keep)
        self.parities = tuple(big.parities[k] for k in self.keep)
        self.names = tuple(big.names[k] for k in self.keep)
        self.weights = tuple(_cut(big.weights[k], T.n) for k in self.keep)

    def _act_on_basis(self, u: TElement, k: int) -> SparseVector:
        image = self.big.act_on_basis(include(u, self.big.n), self.keep[k])
        out = {}
        for index, value in image:
            if index not in self._position:
                raise PreconditionError(f"{index} left the truncated module")
            out[self._position[index]] = value
        return SparseVector(out, self.dim)

    def __repr__(self) -> str:
        return f"TruncatedStandard(la={self.la}, n={self.n}, N={self.big.n}, dim={self.dim})"


def _cut(weight: Weight, n: int) -> Weight:
    return tuple(tuple(part[:n]) for part in weight)


def truncated_standard(
    la: Multipartition,
    n: int,
    N: int,
    A: HeredityData,
    big: Optional[SchurAlgebra] = None,
    small: Optional[SchurAlgebra] = None,
) -> TruncatedStandard:
    d = degree(la)
    if N < d:
        raise PreconditionError(f"requires N ≥ d (N = {N}, d = {d})")
    if N < n:
        raise PreconditionError(f"requires N ≥ n (N = {N}, n = {n})")
    big = big or SchurAlgebra(A, N)
    small = small or SchurAlgebra(A, n)
    module = TruncatedStandard(standard_module(la, big), small)
    log_event("truncated_standard_built", level="debug", shape=module.la, n=n, N=N, dim=module.dim)
    return module


__all__ = [
    "StandardModule",
    "TruncatedStandard",
    "costandard_character",
    "highest_weight_checks",
    "stabilizer_sign",
    "standard_dimension",
    "standard_module",
    "truncated_standard",
]

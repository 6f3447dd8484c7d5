"""
Module Representations - gschur/modules/base.py

A T(n,d)-module given by a weight basis and an action oracle on the η basis.
Characters are read either from the basis weights or from the ranks of the
weight idempotents η_μ; the two agree for every module built here.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from gschur.combinat.partitions import Weight, enumerate_multicompositions
from gschur.core.errors import DegreeMismatchError
from gschur.linalg.echelon import Subspace, echelonize
from gschur.linalg.sparse import SparseVector, linear_combination
from gschur.schur.algebra import SchurAlgebra, TElement
from gschur.schur.idempotents import eta_idempotent, weyl_element
from gschur.symfunc.polynomials import MultiSymPolynomial

# =============================================================================
# MODULE INTERFACE
# =============================================================================


class ModuleRep(ABC):
    """
    Finite-dimensional T(n,d)-supermodule with a homogeneous weight basis.

    Subclasses set `T`, `degree`, `parities`, `weights`, `names` and
    implement `_act_on_basis`.
    """

    T: SchurAlgebra
    degree: int
    parities: Tuple[int, ...]
    weights: Tuple[Weight, ...]
    names: Tuple[str, ...]

    def __init__(self) -> None:
        self._action: Dict[Tuple[TElement, int], SparseVector] = {}

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def n(self) -> int:
        return self.T.n

    @property
    def slots(self) -> Tuple[int, ...]:
        return self.T.A.poset.labels

    @abstractmethod
    def _act_on_basis(self, u: TElement, k: int) -> SparseVector:
        """u · (k-th basis vector) for a single η basis element u."""

    def act_on_basis(self, u: TElement, k: int) -> SparseVector:
        if u.degree != self.degree:
            raise DegreeMismatchError(self.degree, u.degree)
        out: List[Tuple[Fraction, SparseVector]] = []
        for triple, coef in u:
            key = (TElement(u.degree, {triple: 1}), k)
            if key not in self._action:
                self._action[key] = self._act_on_basis(key[0], k)
            out.append((coef, self._action[key]))
        return linear_combination(out, self.dim)

    def act(self, u: TElement, v: SparseVector) -> SparseVector:
        return linear_combination(
            ((c, self.act_on_basis(u, k)) for k, c in v.entries.items()), self.dim
        )

    def vector(self, k: int) -> SparseVector:
        return SparseVector.unit(k, self.dim)

    def image(self, u: TElement, vectors: Optional[Sequence[SparseVector]] = None) -> Subspace:
        """Span of u·v over the given vectors (default: the whole basis)."""
        if vectors is None:
            vectors = [self.vector(k) for k in range(self.dim)]
        return echelonize([self.act(u, v) for v in vectors], self.dim)

    def weight_indices(self, mu: Weight) -> List[int]:
        return [k for k, w in enumerate(self.weights) if w == tuple(map(tuple, mu))]

    # =========================================================================
    # CHARACTERS
    # =========================================================================

    def weight_dimensions(self) -> Dict[Weight, int]:
        """μ ↦ number of basis vectors of weight μ."""
        out: Dict[Weight, int] = {}
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return out

    def weight_character(self) -> MultiSymPolynomial:
        """ch V from the basis weights."""
        return _from_weights(self.slots, self.n, self.weight_dimensions())

    def idempotent_dimensions(self) -> Dict[Weight, int]:
        """μ ↦ dim η_μ V over all of Λ^I(n,d)."""
        out: Dict[Weight, int] = {}
        for mu in enumerate_multicompositions(self.n, self.degree, len(self.slots)):
            rank = self.image(_eta(self.T, mu)).rank
            if rank:
                out[mu] = rank
        return out

    def idempotent_character(self) -> MultiSymPolynomial:
        """ch V = Σ_μ (dim η_μ V) z^μ from the action of the weight idempotents."""
        return _from_weights(self.slots, self.n, self.idempotent_dimensions())

    def parity_of(self, v: SparseVector) -> Optional[int]:
        parities = {self.parities[k] for k in v.support}
        return parities.pop() if len(parities) == 1 else None


def _eta(T: SchurAlgebra, mu: Weight) -> TElement:
    key = ("eta", mu)
    if key not in T.cache:
        T.cache[key] = eta_idempotent(T, mu)
    return T.cache[key]  # type: ignore[return-value]


def _dominant(weight: Weight) -> bool:
    return all(
        all(part[k] >= part[k + 1] for k in range(len(part) - 1)) for part in weight
    )


def _from_weights(
    slots: Sequence[int], n: int, counts: Dict[Weight, int]
) -> MultiSymPolynomial:
    dominant = {w: c for w, c in counts.items() if _dominant(w)}
    return MultiSymPolynomial.from_monomials(slots, n, dominant)


def character(V: ModuleRep) -> MultiSymPolynomial:
    """ch V via the weight idempotents."""
    return V.idempotent_character()


# =============================================================================
# TRIVIAL MODULE
# =============================================================================


class TrivialModule(ModuleRep):
    """The one-dimensional T(n,0)-module; η_∅ acts as 1."""

    def __init__(self, T: SchurAlgebra):
        super().__init__()
        self.T = T
        self.degree = 0
        self.parities = (0,)
        self.weights = (tuple((0,) * T.n for _ in T.A.poset.labels),)
        self.names = ("1",)

    def _act_on_basis(self, u: TElement, k: int) -> SparseVector:
        return SparseVector({0: u.terms.get((), Fraction(0))}, 1)


# =============================================================================
# WEYL GROUP
# =============================================================================


def permute_weight(mu: Weight, sigma: Sequence[Sequence[int]]) -> Weight:
    """σμ with (σμ)^(i)_{σ_i(r)} = μ^(i)_r."""
    out = []
    for part, perm in zip(mu, sigma):
        image = [0] * len(part)
        for r, value in enumerate(part, start=1):
            image[perm[r - 1] - 1] = value
        out.append(tuple(image))
    return tuple(out)


def weyl_covariance(V: ModuleRep, sigma: Sequence[Sequence[int]]) -> bool:
    """ξ_d(σ) maps every weight-μ basis vector into η_{σμ} V."""
    xi = weyl_element(V.T, sigma, V.degree)
    for k, mu in enumerate(V.weights):
        image = V.act_on_basis(xi, k)
        target = _eta(V.T, permute_weight(mu, sigma))
        if V.act(target, image) != image:
            return False
    return True


__all__ = [
    "ModuleRep",
    "TrivialModule",
    "character",
    "permute_weight",
    "weyl_covariance",
]

"""
Character Decomposition - gschur/modules/decompose.py

Standard characters are unitriangular with respect to ≤_I, so any character
of a module with a standard filtration decomposes by peeling its largest
dominant monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Dict, List, Optional

from gschur.combinat.partitions import (
    Multipartition,
    degree,
    iota,
    multi_add,
    multi_trim,
    order_key,
    order_ltI,
)
from gschur.combinat.tableaux import enumerate_std_tableaux, tableau_weight
from gschur.core.errors import CharacterDecompositionError, DegreeMismatchError, PreconditionError
from gschur.core.monitoring import log_event
from gschur.modules.standard import costandard_character, standard_dimension, standard_module
from gschur.modules.tensor import TensorModule
from gschur.schur.algebra import SchurAlgebra
from gschur.superalg.data import HeredityData
from gschur.symfunc.littlewood import bold_lr_product
from gschur.symfunc.polynomials import MultiSymPolynomial

MonomialTerms = Dict[Multipartition, int]


def _tableau_monomials(la: Multipartition, n: int, A: HeredityData) -> MonomialTerms:
    """Dominant part of Σ_{S ∈ Std^X(λ)} z^{α(S)}."""
    out: MonomialTerms = {}
    for S in enumerate_std_tableaux(la, "X", A, n):
        w = tableau_weight(S, A)
        if all(list(part) == sorted(part, reverse=True) for part in w):
            key = multi_trim(w)
            out[key] = out.get(key, 0) + 1
    return out


def decompose_character(
    ch: MultiSymPolynomial, n: int, d: int, A: HeredityData
) -> Dict[Multipartition, int]:
    """ch = Σ_λ m_λ ch Δ(λ) with m_λ ≥ 0; raises when no such expansion exists."""
    remaining: MonomialTerms = {
        multi_trim(k): c for k, c in ch.monomial_terms().items() if c
    }
    for key in remaining:
        if degree(key) != d:
            raise DegreeMismatchError(d, degree(key))

    out: Dict[Multipartition, int] = {}
    while remaining:
        lead = max(remaining, key=lambda k: order_key(k, A.poset, n))
        coef = remaining[lead]
        if coef < 0:
            raise CharacterDecompositionError(
                f"not a standard-positive character: coefficient {coef} at {lead}"
            )
        basis = _tableau_monomials(lead, n, A)
        if basis.get(lead, 0) != 1:
            raise CharacterDecompositionError(
                f"not a standard-positive character: no standard character leads with {lead}"
            )
        out[lead] = coef
        for key, c in basis.items():
            value = remaining.get(key, 0) - coef * c
            if value:
                remaining[key] = value
            else:
                remaining.pop(key, None)
    return out


# =============================================================================
# MULTIPLICITIES
# =============================================================================


@dataclass
class MultiplicityMismatch:
    shape: Multipartition
    expected: int
    observed: int


@dataclass
class MultiplicityReport:
    """(Δ(λ) ⊗ Δ(μ) : Δ(ν)) read from characters against LR products."""

    la: Multipartition
    mu: Multipartition
    n: int
    observed: Dict[Multipartition, int] = field(default_factory=dict)
    expected: Dict[Multipartition, int] = field(default_factory=dict)
    mismatches: List[MultiplicityMismatch] = field(default_factory=list)
    top_ok: bool = False
    product_ok: bool = False
    decol_ok: bool = False

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.top_ok and self.product_ok and self.decol_ok


def verify_multiplicities(
    la: Multipartition,
    mu: Multipartition,
    n: int,
    A: HeredityData,
    T: Optional[SchurAlgebra] = None,
) -> MultiplicityReport:
    la, mu = multi_trim(la), multi_trim(mu)
    total = degree(la) + degree(mu)
    if total > n:
        raise PreconditionError(f"requires |λ|+|μ| ≤ n ({total} > {n})")
    T = T or SchurAlgebra(A, n)
    V, W = standard_module(la, T), standard_module(mu, T)
    M = TensorModule(V, W)
    ch = M.idempotent_character()

    report = MultiplicityReport(la=la, mu=mu, n=n)
    report.product_ok = ch == V.weight_character() * W.weight_character()
    report.observed = decompose_character(ch, n, total, A)
    report.expected = {nu: c for nu, c in bold_lr_product(la, mu).items() if c}
    for nu in sorted(set(report.observed) | set(report.expected)):
        seen, want = report.observed.get(nu, 0), report.expected.get(nu, 0)
        if seen != want:
            report.mismatches.append(MultiplicityMismatch(nu, want, seen))

    top = multi_add(la, mu)
    report.top_ok = report.observed.get(top, 0) == 1 and all(
        order_ltI(nu, top, A.poset) for nu in report.observed if nu != top
    )

    slots = len(A.poset)
    report.decol_ok = all(
        standard_dimension(x, n, A)
        == prod(
            standard_dimension(iota(k, part, slots), n, A) for k, part in enumerate(x)
        )
        for x in (la, mu)
    )
    if report.mismatches:
        log_event(
            "character_mismatch",
            level="warning",
            algebra=A.name,
            la=la,
            mu=mu,
            mismatches=len(report.mismatches),
        )
    return report


def verify_costandard_product(
    la: Multipartition, mu: Multipartition, n: int, A: HeredityData
) -> bool:
    """ch ∇(λ)·ch ∇(μ) = Σ_ν c^ν_{λμ} ch ∇(ν)."""
    la, mu = multi_trim(la), multi_trim(mu)
    total = degree(la) + degree(mu)
    if total > n:
        raise PreconditionError(f"requires |λ|+|μ| ≤ n ({total} > {n})")
    left = costandard_character(la, n, A) * costandard_character(mu, n, A)
    right = MultiSymPolynomial(A.poset.labels, {}, n)
    for nu, c in bold_lr_product(la, mu).items():
        right = right + costandard_character(nu, n, A).scale(c)
    if left != right:
        log_event(
            "character_mismatch", level="warning", algebra=A.name, la=la, mu=mu, kind="costandard"
        )
    return left == right


__all__ = [
    "MultiplicityMismatch",
    "MultiplicityReport",
    "decompose_character",
    "verify_costandard_product",
    "verify_multiplicities",
]

"""
Character Pipeline - gschur/symfunc/characters.py

Predicted characters of standard modules of T^A(n,d):

    ch Δ(ι_i(λ)) = ρ_n ∘ χ ∘ tr ∘ Δ^{t-1}(s_λ),   t = |X(i)|

Δ^{t-1} spreads s_λ over the colors of X(i), tr conjugates the odd colors,
χ multiplies together the colors sharing a left idempotent and ρ_n keeps
n variables per slot.
"""

from __future__ import annotations

from typing import Dict, Hashable, List, Mapping, Sequence

from gschur.combinat.partitions import Multipartition, Partition, conjugate, trim
from gschur.core.errors import HeredityDataError, PreconditionError
from gschur.core.monitoring import log_event
from gschur.superalg.data import HeredityData
from gschur.symfunc.littlewood import bold_lr_product, iterated_lr, lr_product
from gschur.symfunc.polynomials import MultiSymPolynomial, restrict


def superconjugate_tr(
    p: MultiSymPolynomial, parities: Mapping[Hashable, int]
) -> MultiSymPolynomial:
    """s_ν ↦ s_ν̃, conjugating the slots whose color is odd."""
    flags = [parities[slot] % 2 for slot in p.slots]
    out: Dict = {}
    for key, c in p.schur.items():
        image = tuple(conjugate(part) if odd else part for part, odd in zip(key, flags))
        out[image] = out.get(image, 0) + c
    return MultiSymPolynomial(p.slots, out, p.n)


def _product_of(parts: Sequence[Partition]) -> Dict[Partition, int]:
    acc: Dict[Partition, int] = {(): 1}
    for part in parts:
        grown: Dict[Partition, int] = {}
        for la, c in acc.items():
            for nu, m in lr_product(la, part).items():
                grown[nu] = grown.get(nu, 0) + c * m
        acc = grown
    return acc


def chi_merge(p: MultiSymPolynomial, A: HeredityData, label: int) -> MultiSymPolynomial:
    """χ: Sym^{X(i)} → Sym^I, multiplying slots of colors with the same left idempotent."""
    colors = A.X[label]
    if tuple(c.name for c in colors) != p.slots:
        raise ValueError(f"slots {p.slots} are not the colors of X({label})")
    groups: Dict[int, List[int]] = {j: [] for j in A.poset.labels}
    for k, color in enumerate(colors):
        j = A.left_idempotent(color)
        if j is None:
            raise HeredityDataError(f"color {color.name!r} has no unique left idempotent")
        groups[j].append(k)

    out: Dict = {}
    for key, c in p.schur.items():
        partial: Dict = {(): c}
        for j in A.poset.labels:
            factor = _product_of([key[k] for k in groups[j]])
            grown: Dict = {}
            for prefix, a in partial.items():
                for nu, m in factor.items():
                    grown[prefix + (nu,)] = grown.get(prefix + (nu,), 0) + a * m
            partial = grown
        for gamma, value in partial.items():
            out[gamma] = out.get(gamma, 0) + value
    return MultiSymPolynomial(A.poset.labels, out, p.n)


def character_pipeline(
    la: Sequence[int], label: int, A: HeredityData, n: int
) -> MultiSymPolynomial:
    """Predicted ch Δ(ι_i(λ)) in n variables per slot."""
    la = trim(la)
    if sum(la) > n:
        raise PreconditionError(f"need |λ| ≤ n, got {sum(la)} > {n}")
    colors = A.X[label]
    spread = MultiSymPolynomial(
        [c.name for c in colors], iterated_lr(la, len(colors))
    )
    conjugated = superconjugate_tr(spread, {c.name: c.parity for c in colors})
    merged = chi_merge(conjugated, A, label)
    log_event(
        "character_pipeline",
        level="debug",
        algebra=A.name,
        label=label,
        partition=la,
        terms=len(merged.schur),
    )
    return restrict(merged, n)


def standard_character(la: Multipartition, A: HeredityData, n: int) -> MultiSymPolynomial:
    """Predicted ch Δ(λ): the product of the per-slot predictions."""
    if sum(sum(part) for part in la) > n:
        raise PreconditionError(f"need |λ| ≤ n for {la}")
    out = MultiSymPolynomial(A.poset.labels, {tuple(() for _ in A.poset.labels): 1}, n)
    for part, label in zip(la, A.poset.labels):
        if part:
            out = out * character_pipeline(part, label, A, n)
    return out


def product_character_prediction(
    la: Sequence[int], mu: Sequence[int], label: int, A: HeredityData, n: int
) -> Dict[Partition, int]:
    """Multiplicities ν ↦ c^ν_{λ,μ} of Δ(ι_i(ν)) in Δ(ι_i(λ)) ⊗ Δ(ι_i(μ))."""
    if sum(la) + sum(mu) > n:
        raise PreconditionError(f"need |λ| + |μ| ≤ n, got {sum(la) + sum(mu)} > {n}")
    return lr_product(la, mu)


def bold_product_prediction(
    la: Multipartition, mu: Multipartition, n: int
) -> Dict[Multipartition, int]:
    """Multipartition version: ν ↦ Π_j c^{ν^(j)}_{λ^(j), μ^(j)}."""
    total = sum(sum(p) for p in la) + sum(sum(p) for p in mu)
    if total > n:
        raise PreconditionError(f"need |λ| + |μ| ≤ n, got {total} > {n}")
    return bold_lr_product(la, mu)


__all__ = [
    "bold_product_prediction",
    "character_pipeline",
    "chi_merge",
    "product_character_prediction",
    "standard_character",
    "superconjugate_tr",
]

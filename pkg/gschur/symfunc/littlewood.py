"""
Littlewood-Richardson - gschur/symfunc/littlewood.py

LR coefficients c^λ_{μ,ν}, the coproduct Δ(s_λ) = Σ c^λ_{μ,ν} s_μ ⊗ s_ν,
its iterates, and the componentwise product for multipartitions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Sequence, Tuple

from gschur.combinat.partitions import Multipartition, Partition, enumerate_partitions, trim
from gschur.core.errors import PreconditionError
from gschur.symfunc.polynomials import schur_expand, schur_poly


@lru_cache(maxsize=None)
def _lr_product(mu: Partition, nu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    # |μ|+|ν| variables suffice: no partition of that size has more parts
    n = max(sum(mu) + sum(nu), 1)
    product = schur_poly(mu, n) * schur_poly(nu, n)
    return tuple(sorted(schur_expand(product).items(), reverse=True))


def lr_product(mu: Sequence[int], nu: Sequence[int]) -> Dict[Partition, int]:
    """Schur expansion of s_μ s_ν."""
    mu, nu = trim(mu), trim(nu)
    if mu > nu:
        mu, nu = nu, mu
    return dict(_lr_product(mu, nu))


def lr_coeff(mu: Sequence[int], nu: Sequence[int], la: Sequence[int]) -> int:
    """c^λ_{μ,ν}; zero when the sizes do not add up."""
    if sum(mu) + sum(nu) != sum(la):
        return 0
    return lr_product(mu, nu).get(trim(la), 0)


@lru_cache(maxsize=None)
def _lr_coproduct(la: Partition) -> Tuple[Tuple[Tuple[Partition, Partition], int], ...]:
    d = sum(la)
    out = []
    for k in range(d + 1):
        for mu in enumerate_partitions(k, k):
            for nu in enumerate_partitions(d - k, d - k):
                c = lr_coeff(mu, nu, la)
                if c:
                    out.append(((mu, nu), c))
    return tuple(out)


def lr_coproduct(la: Sequence[int]) -> Dict[Tuple[Partition, Partition], int]:
    """Δ(s_λ) as {(μ, ν): c^λ_{μ,ν}}."""
    return dict(_lr_coproduct(trim(la)))


def iterated_lr(
    la: Sequence[int], m: int, fold: str = "right"
) -> Dict[Tuple[Partition, ...], int]:
    """
    Δ^{m-1}(s_λ) = Σ c^λ_ν s_{ν_1} ⊗ … ⊗ s_{ν_m}.

    fold="right" splits the first tensor factor off repeatedly, fold="left"
    the last one; coassociativity makes them agree.
    """
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    la = trim(la)
    if m == 1:
        return {(la,): 1}
    out: Dict[Tuple[Partition, ...], int] = {}
    for (mu, nu), c in lr_coproduct(la).items():
        if fold == "right":
            rest = iterated_lr(nu, m - 1, fold)
            items = (((mu,) + tail, c * t) for tail, t in rest.items())
        elif fold == "left":
            rest = iterated_lr(mu, m - 1, fold)
            items = ((head + (nu,), c * t) for head, t in rest.items())
        else:
            raise ValueError(f"fold must be 'left' or 'right', got {fold!r}")
        for key, value in items:
            out[key] = out.get(key, 0) + value
    return out


def bold_lr(la: Multipartition, mu: Multipartition, nu: Multipartition) -> int:
    """Componentwise product Π_j c^{λ^(j)}_{μ^(j), ν^(j)}."""
    value = 1
    for a, b, c in zip(la, mu, nu):
        value *= lr_coeff(b, c, a)
        if not value:
            return 0
    return value


def bold_lr_product(mu: Multipartition, nu: Multipartition) -> Dict[Multipartition, int]:
    """{λ: bold_lr(λ, μ, ν)} over all λ with nonzero coefficient."""
    out: Dict[Multipartition, int] = {(): 1}
    for a, b in zip(mu, nu):
        grown: Dict[Multipartition, int] = {}
        for prefix, c in out.items():
            for la, m in lr_product(a, b).items():
                grown[prefix + (la,)] = c * m
        out = grown
    return out


__all__ = [
    "bold_lr",
    "bold_lr_product",
    "iterated_lr",
    "lr_coeff",
    "lr_coproduct",
    "lr_product",
]

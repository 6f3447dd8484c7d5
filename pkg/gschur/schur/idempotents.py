"""
Idempotents and Weyl Elements - gschur/schur/idempotents.py

Weight idempotents η_λ, the elements ξ_d(σ) of the Weyl group action and the
truncation idempotents η^N_n(d), all built from degree-one pieces with the
star product.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Sequence, Tuple

from gschur.combinat.partitions import enumerate_compositions
from gschur.core.errors import PreconditionError
from gschur.schur.algebra import SchurAlgebra, TElement
from gschur.schur.words import OrbitTriple

Permutation = Tuple[int, ...]


def _unit_element() -> TElement:
    return TElement(0, {(): 1})


def tensor_power(T: SchurAlgebra, u: TElement, k: int) -> TElement:
    """u^{⊗k} = u^{*k}/k! for an even element u of degree one."""
    if u.degree != 1:
        raise PreconditionError(
            f"tensor_power requires a degree-one element, got degree {u.degree}"
        )
    if any(T.parity(t) for t in u.terms):
        raise PreconditionError("tensor_power requires an even element")
    if k < 0:
        raise PreconditionError(f"exponent must be non-negative, got {k}")
    power = _unit_element()
    for _ in range(k):
        power = T.star(power, u)
    return power.scale(Fraction(1, factorial(k)))


def _check_weight(T: SchurAlgebra, la: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    slots = len(T.A.poset)
    if len(la) != slots:
        raise PreconditionError(f"weight has {len(la)} components, poset has {slots}")
    padded = []
    for part in la:
        if len(part) > T.n:
            raise PreconditionError(f"weight component {tuple(part)} is longer than n = {T.n}")
        if any(p < 0 for p in part):
            raise PreconditionError(f"negative weight entry in {tuple(part)}")
        padded.append(tuple(part) + (0,) * (T.n - len(part)))
    return tuple(padded)


def eta_idempotent(T: SchurAlgebra, la: Sequence[Sequence[int]]) -> TElement:
    """η_λ = η^{e}_{λ^(i)} star-multiplied over the slots; λ ∈ Λ^I(n,d)."""
    weight = _check_weight(T, la)
    result = _unit_element()
    for label, part in zip(T.A.poset.labels, weight):
        e = T.A.e_index(label)
        triple: OrbitTriple = tuple(
            (e, r, r) for r, count in enumerate(part, start=1) for _ in range(count)
        )
        result = T.star(result, TElement(len(triple), {triple: 1}))
    return result


def _check_permutation(sigma: Sequence[int], n: int) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise PreconditionError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def weyl_element(T: SchurAlgebra, sigma: Sequence[Sequence[int]], d: int) -> TElement:
    """
    ξ_d(σ) for σ = (σ_i)_{i ∈ I}, each σ_i a permutation of [n] written as
    the tuple (σ_i(1), …, σ_i(n)).
    """
    labels = T.A.poset.labels
    if len(sigma) != len(labels):
        raise PreconditionError(f"expected {len(labels)} permutations, got {len(sigma)}")
    pieces = []
    for label, perm in zip(labels, sigma):
        perm = _check_permutation(perm, T.n)
        e = T.A.e_index(label)
        pieces.append(TElement(1, {((e, perm[r - 1], r),): 1 for r in range(1, T.n + 1)}))

    total = TElement.zero(d)
    for split in enumerate_compositions(d, len(labels)):
        term = _unit_element()
        for piece, k in zip(pieces, split):
            term = T.star(term, tensor_power(T, piece, k))
        total = total + term
    return total


def identity_permutations(T: SchurAlgebra) -> Tuple[Permutation, ...]:
    return tuple(tuple(range(1, T.n + 1)) for _ in T.A.poset.labels)


def truncation_idempotent(T: SchurAlgebra, n: int, d: int) -> TElement:
    """η^N_n(d) = (E^N_n)^{⊗d} in T(N,d), where N = T.n."""
    if n > T.n:
        raise PreconditionError(f"requires N ≥ n (N = {T.n}, n = {n})")
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    unit = T.unit_of_A()
    E = TElement(1, {((b, r, r),): c for b, c in unit for r in range(1, n + 1)})
    return tensor_power(T, E, d)


def compress(u: TElement, n: int) -> TElement:
    """η^N_n u η^N_n read in T(n,d): keep the terms whose letters lie in [n]."""
    kept: Dict[OrbitTriple, Fraction] = {
        t: c for t, c in u.terms.items() if all(r <= n and s <= n for _, r, s in t)
    }
    return TElement(u.degree, kept)


def include(u: TElement, N: int) -> TElement:
    """Inclusion T(n,d) → η^N_n T(N,d) η^N_n."""
    for t in u.terms:
        if any(r > N or s > N for _, r, s in t):
            raise PreconditionError(f"requires N ≥ n: a letter of {t} exceeds {N}")
    return TElement(u.degree, dict(u.terms))


__all__ = [
    "Permutation",
    "compress",
    "eta_idempotent",
    "identity_permutations",
    "include",
    "tensor_power",
    "truncation_idempotent",
    "weyl_element",
]

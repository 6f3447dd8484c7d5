"""
P-Sets - gschur/combinat/psets.py

c-element subsets P ⊆ [n], the set Ω_λ of those with λ + ε_P a partition,
and the decomposition of all subsets into orbits of the stabilizer Σ_λ.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from gschur.combinat.partitions import Composition, is_partition, pad
from gschur.core.errors import PreconditionError

PSet = Tuple[int, ...]


def epsilon(P: Sequence[int], n: int) -> Composition:
    """ε_P = ε_{p_1} + … + ε_{p_c} as a width-n composition."""
    out = [0] * n
    for p in P:
        out[p - 1] += 1
    return tuple(out)


def plus_epsilon(la: Sequence[int], P: Sequence[int], n: int) -> Composition:
    return tuple(a + b for a, b in zip(pad(la, n), epsilon(P, n)))


def all_psets(c: int, n: int) -> List[PSet]:
    """Ω: all c-subsets of [n], lexicographic."""
    return list(combinations(range(1, n + 1), c))


def _check(la: Sequence[int], c: int, n: int) -> None:
    if c < 0:
        raise PreconditionError(f"c must be non-negative, got {c}")
    if sum(la) + c > n:
        raise PreconditionError(f"need |λ| + c ≤ n, got {sum(la)} + {c} > {n}")


def omega_lambda(la: Sequence[int], c: int, n: int) -> List[PSet]:
    """Ω_λ, lexicographic; the first element is {1, …, c}."""
    _check(la, c, n)
    return [P for P in all_psets(c, n) if is_partition(plus_epsilon(la, P, n))]


def orbit_decomposition(la: Sequence[int], c: int, n: int) -> Dict[PSet, List[PSet]]:
    """
    Σ_λ-orbits of Ω keyed by their minimal element.

    Σ_λ permutes positions with equal λ-value, so an orbit is fixed by how
    many elements P takes from each block of equal parts.
    """
    _check(la, c, n)
    row = pad(la, n)
    blocks: Dict[int, int] = {}
    block_of = []
    for value in row:
        blocks.setdefault(value, len(blocks))
        block_of.append(blocks[value])

    orbits: Dict[Tuple[int, ...], List[PSet]] = {}
    for P in all_psets(c, n):
        signature = [0] * len(blocks)
        for p in P:
            signature[block_of[p - 1]] += 1
        orbits.setdefault(tuple(signature), []).append(P)
    # all_psets is lexicographic, so each orbit's first member is its minimum
    return {members[0]: members for members in sorted(orbits.values())}


__all__ = [
    "PSet",
    "all_psets",
    "epsilon",
    "omega_lambda",
    "orbit_decomposition",
    "plus_epsilon",
]

"""
Partitions and Orders - gschur/combinat/partitions.py

Partitions, compositions, I-multipartitions, the dominance order, the
tail-sum order on poset-indexed vectors and the order ≤_I built from them.

Representation:
    Partition       tuple of positive ints, weakly decreasing (no zeros)
    Composition     tuple of n non-negative ints
    Multipartition  tuple of partitions, one per poset label (increasing label order)
    Weight          tuple of compositions, one per poset label (an element of Λ^I(n,d))
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

from gschur.core.errors import DegreeMismatchError

Partition = Tuple[int, ...]
Composition = Tuple[int, ...]
Multipartition = Tuple[Partition, ...]
Weight = Tuple[Composition, ...]


# =============================================================================
# POSET
# =============================================================================


class Poset:
    """
    Finite poset on integer labels, given by covering pairs (i, j) meaning i < j.

    Labels are stored in increasing integer order; that order fixes the slot
    positions of multipartitions and weights.
    """

    def __init__(self, labels: Iterable[int], covers: Iterable[Tuple[int, int]] = ()):
        self.labels: Tuple[int, ...] = tuple(sorted(set(labels)))
        self._pos = {label: k for k, label in enumerate(self.labels)}
        self.covers: Tuple[Tuple[int, int], ...] = tuple(
            sorted((int(a), int(b)) for a, b in covers)
        )
        size = len(self.labels)
        less = [[False] * size for _ in range(size)]
        for a, b in self.covers:
            if a not in self._pos or b not in self._pos:
                raise ValueError(f"covering pair ({a}, {b}) uses an unknown label")
            less[self._pos[a]][self._pos[b]] = True
        # Transitive closure
        for k in range(size):
            for a in range(size):
                if less[a][k]:
                    for b in range(size):
                        if less[k][b]:
                            less[a][b] = True
        for a in range(size):
            if less[a][a]:
                raise ValueError("poset relation has a cycle")
        self._less = tuple(tuple(row) for row in less)

    @classmethod
    def chain(cls, labels: Sequence[int]) -> "Poset":
        labels = sorted(labels)
        return cls(labels, zip(labels, labels[1:]))

    @classmethod
    def antichain(cls, labels: Sequence[int]) -> "Poset":
        return cls(labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Poset(labels={self.labels}, covers={self.covers})"

    def position(self, label: int) -> int:
        return self._pos[label]

    def lt(self, a: int, b: int) -> bool:
        return self._less[self._pos[a]][self._pos[b]]

    def leq(self, a: int, b: int) -> bool:
        return a == b or self.lt(a, b)

    def lt_pos(self, p: int, q: int) -> bool:
        return self._less[p][q]

    def up_set(self, label: int) -> Tuple[int, ...]:
        """All labels t with t ≥ label."""
        p = self._pos[label]
        return tuple(
            t for k, t in enumerate(self.labels) if k == p or self._less[p][k]
        )

    def linear_extension(self) -> Tuple[int, ...]:
        """Labels listed so that a < b in the poset puts a first."""
        remaining = list(self.labels)
        out: List[int] = []
        while remaining:
            label = next(
                t for t in remaining if not any(self.lt(s, t) for s in remaining if s != t)
            )
            out.append(label)
            remaining.remove(label)
        return tuple(out)

    def refines_integer_order(self) -> bool:
        return all(a < b for a, b in self.covers)

    def reversed(self) -> "Poset":
        return Poset(self.labels, [(b, a) for a, b in self.covers])

    def tail_sums(self, values: Sequence[int]) -> Tuple[int, ...]:
        """Σ_{t ≥ s} values_t for every slot s (slots in label order)."""
        size = len(self.labels)
        return tuple(
            sum(values[q] for q in range(size) if q == p or self._less[p][q])
            for p in range(size)
        )


# =============================================================================
# PARTITIONS AND COMPOSITIONS
# =============================================================================


def trim(parts: Iterable[int]) -> Partition:
    """Drop trailing zeros."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def pad(parts: Sequence[int], n: int) -> Composition:
    """Width-n view; raises if more than n nonzero parts."""
    parts = trim(parts)
    if len(parts) > n:
        raise ValueError(f"{parts} has more than {n} parts")
    return tuple(parts) + (0,) * (n - len(parts))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def conjugate(la: Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    la = trim(la)
    if not la:
        return ()
    return tuple(sum(1 for part in la if part >= r) for r in range(1, la[0] + 1))


def dominance_leq(la: Sequence[int], mu: Sequence[int]) -> bool:
    """λ ⊴ μ: every prefix sum of λ is at most the one of μ."""
    if sum(la) != sum(mu):
        raise DegreeMismatchError(sum(la), sum(mu))
    width = max(len(la), len(mu))
    a = list(la) + [0] * (width - len(la))
    b = list(mu) + [0] * (width - len(mu))
    total_a = total_b = 0
    for x, y in zip(a, b):
        total_a += x
        total_b += y
        if total_a > total_b:
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_partitions(d: int, max_parts: int) -> Tuple[Partition, ...]:
    """Partitions of d with at most `max_parts` parts, lexicographically descending."""
    if d == 0:
        return ((),)
    if max_parts <= 0:
        return ()
    found = []
    for mult in sympy_partitions(d, m=max_parts):
        parts: List[int] = []
        for part in sorted(mult, reverse=True):
            parts.extend([part] * mult[part])
        found.append(tuple(parts))
    return tuple(sorted(found, reverse=True))


def enumerate_compositions(d: int, n: int) -> Tuple[Composition, ...]:
    """All compositions of d with exactly n parts, lexicographically descending."""
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    # stars and bars
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        parts = []
        for bar in bars:
            parts.append(bar - prev - 1)
            prev = bar
        parts.append(d + n - 2 - prev)
        out.append(tuple(parts))
    return tuple(sorted(out, reverse=True))


# =============================================================================
# MULTIPARTITIONS
# =============================================================================


def norm(la: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """‖λ‖ = (|λ^(s)|)_s."""
    return tuple(sum(component) for component in la)


def degree(la: Sequence[Sequence[int]]) -> int:
    return sum(norm(la))


def iota(slot: int, la: Sequence[int], slots: int) -> Multipartition:
    """ι_i(λ): λ placed in the given slot position, empty elsewhere."""
    return tuple(trim(la) if k == slot else () for k in range(slots))


def multi_pad(la: Sequence[Sequence[int]], n: int) -> Weight:
    return tuple(pad(component, n) for component in la)


def multi_trim(la: Sequence[Sequence[int]]) -> Multipartition:
    return tuple(trim(component) for component in la)


def multi_add(la: Sequence[Sequence[int]], mu: Sequence[Sequence[int]]) -> Multipartition:
    """Componentwise sum of two multicompositions (trimmed)."""
    out = []
    for a, b in zip(la, mu):
        width = max(len(a), len(b))
        a = list(a) + [0] * (width - len(a))
        b = list(b) + [0] * (width - len(b))
        out.append(trim(x + y for x, y in zip(a, b)))
    return tuple(out)


def is_multipartition(la: Sequence[Sequence[int]]) -> bool:
    return all(is_partition(component) for component in la)


def tail_dominance_leq(a: Sequence[int], b: Sequence[int], poset: Poset) -> bool:
    """a ⊴_I b: Σ_{t ≥ s} a_t ≤ Σ_{t ≥ s} b_t for all s."""
    return all(x <= y for x, y in zip(poset.tail_sums(a), poset.tail_sums(b)))


def order_leqI(
    la: Sequence[Sequence[int]], mu: Sequence[Sequence[int]], poset: Poset
) -> bool:
    """λ ≤_I μ: ‖λ‖ strictly below ‖μ‖ in ⊴_I, or equal norms and dominance per slot."""
    if degree(la) != degree(mu):
        raise DegreeMismatchError(degree(la), degree(mu))
    norm_la, norm_mu = norm(la), norm(mu)
    if norm_la != norm_mu:
        return tail_dominance_leq(norm_la, norm_mu, poset)
    return all(dominance_leq(a, b) for a, b in zip(la, mu))


def order_ltI(
    la: Sequence[Sequence[int]], mu: Sequence[Sequence[int]], poset: Poset
) -> bool:
    return multi_trim(la) != multi_trim(mu) and order_leqI(la, mu, poset)


def order_key(la: Sequence[Sequence[int]], poset: Poset, n: int) -> Tuple:
    """
    Sort key of a linear extension of ≤_I on Λ^I(n,d): λ <_I μ implies
    order_key(λ) < order_key(μ).
    """
    sizes = norm(la)
    flat: Tuple[int, ...] = ()
    for component in la:
        flat += tuple(component) + (0,) * (n - len(component))
    return (sum(poset.tail_sums(sizes)), sizes, flat)


def enumerate_multipartitions(n: int, d: int, poset: Poset) -> List[Multipartition]:
    """Λ_+^I(n,d), descending in the linear extension of ≤_I."""
    slots = len(poset)
    found: List[Multipartition] = []
    for sizes in enumerate_compositions(d, slots):
        pools = [enumerate_partitions(size, n) for size in sizes]
        found.extend(tuple(choice) for choice in product(*pools))
    found.sort(key=lambda la: order_key(la, poset, n), reverse=True)
    return found


def enumerate_multicompositions(n: int, d: int, slots: int) -> List[Weight]:
    """Λ^I(n,d): all slot-tuples of width-n compositions with total d."""
    found: List[Weight] = []
    for sizes in enumerate_compositions(d, slots):
        pools = [enumerate_compositions(size, n) for size in sizes]
        found.extend(tuple(choice) for choice in product(*pools))
    return found


def superconjugate(la: Sequence[Sequence[int]], parities: Sequence[int]) -> Multipartition:
    """Conjugate exactly the components whose slot parity is odd."""
    return tuple(
        conjugate(component) if parity % 2 else trim(component)
        for component, parity in zip(la, parities)
    )


def dominant_rep(weight: Sequence[Sequence[int]]) -> Weight:
    """Sort each slot decreasingly (the Σ_n^I-orbit representative)."""
    return tuple(tuple(sorted(component, reverse=True)) for component in weight)


def parse_partition(text: str) -> Partition:
    """'2,1' -> (2, 1); '' or '-' -> ()."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts = tuple(int(token) for token in text.split(","))
    if any(p < 0 for p in parts) or not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return trim(parts)


def parse_multipartition(text: str, slots: int) -> Multipartition:
    """'1|' -> ((1,), ()); a bare partition is accepted when there is one slot."""
    pieces = text.split("|")
    if len(pieces) != slots:
        raise ValueError(f"expected {slots} components separated by '|', got {text!r}")
    return tuple(parse_partition(piece) for piece in pieces)


def format_partition(la: Sequence[int]) -> str:
    return ",".join(str(p) for p in trim(la)) or "-"


def format_multipartition(la: Sequence[Sequence[int]]) -> str:
    return "|".join(",".join(str(p) for p in trim(c)) for c in la)

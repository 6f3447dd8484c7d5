"""
Words and Orbit Triples - gschur/schur/words.py

A letter is (b, r, s): a basis element of A (by index) and a row and column
in [n]. Words of letters are acted on by Σ_d; an orbit triple is the sorted
(minimal) word of its orbit. Signs count inversions among odd letters, so
every sign is relative to the natural tuple order on letters.
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import FrozenSet, Iterator, NamedTuple, Optional, Sequence, Tuple

from gschur.superalg.data import HeredityData

Letter = Tuple[int, int, int]
Word = Tuple[Letter, ...]
OrbitTriple = Tuple[Letter, ...]


class Canonical(NamedTuple):
    """Orbit representative and the sign of the input relative to it; sign 0 means zero."""

    triple: Optional[OrbitTriple]
    sign: int

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


ZERO = Canonical(None, 0)


class GlobalOrder:
    """
    Total order on B × [n] × [n]: basis index (label, X-rank, Y-rank), then
    row, then column. This is plain tuple order on letters.
    """

    def __init__(self, A: HeredityData):
        self.odd_colors: FrozenSet[int] = frozenset(
            k for k, b in enumerate(A.basis) if b.parity == 1
        )

    def is_odd(self, letter: Letter) -> bool:
        return letter[0] in self.odd_colors

    def parity(self, word: Sequence[Letter]) -> int:
        return sum(1 for letter in word if self.is_odd(letter)) % 2

    def odd_inversions(self, word: Sequence[Letter]) -> int:
        """#{k < l : word_k, word_l odd and word_k > word_l}."""
        odd = [letter for letter in word if self.is_odd(letter)]
        return sum(
            1 for k in range(len(odd)) for l in range(k + 1, len(odd)) if odd[k] > odd[l]
        )

    def sign(self, word: Sequence[Letter]) -> int:
        return -1 if self.odd_inversions(word) % 2 else 1

    def angle(self, left: Sequence[Letter], right: Sequence[Letter]) -> int:
        """⟨a, c⟩ = #{k > l : left_k odd, right_l odd} for words of equal length."""
        count = 0
        odd_before = 0
        for a, c in zip(left, right):
            if self.is_odd(a):
                count += odd_before
            if self.is_odd(c):
                odd_before += 1
        return count

    def has_odd_repeat(self, word: Sequence[Letter]) -> bool:
        seen = set()
        for letter in word:
            if self.is_odd(letter):
                if letter in seen:
                    return True
                seen.add(letter)
        return False

    def canonicalize(self, word: Sequence[Letter]) -> Canonical:
        word = tuple(tuple(letter) for letter in word)
        if self.has_odd_repeat(word):
            return ZERO
        return Canonical(tuple(sorted(word)), self.sign(word))


def canonicalize_words(
    order: GlobalOrder, b: Sequence[int], r: Sequence[int], s: Sequence[int]
) -> Canonical:
    """Canonical form of three parallel words."""
    if not len(b) == len(r) == len(s):
        raise ValueError(f"word lengths differ: {len(b)}, {len(r)}, {len(s)}")
    return order.canonicalize(tuple(zip(b, r, s)))


def stabilizer_size(triple: Sequence[Letter]) -> int:
    """|Stab_{Σ_d}(w)| = Π (multiplicity)!."""
    size = 1
    for count in Counter(triple).values():
        size *= factorial(count)
    return size


def sub_multisets(triple: OrbitTriple, size: int) -> Iterator[Tuple[OrbitTriple, OrbitTriple]]:
    """Distinct splits T = T1 ⊔ T2 with |T1| = size, both sorted."""
    items = sorted(Counter(triple).items())

    def walk(k: int, left: int) -> Iterator[Tuple[Tuple[Letter, ...], Tuple[Letter, ...]]]:
        if k == len(items):
            if left == 0:
                yield (), ()
            return
        letter, count = items[k]
        for take in range(min(count, left), -1, -1):
            for first, second in walk(k + 1, left - take):
                yield (letter,) * take + first, (letter,) * (count - take) + second

    yield from walk(0, size)


def rows(word: Sequence[Letter]) -> Tuple[int, ...]:
    return tuple(letter[1] for letter in word)


def columns(word: Sequence[Letter]) -> Tuple[int, ...]:
    return tuple(letter[2] for letter in word)


__all__ = [
    "Canonical",
    "GlobalOrder",
    "Letter",
    "OrbitTriple",
    "Word",
    "ZERO",
    "canonicalize_words",
    "columns",
    "rows",
    "stabilizer_size",
    "sub_multisets",
]

"""
Generalized Schur Algebra - gschur/schur/algebra.py

T^A(n) = ⊕_d T^A(n,d) in the η basis. Elements are sparse maps from orbit
triples to rationals. Products, coproducts and star products are computed
on basis triples and cached; everything else is bilinear extension.

Conventions:
    ξ_w = sgn(w) ξ_T for a word w in the orbit of T
    η_T = [T]!_c ξ_T, [T]!_c = Π multiplicity! over letters with color in B_c
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from gschur.combinat.partitions import Weight
from gschur.core.errors import DegreeMismatchError, HeredityDataError, PreconditionError
from gschur.core.monitoring import log_event
from gschur.linalg.sparse import ScalarLike, SparseVector, as_scalar
from gschur.schur.words import (
    GlobalOrder,
    Letter,
    OrbitTriple,
    stabilizer_size,
    sub_multisets,
)
from gschur.superalg.data import HeredityData

# =============================================================================
# ELEMENTS
# =============================================================================


@dataclass(frozen=True)
class TElement:
    """Σ_T c_T η_T, all triples of one degree."""

    degree: int
    terms: Mapping[OrbitTriple, Fraction] = field(default_factory=dict)
    _key: Tuple = field(init=False, repr=False, compare=False, hash=False, default=())

    def __post_init__(self) -> None:
        clean: Dict[OrbitTriple, Fraction] = {}
        for triple, coef in self.terms.items():
            if len(triple) != self.degree:
                raise DegreeMismatchError(self.degree, len(triple))
            coef = as_scalar(coef)
            if coef:
                clean[tuple(triple)] = clean.get(tuple(triple), Fraction(0)) + coef
        clean = {t: c for t, c in clean.items() if c}
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_key", tuple(sorted(clean.items())))

    @classmethod
    def zero(cls, degree: int) -> "TElement":
        return cls(degree, {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[OrbitTriple, Fraction]]:
        return iter(self._key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TElement):
            return NotImplemented
        return self.degree == other.degree and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.degree, self._key))

    def _check(self, other: "TElement") -> None:
        if self.degree != other.degree:
            raise DegreeMismatchError(self.degree, other.degree)

    def __add__(self, other: "TElement") -> "TElement":
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return TElement(self.degree, out)

    def __sub__(self, other: "TElement") -> "TElement":
        return self + other.scale(-1)

    def __neg__(self) -> "TElement":
        return self.scale(-1)

    def scale(self, factor: ScalarLike) -> "TElement":
        factor = as_scalar(factor)
        return TElement(self.degree, {t: c * factor for t, c in self.terms.items()})

    def __rmul__(self, factor: ScalarLike) -> "TElement":
        return self.scale(factor)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())


Coproduct = Dict[Tuple[OrbitTriple, OrbitTriple], Fraction]


# =============================================================================
# ALGEBRA
# =============================================================================


class SchurAlgebra:
    """
    The graded algebra T^A(n). Basis triples of degree d are sorted tuples
    of letters (b, r, s) with no odd letter repeated.
    """

    def __init__(self, A: HeredityData, n: int):
        if n < 1:
            raise PreconditionError(f"n must be at least 1, got {n}")
        self.A = A
        self.n = n
        self.order = GlobalOrder(A)
        self.letters: Tuple[Letter, ...] = tuple(
            (b, r, s)
            for b in range(A.dim)
            for r in range(1, n + 1)
            for s in range(1, n + 1)
        )
        self._bc = frozenset(A.bc_indices)
        self._basis: Dict[int, Tuple[OrbitTriple, ...]] = {}
        self._index: Dict[int, Dict[OrbitTriple, int]] = {}
        self._products: Dict[Tuple[OrbitTriple, OrbitTriple], Dict[OrbitTriple, Fraction]] = {}
        self._splits: Dict[Tuple[OrbitTriple, int], Coproduct] = {}
        self._unit: Optional[SparseVector] = None
        self.cache: Dict[str, object] = {}

    def __repr__(self) -> str:
        return f"SchurAlgebra(A={self.A.name!r}, n={self.n})"

    # =========================================================================
    # BASIS
    # =========================================================================

    def basis(self, d: int) -> Tuple[OrbitTriple, ...]:
        """Seq^B(n,d)/Σ_d as sorted orbit triples."""
        if d not in self._basis:
            found = [
                triple
                for triple in combinations_with_replacement(self.letters, d)
                if not self.order.has_odd_repeat(triple)
            ]
            self._basis[d] = tuple(found)
            self._index[d] = {t: k for k, t in enumerate(found)}
            log_event(
                "schur_basis_built",
                level="debug",
                algebra=self.A.name,
                n=self.n,
                d=d,
                dim=len(found),
            )
        return self._basis[d]

    def index(self, d: int) -> Dict[OrbitTriple, int]:
        self.basis(d)
        return self._index[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def element(self, triple: Sequence[Letter], coef: ScalarLike = 1) -> TElement:
        """coef · η_w for a word w; sign-adjusted to its orbit triple, zero for odd repeats."""
        canon = self.order.canonicalize(triple)
        if canon.is_zero:
            return TElement.zero(len(triple))
        return TElement(len(triple), {canon.triple: as_scalar(coef) * canon.sign})

    def to_vector(self, u: TElement) -> SparseVector:
        index = self.index(u.degree)
        return SparseVector({index[t]: c for t, c in u.terms.items()}, len(index))

    def from_vector(self, d: int, v: SparseVector) -> TElement:
        basis = self.basis(d)
        return TElement(d, {basis[k]: c for k, c in v.entries.items()})

    def c_factorial(self, triple: Sequence[Letter]) -> int:
        """[T]!_c = Π (multiplicity)! over letters whose color lies in B_c."""
        value = 1
        for letter, count in Counter(triple).items():
            if letter[0] in self._bc:
                value *= factorial(count)
        return value

    def parity(self, triple: Sequence[Letter]) -> int:
        return self.order.parity(triple)

    def element_parity(self, u: TElement) -> Optional[int]:
        parities = {self.parity(t) for t in u.terms}
        return parities.pop() if len(parities) == 1 else None

    def weight_of(self, triple: Sequence[Letter]) -> Tuple[Weight, Weight]:
        """(left, right) weights: η_α η_T η_β = η_T exactly for this pair."""
        slots = len(self.A.poset)
        left = [[0] * self.n for _ in range(slots)]
        right = [[0] * self.n for _ in range(slots)]
        for b, r, s in triple:
            element = self.A.basis[b]
            i = self.A.left_idempotent(element.x)
            j = self.A.right_idempotent(element.y)
            if i is None or j is None:
                raise HeredityDataError(f"{element.name} has no unique idempotent on both sides")
            left[self.A.poset.position(i)][r - 1] += 1
            right[self.A.poset.position(j)][s - 1] += 1
        return tuple(map(tuple, left)), tuple(map(tuple, right))

    # =========================================================================
    # PRODUCT
    # =========================================================================

    def _matching_words(
        self, columns: Sequence[int], pool: Counter
    ) -> Iterator[Tuple[Letter, ...]]:
        """Distinct words over the multiset `pool` whose k-th row is columns[k]."""
        chosen: List[Letter] = []

        def walk(k: int) -> Iterator[Tuple[Letter, ...]]:
            if k == len(columns):
                yield tuple(chosen)
                return
            for letter in sorted(pool):
                if pool[letter] and letter[1] == columns[k]:
                    pool[letter] -= 1
                    chosen.append(letter)
                    yield from walk(k + 1)
                    chosen.pop()
                    pool[letter] += 1

        yield from walk(0)

    def _multiply_basis(self, T1: OrbitTriple, T2: OrbitTriple) -> Dict[OrbitTriple, Fraction]:
        key = (T1, T2)
        if key in self._products:
            return self._products[key]
        if len(T1) != len(T2):
            raise DegreeMismatchError(len(T1), len(T2))
        if Counter(s for _, _, s in T1) != Counter(r for _, r, _ in T2):
            self._products[key] = {}
            return {}

        order = self.order
        stab1 = stabilizer_size(T1)
        columns = [s for _, _, s in T1]
        acc: Dict[OrbitTriple, Fraction] = {}
        for w2 in self._matching_words(columns, Counter(T2)):
            sign = order.sign(w2) * (-1 if order.angle(T1, w2) % 2 else 1)
            partial: List[Tuple[Tuple[Letter, ...], Fraction]] = [((), Fraction(sign))]
            for (a, r, _), (c, _, u) in zip(T1, w2):
                structure = self.A.structure(a, c)
                if structure.is_zero:
                    partial = []
                    break
                partial = [
                    (word + ((b, r, u),), coef * value)
                    for word, coef in partial
                    for b, value in structure
                ]
            for word, coef in partial:
                canon = order.canonicalize(word)
                if canon.is_zero:
                    continue
                weight = coef * canon.sign * Fraction(stabilizer_size(canon.triple), stab1)
                acc[canon.triple] = acc.get(canon.triple, Fraction(0)) + weight

        scale = self.c_factorial(T1) * self.c_factorial(T2)
        out = {
            t: c * Fraction(scale, self.c_factorial(t)) for t, c in acc.items() if c
        }
        self._products[key] = out
        return out

    def multiply(self, u: TElement, v: TElement) -> TElement:
        """Product in T(n,d) (Koszul-signed componentwise product on M_n(A)^{⊗d})."""
        if u.degree != v.degree:
            raise DegreeMismatchError(u.degree, v.degree)
        out: Dict[OrbitTriple, Fraction] = {}
        for t1, a in u.terms.items():
            for t2, b in v.terms.items():
                for t, c in self._multiply_basis(t1, t2).items():
                    out[t] = out.get(t, Fraction(0)) + a * b * c
        return TElement(u.degree, out)

    def multiply_vectors(self, d: int):
        """Product as a bilinear map on coordinate vectors of T(n,d)."""

        def product(u: SparseVector, v: SparseVector) -> SparseVector:
            return self.to_vector(self.multiply(self.from_vector(d, u), self.from_vector(d, v)))

        return product

    # =========================================================================
    # COPRODUCT AND STAR
    # =========================================================================

    def _split_basis(self, T: OrbitTriple, e: int) -> Coproduct:
        key = (T, e)
        if key not in self._splits:
            out: Coproduct = {}
            total = self.c_factorial(T)
            for T1, T2 in sub_multisets(T, e):
                sign = self.order.sign(T1 + T2)
                ratio = Fraction(total, self.c_factorial(T1) * self.c_factorial(T2))
                out[(T1, T2)] = sign * ratio
            self._splits[key] = out
        return self._splits[key]

    def coproduct_split(self, u: TElement, e: int) -> Coproduct:
        """The T(n,e) ⊗ T(n,d-e) component of ∇(u)."""
        if not 0 <= e <= u.degree:
            raise PreconditionError(f"split {e} outside 0..{u.degree}")
        out: Coproduct = {}
        for T, c in u.terms.items():
            for pair, value in self._split_basis(T, e).items():
                out[pair] = out.get(pair, Fraction(0)) + c * value
        return {pair: c for pair, c in out.items() if c}

    def coproduct(self, u: TElement) -> List[Tuple[TElement, TElement, Fraction]]:
        """∇(u) as (η_{T1}, η_{T2}, coefficient) terms over all splits."""
        terms: List[Tuple[TElement, TElement, Fraction]] = []
        for e in range(u.degree + 1):
            for (T1, T2), c in sorted(self.coproduct_split(u, e).items()):
                terms.append((TElement(e, {T1: 1}), TElement(u.degree - e, {T2: 1}), c))
        return terms

    def _star_basis(
        self, T1: OrbitTriple, T2: OrbitTriple
    ) -> Tuple[Optional[OrbitTriple], Fraction]:
        canon = self.order.canonicalize(T1 + T2)
        if canon.is_zero:
            return None, Fraction(0)
        first, second = Counter(T1), Counter(T2)
        shuffles = 1
        for letter in set(first) & set(second):
            shuffles *= comb(first[letter] + second[letter], first[letter])
        ratio = Fraction(
            self.c_factorial(T1) * self.c_factorial(T2), self.c_factorial(canon.triple)
        )
        return canon.triple, canon.sign * shuffles * ratio

    def star(self, u: TElement, v: TElement) -> TElement:
        """Shuffle product T(n,c) × T(n,d-c) → T(n,d)."""
        out: Dict[OrbitTriple, Fraction] = {}
        for t1, a in u.terms.items():
            for t2, b in v.terms.items():
                triple, c = self._star_basis(t1, t2)
                if triple is not None:
                    out[triple] = out.get(triple, Fraction(0)) + a * b * c
        return TElement(u.degree + v.degree, out)

    # =========================================================================
    # UNITS
    # =========================================================================

    def unit_of_A(self) -> SparseVector:
        if self._unit is None:
            unit = self.A.unit()
            if unit is None:
                raise HeredityDataError(f"{self.A.name} has no unit")
            self._unit = unit
        return self._unit

    def one(self, d: int) -> TElement:
        """Identity of T(n,d)."""
        from gschur.schur.idempotents import truncation_idempotent

        return truncation_idempotent(self, self.n, d)


def enumerate_basis(n: int, d: int, A: HeredityData) -> List[OrbitTriple]:
    """Orbit minima of Seq^B(n,d)."""
    if d < 0:
        raise PreconditionError(f"degree must be non-negative, got {d}")
    return list(SchurAlgebra(A, n).basis(d))


__all__ = ["Coproduct", "SchurAlgebra", "TElement", "enumerate_basis"]

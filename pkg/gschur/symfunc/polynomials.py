"""
Symmetric Polynomials - gschur/symfunc/polynomials.py

SymPoly stores a symmetric polynomial in n variables by its coefficients on
monomial symmetric functions m_μ (μ a partition with at most n parts).
MultiSymPolynomial is an element of a tensor power of Sym, kept by its
Schur expansion with the monomial view derived on demand.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Hashable, Iterator, Mapping, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from gschur.combinat.partitions import Partition, enumerate_partitions, pad, trim
from gschur.core.errors import PreconditionError

# =============================================================================
# KOSTKA NUMBERS
# =============================================================================


def _horizontal_strips(la: Partition, size: int) -> Iterator[Partition]:
    """All ν ⊆ λ with λ/ν a horizontal strip of the given size."""
    rows = len(la)

    def walk(k: int, removed: int, acc: Tuple[int, ...]) -> Iterator[Partition]:
        if k == rows:
            if removed == size:
                yield trim(acc)
            return
        low = la[k + 1] if k + 1 < rows else 0
        for part in range(la[k], low - 1, -1):
            taken = removed + la[k] - part
            if taken > size:
                break
            yield from walk(k + 1, taken, acc + (part,))

    yield from walk(0, 0, ())


@lru_cache(maxsize=None)
def kostka(la: Partition, content: Tuple[int, ...]) -> int:
    """Number of SSYT of shape λ with the given content (a composition)."""
    la = trim(la)
    if sum(la) != sum(content):
        return 0
    if not content:
        return 1 if not la else 0
    last = content[-1]
    return sum(kostka(nu, content[:-1]) for nu in _horizontal_strips(la, last))


# =============================================================================
# SYMMETRIC POLYNOMIALS
# =============================================================================


class SymPoly:
    """Symmetric polynomial in n variables, Σ_μ c_μ m_μ."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], int]] = None):
        self.n = n
        clean: Dict[Partition, int] = {}
        for mu, coef in (terms or {}).items():
            mu = trim(mu)
            if len(mu) > n:
                raise ValueError(f"{mu} has more than {n} parts")
            if coef:
                clean[mu] = clean.get(mu, 0) + coef
        self.terms: Dict[Partition, int] = {mu: c for mu, c in clean.items() if c}

    @classmethod
    def one(cls, n: int) -> "SymPoly":
        return cls(n, {(): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"SymPoly(n={self.n}, terms={dict(sorted(self.terms.items(), reverse=True))})"

    def monomials(self) -> Dict[Tuple[int, ...], int]:
        """Full monomial expansion {exponent vector: coefficient}."""
        out: Dict[Tuple[int, ...], int] = {}
        for mu, coef in self.terms.items():
            for alpha in multiset_permutations(list(pad(mu, self.n))):
                out[tuple(alpha)] = coef
        return out

    def evaluate_at_ones(self) -> int:
        return sum(self.monomials().values())

    def leading(self) -> Tuple[Partition, int]:
        """Lexicographically largest m_μ and its coefficient."""
        mu = max(self.terms, key=lambda p: pad(p, self.n))
        return mu, self.terms[mu]

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return SymPoly(self.n, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "SymPoly":
        return SymPoly(self.n, {mu: factor * c for mu, c in self.terms.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out: Dict[Partition, int] = {}
        right = other.monomials()
        for alpha, a in self.monomials().items():
            for beta, b in right.items():
                gamma = tuple(x + y for x, y in zip(alpha, beta))
                if all(gamma[k] >= gamma[k + 1] for k in range(self.n - 1)):
                    key = trim(gamma)
                    out[key] = out.get(key, 0) + a * b
        return SymPoly(self.n, out)

    def _check(self, other: "SymPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")


@lru_cache(maxsize=None)
def _schur_terms(la: Partition, n: int) -> Tuple[Tuple[Partition, int], ...]:
    out = []
    for mu in enumerate_partitions(sum(la), n):
        k = kostka(la, pad(mu, n))
        if k:
            out.append((mu, k))
    return tuple(out)


def schur_poly(la: Sequence[int], n: int) -> SymPoly:
    """s_λ(z_1, …, z_n); zero when λ has more than n parts."""
    la = trim(la)
    if len(la) > n:
        return SymPoly(n)
    return SymPoly(n, dict(_schur_terms(la, n)))


def schur_expand(p: SymPoly) -> Dict[Partition, int]:
    """Coefficients of p on Schur polynomials (triangular peel of lex-max terms)."""
    out: Dict[Partition, int] = {}
    while not p.is_zero:
        mu, coef = p.leading()
        out[mu] = coef
        p = p - schur_poly(mu, p.n).scale(coef)
    return out


# =============================================================================
# MULTI-SYMMETRIC POLYNOMIALS
# =============================================================================

SchurKey = Tuple[Partition, ...]


class MultiSymPolynomial:
    """
    Element of Sym^S = Sym^{⊗S}, one tensor slot per key in `slots`.

    `n` is the number of variables per slot; None means the formal (stable)
    ring, where only the Schur view is available.
    """

    def __init__(
        self,
        slots: Sequence[Hashable],
        schur: Optional[Mapping[Sequence[Sequence[int]], int]] = None,
        n: Optional[int] = None,
    ):
        self.slots: Tuple[Hashable, ...] = tuple(slots)
        self.n = n
        clean: Dict[SchurKey, int] = {}
        for key, coef in (schur or {}).items():
            if len(key) != len(self.slots):
                raise ValueError(f"term {key} does not have {len(self.slots)} slots")
            key = tuple(trim(part) for part in key)
            if n is not None and any(len(part) > n for part in key):
                continue
            clean[key] = clean.get(key, 0) + coef
        self.schur: Dict[SchurKey, int] = {k: c for k, c in clean.items() if c}

    # =========================================================================
    # CONSTRUCTORS
    # =========================================================================

    @classmethod
    def from_schur(
        cls, slots: Sequence[Hashable], schur: Mapping, n: Optional[int] = None
    ) -> "MultiSymPolynomial":
        return cls(slots, schur, n)

    @classmethod
    def from_monomials(
        cls, slots: Sequence[Hashable], n: int, terms: Mapping[Sequence[Sequence[int]], int]
    ) -> "MultiSymPolynomial":
        """
        Build from dominant monomial coefficients {(μ_s)_s: c}. The leading
        tuple of ⊗ s_ν is ν itself, so peeling lex-max terms recovers the
        Schur expansion.
        """
        remaining: Dict[SchurKey, int] = {}
        for key, coef in terms.items():
            key = tuple(trim(part) for part in key)
            if coef:
                remaining[key] = remaining.get(key, 0) + coef
        schur: Dict[SchurKey, int] = {}
        while remaining:
            lead = max(remaining, key=lambda k: tuple(pad(part, n) for part in k))
            coef = remaining[lead]
            schur[lead] = coef
            for key, c in _tensor_schur_monomials(lead, n).items():
                value = remaining.get(key, 0) - coef * c
                if value:
                    remaining[key] = value
                else:
                    remaining.pop(key, None)
        return cls(slots, schur, n)

    # =========================================================================
    # VIEWS
    # =========================================================================

    def schur_expansion(self) -> Dict[SchurKey, int]:
        return dict(self.schur)

    def monomial_terms(self) -> Dict[SchurKey, int]:
        """Coefficients on ⊗ m_μ (dominant exponents per slot)."""
        if self.n is None:
            raise PreconditionError("monomial view needs a finite number of variables")
        out: Dict[SchurKey, int] = {}
        for key, coef in self.schur.items():
            for mono, c in _tensor_schur_monomials(key, self.n).items():
                out[mono] = out.get(mono, 0) + coef * c
        return {k: c for k, c in out.items() if c}

    def dimension(self) -> int:
        """Value at all-ones (the dimension of a module with this character)."""
        if self.n is None:
            raise PreconditionError("dimension needs a finite number of variables")
        total = 0
        for key, coef in self.schur.items():
            value = coef
            for part in key:
                value *= schur_poly(part, self.n).evaluate_at_ones()
            total += value
        return total

    @property
    def is_zero(self) -> bool:
        return not self.schur

    # =========================================================================
    # ARITHMETIC
    # =========================================================================

    def _check(self, other: "MultiSymPolynomial") -> None:
        if self.slots != other.slots:
            raise ValueError(f"slot sets differ: {self.slots} vs {other.slots}")

    def __add__(self, other: "MultiSymPolynomial") -> "MultiSymPolynomial":
        self._check(other)
        out = dict(self.schur)
        for key, c in other.schur.items():
            out[key] = out.get(key, 0) + c
        return MultiSymPolynomial(self.slots, out, _common_n(self.n, other.n))

    def scale(self, factor: int) -> "MultiSymPolynomial":
        return MultiSymPolynomial(
            self.slots, {k: factor * c for k, c in self.schur.items()}, self.n
        )

    def __sub__(self, other: "MultiSymPolynomial") -> "MultiSymPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "MultiSymPolynomial") -> "MultiSymPolynomial":
        from gschur.symfunc.littlewood import lr_product

        self._check(other)
        out: Dict[SchurKey, int] = {}
        for left, a in self.schur.items():
            for right, b in other.schur.items():
                partial: Dict[SchurKey, int] = {(): a * b}
                for mu, nu in zip(left, right):
                    grown: Dict[SchurKey, int] = {}
                    expansion = lr_product(mu, nu)
                    for prefix, c in partial.items():
                        for la, m in expansion.items():
                            key = prefix + (la,)
                            grown[key] = grown.get(key, 0) + c * m
                    partial = grown
                for key, c in partial.items():
                    out[key] = out.get(key, 0) + c
        return MultiSymPolynomial(self.slots, out, _common_n(self.n, other.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiSymPolynomial):
            return NotImplemented
        return self.slots == other.slots and self.schur == other.schur

    def __repr__(self) -> str:
        return f"MultiSymPolynomial(slots={self.slots}, n={self.n}, schur={self.schur})"


def _common_n(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise ValueError(f"variable counts differ: {a} vs {b}")


def _tensor_schur_monomials(key: SchurKey, n: int) -> Dict[SchurKey, int]:
    out: Dict[SchurKey, int] = {(): 1}
    for part in key:
        grown: Dict[SchurKey, int] = {}
        for mu, c in schur_poly(part, n).terms.items():
            for prefix, a in out.items():
                grown[prefix + (mu,)] = a * c
        out = grown
    return out


def restrict(p: MultiSymPolynomial, n: int) -> MultiSymPolynomial:
    """ρ_n: drop Schur terms with more than n parts in some slot."""
    return MultiSymPolynomial(p.slots, p.schur, n)


__all__ = [
    "MultiSymPolynomial",
    "SymPoly",
    "kostka",
    "restrict",
    "schur_expand",
    "schur_poly",
]

"""
Tensor Products - gschur/modules/tensor.py

V ⊗ W as a T(n, d_V + d_W)-module through the coproduct, with the Koszul
sign (u' ⊗ u'')(v ⊗ w) = (-1)^{|u''||v|} u'v ⊗ u''w. Basis vector (a, b)
has index a·dim W + b.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from gschur.core.errors import PreconditionError
from gschur.linalg.sparse import SparseVector, linear_combination, tensor_vectors
from gschur.modules.base import ModuleRep
from gschur.schur.algebra import TElement


class TensorModule(ModuleRep):
    def __init__(self, V: ModuleRep, W: ModuleRep):
        super().__init__()
        if V.T is not W.T and (V.T.A is not W.T.A or V.T.n != W.T.n):
            raise PreconditionError("tensor factors must be modules over the same T(n)")
        self.T = V.T
        self.V = V
        self.W = W
        self.degree = V.degree + W.degree
        pairs = [(a, b) for a in range(V.dim) for b in range(W.dim)]
        self.parities = tuple((V.parities[a] + W.parities[b]) % 2 for a, b in pairs)
        self.weights = tuple(
            tuple(
                tuple(x + y for x, y in zip(p, q))
                for p, q in zip(V.weights[a], W.weights[b])
            )
            for a, b in pairs
        )
        self.names = tuple(f"{V.names[a]}⊗{W.names[b]}" for a, b in pairs)

    def index(self, a: int, b: int) -> int:
        return a * self.W.dim + b

    def pure(self, v: SparseVector, w: SparseVector) -> SparseVector:
        """v ⊗ w in the tensor basis."""
        return tensor_vectors(v, w)

    def _act_on_basis(self, u: TElement, k: int) -> SparseVector:
        a, b = divmod(k, self.W.dim)
        terms: List[Tuple[Fraction, SparseVector]] = []
        for (T1, T2), coef in self.T.coproduct_split(u, self.V.degree).items():
            left = self.V.act_on_basis(TElement(self.V.degree, {T1: 1}), a)
            if left.is_zero:
                continue
            right = self.W.act_on_basis(TElement(self.W.degree, {T2: 1}), b)
            if right.is_zero:
                continue
            sign = -1 if self.T.parity(T2) * self.V.parities[a] % 2 else 1
            terms.append((coef * sign, tensor_vectors(left, right)))
        return linear_combination(terms, self.dim)

    def __repr__(self) -> str:
        return f"TensorModule({self.V!r}, {self.W!r})"


def tensor(V: ModuleRep, W: ModuleRep) -> TensorModule:
    return TensorModule(V, W)


__all__ = ["TensorModule", "tensor"]

"""
Base Standard Modules - gschur/superalg/standard.py

Δ(i) = Ã ẽ_i with basis {v_x : x ∈ X(i)} and the right standard module
Δ^op(i) = ẽ_i Ã with basis {w_y : y ∈ Y(i)}.
"""

from __future__ import annotations

from gschur.linalg.sparse import SparseVector
from gschur.superalg.data import HeredityData
from gschur.superalg.heredity import StandardQuotient


def _ideal(A: HeredityData, label: int):
    return [SparseVector.unit(k, A.dim) for k in A.ideal_above(label)]


def standard_module_A(A: HeredityData, label: int) -> StandardQuotient:
    """Left module; a·v_x = Σ l^x_{x'}(a) v_{x'}."""
    colors = A.X[label]
    return StandardQuotient(
        A.dim,
        A.multiply,
        [A.color_vector(x) for x in colors],
        _ideal(A, label),
        parities=[x.parity for x in colors],
        names=[f"v_{x.name}" for x in colors],
    )


def right_standard_module_A(A: HeredityData, label: int) -> StandardQuotient:
    """Right module; act(a, w_y) computes w_y·a."""
    colors = A.Y[label]
    return StandardQuotient(
        A.dim,
        lambda a, y: A.multiply(y, a),
        [A.color_vector(y) for y in colors],
        _ideal(A, label),
        parities=[y.parity for y in colors],
        names=[f"w_{y.name}" for y in colors],
    )


__all__ = ["right_standard_module_A", "standard_module_A"]

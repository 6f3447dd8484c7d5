"""
Tests for exact linear algebra - tests/test_exactlin.py
"""

from fractions import Fraction

import pytest

from gschur.core.errors import DimensionMismatchError
from gschur.linalg.echelon import (
    EchelonBuilder,
    Subspace,
    TrackedSpan,
    closure,
    echelonize,
    member,
    quotient_dimension,
    reduce,
    span_images,
)
from gschur.linalg.sparse import SparseVector, linear_combination, tensor_vectors


def vec(*values):
    return SparseVector.from_dense(values)


# =============================================================================
# SPARSE VECTORS
# =============================================================================


def test_zero_entries_are_dropped():
    """Explicit zeros never appear in the entries."""
    v = SparseVector({0: 0, 2: Fraction(1, 2)}, 3)
    assert v.support == (2,)
    assert v[0] == 0
    assert v.pivot == 2


def test_arithmetic_is_exact():
    """Rational arithmetic keeps exact values."""
    v = vec(1, 2, 0)
    w = vec(Fraction(1, 3), 0, 1)
    assert (v + w).to_dense() == [Fraction(4, 3), 2, 1]
    assert (v - v).is_zero
    assert v.axpy(Fraction(-1, 2), vec(2, 4, 0)).is_zero
    assert (3 * w).to_dense() == [1, 0, 3]


def test_dimension_mismatch_raises():
    """Adding vectors of different dimensions is rejected."""
    with pytest.raises(DimensionMismatchError):
        vec(1, 0) + vec(1, 0, 0)


def test_linear_combination_and_tensor():
    """Linear combinations and Kronecker products use index a·dim + b."""
    v = linear_combination([(2, vec(1, 0)), (-1, vec(1, 1))], 2)
    assert v.to_dense() == [1, -1]
    t = tensor_vectors(vec(0, 1), vec(3, 0, 5))
    assert t.dim == 6
    assert t.to_dense() == [0, 0, 0, 3, 0, 5]


def test_restrict_zeroes_other_coordinates():
    """restrict keeps only the named coordinates."""
    assert vec(1, 2, 3).restrict([0, 2]).to_dense() == [1, 0, 3]


# =============================================================================
# ECHELON FORMS
# =============================================================================


def test_echelonize_is_reduced():
    """Rows are normalized at their pivots and vanish at the other pivots."""
    S = echelonize([vec(2, 4, 0), vec(1, 3, 1), vec(3, 7, 1)])
    assert S.rank == 2
    assert S.pivots == (0, 1)
    for row in S.rows:
        assert row[row.pivot] == 1
        for other in S.rows:
            if other is not row:
                assert row[other.pivot] == 0


def test_membership_and_coordinates():
    """member returns coordinates over the rows, or None outside the span."""
    S = echelonize([vec(1, 1, 0), vec(0, 1, 1)])
    coords = member(S, vec(1, 2, 1))
    assert coords is not None
    assert linear_combination(zip(coords, S.rows), 3) == vec(1, 2, 1)
    assert member(S, vec(0, 0, 1)) is None
    assert vec(1, 0, -1) in S


def test_reduce_gives_residual():
    """The residual is zero exactly on members."""
    S = echelonize([vec(1, 0, 0)])
    assert reduce(S, vec(5, 0, 0)).is_zero
    assert reduce(S, vec(5, 1, 0)) == vec(0, 1, 0)


def test_builder_reports_rank_growth():
    """add returns True only when the rank grows."""
    builder = EchelonBuilder(2)
    assert builder.add(vec(1, 1))
    assert not builder.add(vec(2, 2))
    assert builder.add(vec(0, 1))
    assert builder.rank == 2
    assert builder.freeze().is_full()


def test_tracked_span_expresses_in_generators():
    """Coordinates are over the original generators, dependent ones included."""
    gens = [vec(1, 0, 1), vec(0, 1, 0), vec(1, 1, 1)]
    span = TrackedSpan(gens, 3)
    assert span.rank == 2
    assert not span.independent
    coords = span.express(vec(2, 3, 2))
    assert coords is not None
    assert linear_combination(zip(coords, gens), 3) == vec(2, 3, 2)
    assert span.express(vec(0, 0, 1)) is None


def test_closure_under_shift():
    """The cyclic subspace of a nilpotent shift is the full flag."""

    def shift(v):
        return SparseVector({k + 1: c for k, c in v.entries.items() if k + 1 < 3}, 3)

    S = closure([vec(1, 0, 0)], [shift])
    assert S.rank == 3
    assert closure([vec(0, 0, 1)], [shift]).rank == 1


def test_empty_input_spans_zero_subspace():
    """No vectors give the rank-0 subspace, with or without a dimension."""
    assert echelonize([]).rank == 0
    assert echelonize([]).dim == 0
    assert closure([], []).rank == 0
    S = echelonize([], dim=3)
    assert (S.rank, S.dim) == (0, 3)
    assert vec(0, 0, 0) in S
    assert vec(1, 0, 0) not in S
    assert closure([], [lambda v: v], dim=2).rank == 0


def test_span_images_with_identity_and_base():
    """One round of images over an operator set containing the identity."""

    def swap(v):
        return SparseVector({1 - k: c for k, c in v.entries.items()}, 2)

    base = Subspace((), 2)
    S = span_images([vec(1, 0)], [lambda v: v, swap], 2, base=base)
    assert S.rank == 2
    T = span_images([vec(1, 1)], [lambda v: v, swap], 2)
    assert T.rank == 1


def test_quotient_dimension_requires_inclusion():
    """The quotient dimension is defined only for nested subspaces."""
    big = echelonize([vec(1, 0, 0), vec(0, 1, 0)])
    small = echelonize([vec(1, 1, 0)])
    assert quotient_dimension(big, small) == 1
    with pytest.raises(ValueError):
        quotient_dimension(small, echelonize([vec(0, 0, 1)]))

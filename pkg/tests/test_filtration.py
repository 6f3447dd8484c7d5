"""
Tests for standard filtrations of Δ(λ) ⊗ Δ(1^c) - tests/test_filtration.py
"""

from itertools import combinations

import pytest

from gschur.combinat.partitions import enumerate_partitions, iota, is_partition, pad, trim
from gschur.core.errors import PreconditionError
from gschur.modules.filtration import build_filtration, truncated_tensor_filtration
from gschur.modules.standard import standard_dimension

# =============================================================================
# HELPERS
# =============================================================================


def pieri_cases(name, n_max, labels, slow_from):
    """Every (n, λ, c, label) with |λ| ≥ 1, c ≥ 1 and |λ| + c ≤ n ≤ n_max."""
    cases = []
    for n in range(2, n_max + 1):
        marks = [pytest.mark.slow] if n >= slow_from else []
        for c in range(1, n):
            for d in range(1, n - c + 1):
                for la in enumerate_partitions(d, d):
                    for label in labels:
                        cases.append(pytest.param(name, n, la, c, label, marks=marks))
    return cases


def pieri_factors(la, c, label, n, A):
    """ι_i(λ + ε_P) over the c-subsets P of [n] that keep a partition, lexicographic."""
    slots = len(A.poset)
    slot = A.poset.position(label)
    factors = []
    for P in combinations(range(1, n + 1), c):
        parts = list(pad(la, n))
        for p in P:
            parts[p - 1] += 1
        if is_partition(parts):
            factors.append(iota(slot, trim(parts), slots))
    return factors


FILTRATION_GRID = pieri_cases("trivial_algebra", 4, [1], slow_from=4) + pieri_cases(
    "super_ut", 3, [1, 2], slow_from=3
)


# =============================================================================
# FULL WIDTH
# =============================================================================


def test_classical_pieri_filtration(trivial_algebra, schur):
    """Δ(1) ⊗ Δ(1) over S(2,2) has factors Δ(2) then Δ(1,1)."""
    report = build_filtration((1,), 1, 1, 2, trivial_algebra, T=schur(trivial_algebra, 2))
    assert report.factors == [((2,),), ((1, 1),)]
    assert [step.pset for step in report.steps] == [(1,), (2,)]
    assert [step.quotient_dim for step in report.steps] == [3, 1]
    assert report.tensor_dim == 4
    assert report.generation_ok
    assert report.dimension_sum_ok
    assert report.certified
    assert report.skipped == []


def test_filtration_with_wider_shape(trivial_algebra, schur):
    """Δ(2) ⊗ Δ(1) over S(3,3) has factors Δ(3) then Δ(2,1)."""
    report = build_filtration((2,), 1, 1, 3, trivial_algebra, T=schur(trivial_algebra, 3))
    assert report.factors == [((3,),), ((2, 1),)]
    assert [step.expected_dim for step in report.steps] == [10, 8]
    assert report.certified


def test_odd_arrow_filtration(super_ut, schur):
    """Over superUT the factors sit in the slot of label 2."""
    report = build_filtration((1,), 1, 2, 2, super_ut, T=schur(super_ut, 2), strict=True)
    assert report.factors == [((), (2,)), ((), (1, 1))]
    assert report.certified
    assert all(step.parity is not None for step in report.steps)


@pytest.mark.parametrize("name, n, la, c, label", FILTRATION_GRID)
def test_filtration_grid(name, n, la, c, label, schur, request):
    """Every small (λ, c, i) certifies with the Pieri factors in P-set order."""
    A = request.getfixturevalue(name)
    report = build_filtration(la, c, label, n, A, T=schur(A, n))
    assert report.factors == pieri_factors(la, c, label, n, A)
    assert report.generation_ok
    assert report.dimension_sum_ok
    assert all(step.weight_ok and step.y_annihilation_ok for step in report.steps)
    assert report.certified
    slots, slot = len(A.poset), A.poset.position(label)
    assert report.tensor_dim == standard_dimension(
        iota(slot, la, slots), n, A
    ) * standard_dimension(iota(slot, (1,) * c, slots), n, A)


@pytest.mark.slow
def test_bc_filtration(bc_algebra, schur):
    """B_c letters do not break certification."""
    report = build_filtration((1,), 1, 2, 2, bc_algebra, T=schur(bc_algebra, 2))
    assert report.certified


def test_filtration_preconditions(trivial_algebra, schur):
    """d + c must fit in n and the algebra must have width n."""
    with pytest.raises(PreconditionError, match="requires d\\+c ≤ n"):
        build_filtration((1,), 1, 1, 1, trivial_algebra)
    with pytest.raises(PreconditionError, match="width"):
        build_filtration((1,), 1, 1, 3, trivial_algebra, T=schur(trivial_algebra, 2))


def test_report_model(trivial_algebra, schur):
    """Reports serialize through the pydantic schema."""
    report = build_filtration((1,), 1, 1, 2, trivial_algebra, T=schur(trivial_algebra, 2))
    model = report.to_model()
    assert model.certified
    assert model.steps[0].highest_weight == [[2]]
    assert model.steps[1].pset == [2]
    assert '"certified":true' in model.model_dump_json()


# =============================================================================
# TRUNCATION
# =============================================================================


def test_truncated_filtration_skips_vanishing_factors(trivial_algebra, schur):
    """Cutting to n = 1 keeps Δ_1(2) and drops Δ_1(1,1) = 0."""
    report = truncated_tensor_filtration(
        (1,), 1, 1, 1, 2, trivial_algebra, T=schur(trivial_algebra, 2)
    )
    assert report.N == 2
    assert report.tensor_dim == 1
    assert report.factors == [((2,),)]
    assert report.skipped == [((1, 1),)]
    assert report.certified


def test_truncated_filtration_at_full_width(trivial_algebra, schur):
    """n = N reproduces the untruncated chain."""
    report = truncated_tensor_filtration(
        (1,), 1, 1, 2, 2, trivial_algebra, T=schur(trivial_algebra, 2)
    )
    assert report.factors == [((2,),), ((1, 1),)]
    assert report.certified


def test_truncated_filtration_preconditions(trivial_algebra):
    """N must hold d + c and n."""
    with pytest.raises(PreconditionError, match="N ≥ d\\+c"):
        truncated_tensor_filtration((1,), 1, 1, 1, 1, trivial_algebra)
    with pytest.raises(PreconditionError, match="N ≥ n"):
        truncated_tensor_filtration((1,), 1, 1, 3, 2, trivial_algebra)


TRUNCATION_GRID = [
    (n, la, c)
    for n in (1, 2)
    for c in range(1, 4)
    for d in range(1, 5 - c)
    for la in enumerate_partitions(d, d)
]


@pytest.mark.slow
@pytest.mark.parametrize("n, la, c", TRUNCATION_GRID)
def test_truncated_filtration_grid(n, la, c, trivial_algebra, schur):
    """Cutting the width-4 chain keeps exactly the factors with at most n rows."""
    A = trivial_algebra
    report = truncated_tensor_filtration(la, c, 1, n, 4, A, T=schur(A, 4))
    full = pieri_factors(la, c, 1, 4, A)
    assert report.factors == [nu for nu in full if len(nu[0]) <= n]
    assert report.skipped == [nu for nu in full if len(nu[0]) > n]
    assert report.tensor_dim == standard_dimension((la,), n, A) * standard_dimension(
        ((1,) * c,), n, A
    )
    assert sum(step.quotient_dim for step in report.steps) == report.tensor_dim
    assert report.certified

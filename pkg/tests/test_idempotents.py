"""
Tests for weight idempotents, Weyl elements and truncation - tests/test_idempotents.py
"""

from itertools import product
from math import comb

import pytest

from gschur.combinat.partitions import enumerate_multicompositions
from gschur.core.errors import PreconditionError
from gschur.schur.algebra import TElement
from gschur.schur.idempotents import (
    compress,
    eta_idempotent,
    identity_permutations,
    include,
    tensor_power,
    truncation_idempotent,
    weyl_element,
)


def weights(T, d):
    return enumerate_multicompositions(T.n, d, len(T.A.poset))


# =============================================================================
# WEIGHT IDEMPOTENTS
# =============================================================================


@pytest.mark.parametrize("name", ["trivial_algebra", "super_ut"])
def test_weight_idempotents_sum_to_one(name, schur, request):
    """Σ_μ η_μ = 1."""
    T = schur(request.getfixturevalue(name), 2)
    total = TElement.zero(2)
    for mu in weights(T, 2):
        total = total + eta_idempotent(T, mu)
    assert total == T.one(2)


@pytest.mark.parametrize("name", ["trivial_algebra", "super_ut"])
def test_weight_idempotents_are_orthogonal(name, schur, request):
    """η_μ η_ν = δ_{μν} η_μ."""
    T = schur(request.getfixturevalue(name), 2)
    etas = {mu: eta_idempotent(T, mu) for mu in weights(T, 2)}
    for (mu, a), (nu, b) in product(etas.items(), repeat=2):
        expected = a if mu == nu else TElement.zero(2)
        assert T.multiply(a, b) == expected, (mu, nu)


def test_weight_shape_is_checked(trivial_algebra, schur):
    """A weight has one width-n composition per label."""
    T = schur(trivial_algebra, 2)
    with pytest.raises(PreconditionError, match="components"):
        eta_idempotent(T, ((1,), (1,)))
    with pytest.raises(PreconditionError, match="longer than n"):
        eta_idempotent(T, ((1, 0, 1),))


# =============================================================================
# WEYL ELEMENTS
# =============================================================================


@pytest.mark.parametrize("name", ["trivial_algebra", "super_ut"])
def test_identity_permutation_gives_one(name, schur, request):
    """ξ_d(id) = 1."""
    T = schur(request.getfixturevalue(name), 2)
    for d in (1, 2):
        assert weyl_element(T, identity_permutations(T), d) == T.one(d)


@pytest.mark.parametrize("name", ["trivial_algebra", "super_ut"])
def test_involution_squares_to_one(name, schur, request):
    """ξ_d(σ)² = 1 when every σ_i is an involution."""
    T = schur(request.getfixturevalue(name), 2)
    sigma = tuple((2, 1) for _ in T.A.poset.labels)
    w = weyl_element(T, sigma, 2)
    assert T.multiply(w, w) == T.one(2)


def test_weyl_element_permutes_weights(trivial_algebra, schur):
    """ξ(σ) η_μ ξ(σ⁻¹) = η_{σμ}."""
    T = schur(trivial_algebra, 2)
    w = weyl_element(T, ((2, 1),), 2)
    conjugated = T.multiply(T.multiply(w, eta_idempotent(T, ((2, 0),))), w)
    assert conjugated == eta_idempotent(T, ((0, 2),))


def test_weyl_element_rejects_non_permutations(trivial_algebra, schur):
    """Each σ_i must permute 1..n."""
    T = schur(trivial_algebra, 2)
    with pytest.raises(PreconditionError, match="not a permutation"):
        weyl_element(T, ((1, 1),), 1)
    with pytest.raises(PreconditionError, match="expected 1 permutations"):
        weyl_element(T, ((1, 2), (1, 2)), 1)


# =============================================================================
# TENSOR POWERS AND TRUNCATION
# =============================================================================


def test_tensor_power_preconditions(trivial_algebra, super_ut, schur):
    """Only even degree-one elements have tensor powers here."""
    T = schur(trivial_algebra, 2)
    with pytest.raises(PreconditionError, match="degree-one"):
        tensor_power(T, T.one(2), 1)
    with pytest.raises(PreconditionError, match="non-negative"):
        tensor_power(T, T.one(1), -1)
    S = schur(super_ut, 2)
    with pytest.raises(PreconditionError, match="even"):
        tensor_power(S, S.element(((2, 1, 1),)), 2)
    assert tensor_power(T, T.one(1), 0) == TElement(0, {(): 1})


def test_truncation_idempotent(trivial_algebra, schur):
    """η^3_2(2) is idempotent and is the image of 1 ∈ T(2,2)."""
    T2, T3 = schur(trivial_algebra, 2), schur(trivial_algebra, 3)
    e = truncation_idempotent(T3, 2, 2)
    assert T3.multiply(e, e) == e
    assert e == include(T2.one(2), 3)
    assert compress(T3.one(2), 2) == T2.one(2)
    assert truncation_idempotent(T3, 3, 2) == T3.one(2)


def test_inclusion_is_multiplicative(trivial_algebra, schur):
    """T(2,2) → η T(3,2) η is an algebra map."""
    T2, T3 = schur(trivial_algebra, 2), schur(trivial_algebra, 3)
    elements = [TElement(2, {t: 1}) for t in T2.basis(2)]
    for u, v in product(elements, repeat=2):
        assert T3.multiply(include(u, 3), include(v, 3)) == include(T2.multiply(u, v), 3)


def test_truncation_bounds(trivial_algebra, schur):
    """n ≤ N on both sides of the truncation."""
    T2 = schur(trivial_algebra, 2)
    with pytest.raises(PreconditionError, match="N ≥ n"):
        truncation_idempotent(T2, 3, 1)
    with pytest.raises(PreconditionError, match="N ≥ n"):
        include(T2.element(((0, 2, 1),)), 1)


@pytest.mark.parametrize(
    "n, d",
    [
        pytest.param(n, d, marks=[pytest.mark.slow] if d == 4 else [])
        for n in (1, 2)
        for d in range(1, 5)
    ],
)
def test_compression_from_width_four(n, d, trivial_algebra, schur):
    """η^4_n S(4,d) η^4_n has the basis of S(n,d) and compresses 1 to 1."""
    T4, Tn = schur(trivial_algebra, 4), schur(trivial_algebra, n)
    kept = [t for t in T4.basis(d) if all(r <= n and s <= n for _, r, s in t)]
    assert len(kept) == comb(n * n + d - 1, d) == Tn.dim(d)
    assert set(kept) == set(Tn.basis(d))
    assert compress(T4.one(d), n) == Tn.one(d)
    assert include(Tn.one(d), 4) == truncation_idempotent(T4, n, d)

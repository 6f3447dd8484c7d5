"""
Tests for standard, truncated and tensor modules - tests/test_modules.py
"""

import pytest

from gschur.combinat.partitions import (
    Poset,
    enumerate_multipartitions,
    enumerate_partitions,
    order_ltI,
)
from gschur.core.errors import DegreeMismatchError, PreconditionError
from gschur.linalg.sparse import SparseVector
from gschur.modules.base import TrivialModule, character, permute_weight, weyl_covariance
from gschur.modules.standard import (
    costandard_character,
    highest_weight_checks,
    stabilizer_sign,
    standard_dimension,
    standard_module,
    truncated_standard,
)
from gschur.modules.tensor import TensorModule, tensor
from gschur.schur.algebra import TElement
from gschur.schur.idempotents import identity_permutations
from gschur.symfunc.characters import standard_character

# =============================================================================
# STANDARD MODULES
# =============================================================================


def test_classical_standard_module(trivial_algebra, schur):
    """Δ(2,1) over S(3,3) is the 8-dimensional Schur module."""
    T = schur(trivial_algebra, 3)
    V = standard_module(((2, 1),), T)
    assert V.dim == 8 == standard_dimension(((2, 1),), 3, trivial_algebra)
    assert V.weight_character().schur_expansion() == {((2, 1),): 1}
    assert character(V) == V.weight_character()
    assert standard_module(((2, 1),), T) is V


def test_odd_arrow_standard_module(super_ut, schur):
    """Δ(∅, 1) over T(1,1) has basis v_e2, v_x and e1 fixes v_x."""
    T = schur(super_ut, 1)
    V = standard_module(((), (1,)), T)
    assert V.dim == 2
    assert V.parities == (0, 1)
    e1 = T.element(((0, 1, 1),))
    e2 = T.element(((1, 1, 1),))
    assert V.act_on_basis(e1, 1) == V.vector(1)
    assert V.act_on_basis(e1, 0).is_zero
    assert V.act_on_basis(e2, 0) == V.vector(0)
    assert V.parity_of(V.vector(1)) == 1
    assert V.parity_of(V.vector(0) + V.vector(1)) is None
    assert V.weight_character().schur_expansion() == {((), (1,)): 1, ((1,), ()): 1}


@pytest.mark.parametrize(
    "name, la, n",
    [
        ("trivial_algebra", ((1, 1),), 2),
        ("super_ut", ((), (1, 1)), 2),
        ("super_ut", ((1,), (1,)), 2),
        ("bc_algebra", ((), (1,)), 1),
    ],
)
def test_characters_agree(name, la, n, schur, request):
    """Basis weights, weight idempotents and tableau counts give one character."""
    A = request.getfixturevalue(name)
    V = standard_module(la, schur(A, n))
    assert V.weight_character() == V.idempotent_character()
    assert V.weight_character() == standard_character(la, A, n)
    assert highest_weight_checks(V).passed


CHARACTER_GRID = [
    pytest.param(name, n, la, marks=[pytest.mark.slow] if n == 3 else [])
    for name, poset in [("trivial_algebra", Poset.chain([1])), ("super_ut", Poset.chain([1, 2]))]
    for n in range(1, 4)
    for d in range(1, n + 1)
    for la in enumerate_multipartitions(n, d, poset)
]


@pytest.mark.parametrize("name, n, la", CHARACTER_GRID)
def test_character_grid(name, n, la, schur, request):
    """Every λ in Λ_+^I(n,d) with d ≤ n ≤ 3 has one character and a highest weight."""
    A = request.getfixturevalue(name)
    V = standard_module(la, schur(A, n))
    assert V.weight_character() == V.idempotent_character() == standard_character(la, A, n)
    assert V.dim == standard_dimension(la, n, A)
    assert highest_weight_checks(V).passed
    if name == "trivial_algebra":
        assert V.weight_character().schur_expansion() == {la: 1}


def test_permuted_top_weights_are_lower(super_ut, trivial_algebra, schur):
    """Permutations of λ count as lower weights."""
    assert order_ltI(((0, 1),), ((1,),), trivial_algebra.poset)
    assert order_ltI(((0, 1), (1, 0)), ((1,), (1,)), super_ut.poset)
    V = standard_module(((1,),), schur(trivial_algebra, 2))
    assert ((0, 1),) in V.weights
    W = standard_module(((1,), (1,)), schur(super_ut, 2))
    assert ((0, 1), (1, 0)) in W.weights
    for module in (V, W):
        report = highest_weight_checks(module)
        assert report.checks["lower_weights"]
        assert report.passed


def test_standard_module_preconditions(trivial_algebra, schur):
    """Shapes must fit the algebra."""
    T = schur(trivial_algebra, 2)
    with pytest.raises(PreconditionError, match="requires d ≤ n"):
        standard_module(((2, 1),), T)
    with pytest.raises(PreconditionError, match="components"):
        standard_module(((1,), ()), T)
    with pytest.raises(DegreeMismatchError):
        standard_module(((1,),), T).act_on_basis(T.one(2), 0)


def test_costandard_characters(trivial_algebra, super_ut):
    """∇(λ) counts Y-tableaux by right weight."""
    assert costandard_character(((2, 1),), 3, trivial_algebra).schur_expansion() == {
        ((2, 1),): 1
    }
    assert costandard_character(((), (1,)), 1, super_ut).schur_expansion() == {((), (1,)): 1}
    with pytest.raises(PreconditionError):
        costandard_character(((2,),), 1, trivial_algebra)


# =============================================================================
# WEYL GROUP
# =============================================================================


def test_permute_weight():
    """(σμ)_{σ(r)} = μ_r."""
    assert permute_weight(((2, 1, 0),), ((2, 3, 1),)) == ((0, 2, 1),)


def test_weyl_covariance(trivial_algebra, super_ut, schur):
    """ξ(σ) maps weight spaces to permuted weight spaces."""
    V = standard_module(((2, 1),), schur(trivial_algebra, 3))
    assert weyl_covariance(V, ((2, 3, 1),))
    W = standard_module(((1,), (1,)), schur(super_ut, 2))
    assert weyl_covariance(W, ((2, 1), (1, 2)))


def test_stabilizer_sign(trivial_algebra, schur):
    """Stabilizers of λ act on v_λ by a sign."""
    T = schur(trivial_algebra, 2)
    V = standard_module(((1, 1),), T)
    assert stabilizer_sign(V, identity_permutations(T)) == 1
    assert stabilizer_sign(V, ((2, 1),)) in (1, -1)


# =============================================================================
# TRUNCATION
# =============================================================================


def test_truncated_standard(trivial_algebra):
    """η^3_2 Δ_3(2,1) is Δ_2(2,1)."""
    V = truncated_standard(((2, 1),), 2, 3, trivial_algebra)
    assert V.dim == 2
    assert V.weight_character().schur_expansion() == {((2, 1),): 1}
    assert V.idempotent_character() == V.weight_character()


def test_truncation_is_independent_of_width(super_ut):
    """Δ_n(λ) does not depend on the width it was cut from."""
    small = truncated_standard(((), (1,)), 1, 1, super_ut)
    big = truncated_standard(((), (1,)), 1, 2, super_ut)
    assert small.weight_character() == big.weight_character()
    assert big.weight_character() == standard_character(((), (1,)), super_ut, 1)


WIDTH_GRID = [(n, la) for n in (1, 2) for d in range(1, 4) for la in enumerate_partitions(d, d)]


@pytest.mark.slow
@pytest.mark.parametrize("n, la", WIDTH_GRID)
def test_truncation_width_grid(n, la, trivial_algebra, schur):
    """Δ_n(λ) cut from widths 4, d and d + 1 has the width-n dimension and one character."""
    A = trivial_algebra
    shape = (la,)
    d = sum(la)
    cut = truncated_standard(shape, n, 4, A, big=schur(A, 4), small=schur(A, n))
    assert cut.dim == standard_dimension(shape, n, A)
    if len(la) <= n:
        assert cut.weight_character().schur_expansion() == {shape: 1}
    else:
        assert cut.dim == 0
    low = max(n, d)
    for N in (low, low + 1):
        other = truncated_standard(shape, n, N, A, big=schur(A, N), small=schur(A, n))
        assert other.dim == cut.dim
        assert other.weight_character() == cut.weight_character()


def test_truncation_preconditions(trivial_algebra):
    """N bounds both d and n."""
    with pytest.raises(PreconditionError, match="N ≥ d"):
        truncated_standard(((2, 1),), 2, 2, trivial_algebra)
    with pytest.raises(PreconditionError, match="N ≥ n"):
        truncated_standard(((1,),), 3, 2, trivial_algebra)


# =============================================================================
# TENSOR PRODUCTS
# =============================================================================


def test_tensor_character_is_product(trivial_algebra, schur):
    """ch(Δ(1) ⊗ Δ(1)) = s_1² = s_2 + s_11."""
    T = schur(trivial_algebra, 2)
    V = standard_module(((1,),), T)
    M = tensor(V, V)
    assert M.dim == 4
    assert M.index(1, 0) == 2
    assert M.idempotent_character().schur_expansion() == {((2,),): 1, ((1, 1),): 1}


def test_tensor_with_trivial_module(super_ut, schur):
    """V ⊗ 1 ≅ V."""
    T = schur(super_ut, 2)
    V = standard_module(((), (1,)), T)
    M = TensorModule(V, TrivialModule(T))
    assert M.dim == V.dim
    assert M.parities == V.parities
    for u in (T.one(1), T.element(((0, 1, 2),)), T.element(((2, 2, 1),))):
        for k in range(V.dim):
            assert M.act_on_basis(u, k) == V.act_on_basis(u, k)


def test_trivial_module(trivial_algebra, schur):
    """η_∅ acts as 1 on the trivial module."""
    T = schur(trivial_algebra, 2)
    one = TrivialModule(T)
    assert one.act_on_basis(TElement(0, {(): 3}), 0) == SparseVector({0: 3}, 1)
    assert one.weight_character().dimension() == 1


def test_tensor_factors_share_algebra(trivial_algebra, schur):
    """Factors must be modules over the same T(n)."""
    V = standard_module(((1,),), schur(trivial_algebra, 2))
    W = standard_module(((1,),), schur(trivial_algebra, 3))
    with pytest.raises(PreconditionError):
        TensorModule(V, W)

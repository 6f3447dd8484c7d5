"""
Tests for the character pipeline - tests/test_characters.py
"""

import pytest

from gschur.combinat.partitions import enumerate_multipartitions, multi_trim
from gschur.combinat.tableaux import enumerate_std_tableaux, tableau_weight
from gschur.core.errors import PreconditionError
from gschur.symfunc.characters import (
    bold_product_prediction,
    character_pipeline,
    product_character_prediction,
    standard_character,
    superconjugate_tr,
)
from gschur.symfunc.polynomials import MultiSymPolynomial


def tableau_character(la, A, n):
    counts = {}
    for S in enumerate_std_tableaux(la, "X", A, n):
        w = tableau_weight(S, A)
        if all(list(part) == sorted(part, reverse=True) for part in w):
            key = multi_trim(w)
            counts[key] = counts.get(key, 0) + 1
    return MultiSymPolynomial.from_monomials(A.poset.labels, n, counts)


# =============================================================================
# PIPELINE STAGES
# =============================================================================


def test_superconjugate_tr_flips_odd_slots():
    """Only odd colors are conjugated."""
    p = MultiSymPolynomial(["e2", "x"], {((2,), (2,)): 1})
    image = superconjugate_tr(p, {"e2": 0, "x": 1})
    assert image.schur_expansion() == {((2,), (1, 1)): 1}


def test_trivial_algebra_gives_schur_polynomials(trivial_algebra):
    """ch Δ(λ) = s_λ for the classical Schur algebra."""
    for la in [(2,), (1, 1), (2, 1)]:
        ch = character_pipeline(la, 1, trivial_algebra, 3)
        assert ch.schur_expansion() == {(la,): 1}


def test_odd_arrow_character(super_ut):
    """ch Δ(ι_2(1,1)) spreads over e2 and the odd arrow x."""
    ch = character_pipeline((1, 1), 2, super_ut, 2)
    assert ch.schur_expansion() == {
        ((), (1, 1)): 1,
        ((1,), (1,)): 1,
        ((2,), ()): 1,
    }
    assert ch.dimension() == 8


def test_pipeline_precondition(super_ut):
    """|λ| must fit in n."""
    with pytest.raises(PreconditionError):
        character_pipeline((1, 1), 2, super_ut, 1)


# =============================================================================
# AGREEMENT WITH TABLEAUX
# =============================================================================


@pytest.mark.parametrize("name", ["trivial_algebra", "super_ut", "bc_algebra"])
def test_pipeline_matches_tableau_weights(name, request):
    """The pipeline prediction equals the tableau-weight character."""
    A = request.getfixturevalue(name)
    for n in (1, 2, 3):
        for d in range(1, min(n, 2) + 1):
            for la in enumerate_multipartitions(n, d, A.poset):
                assert standard_character(la, A, n) == tableau_character(la, A, n), (la, n)


def test_product_predictions(trivial_algebra):
    """Predicted multiplicities are LR coefficients."""
    expected = {(2,): 1, (1, 1): 1}
    assert product_character_prediction((1,), (1,), 1, trivial_algebra, 2) == expected
    assert bold_product_prediction(((1,), ()), ((), (1,)), 2) == {((1,), (1,)): 1}
    with pytest.raises(PreconditionError):
        bold_product_prediction(((1,), ()), ((), (1,)), 1)

"""
Tests for heredity data and axiom verification - tests/test_superalg.py
"""

import json

import pytest

from gschur.combinat.partitions import Poset
from gschur.core.errors import AlgebraFileError, HeredityDataError
from gschur.linalg.sparse import SparseVector
from gschur.schemas.algebra import (
    AlgebraFile,
    dump_algebra,
    load_algebra,
    parse_algebra,
    to_heredity_data,
)
from gschur.superalg.axioms import is_conforming, verify_axioms
from gschur.superalg.data import ColorSpec, HeredityData, multiply_A
from gschur.superalg.standard import right_standard_module_A, standard_module_A

# =============================================================================
# HEREDITY DATA
# =============================================================================


def test_basis_order_and_parities(super_ut):
    """B is ordered by label, then X-rank, then Y-rank."""
    assert [b.name for b in super_ut.basis] == ["e1*e1", "e2*e2", "x*e2"]
    assert [b.parity for b in super_ut.basis] == [0, 0, 1]
    assert super_ut.bc_indices == ()
    assert super_ut.ba_indices == (0, 1)


def test_bc_algebra_has_odd_odd_element(bc_algebra):
    """x*y has both colors odd, so it lies in B_c."""
    names = [b.name for b in bc_algebra.basis]
    assert names == ["e1*e1", "e2*e2", "e2*y", "x*e2", "x*y"]
    assert [names[k] for k in bc_algebra.bc_indices] == ["x*y"]


def test_idempotents_from_table(super_ut):
    """x = e1·x·e2."""
    x = super_ut.x_color("x")
    assert super_ut.left_idempotent(x) == 1
    assert super_ut.right_idempotent(x) == 2


def test_multiply_A(super_ut):
    """e1·x = x = x·e2, and x·e1 = 0."""
    x = SparseVector.unit(2, 3)
    assert multiply_A(super_ut, super_ut.e(1), x) == x
    assert multiply_A(super_ut, x, super_ut.e(2)) == x
    assert multiply_A(super_ut, x, super_ut.e(1)).is_zero
    assert multiply_A(super_ut, super_ut.e(2), x).is_zero


def test_unit_is_sum_of_idempotents(super_ut, bc_algebra):
    """1 = e1 + e2."""
    assert super_ut.unit() == SparseVector({0: 1, 1: 1}, 3)
    assert bc_algebra.unit() == SparseVector({0: 1, 1: 1}, 5)


def test_missing_product_is_rejected():
    """The multiplication table must be total."""
    with pytest.raises(HeredityDataError, match="not total"):
        HeredityData(
            "partial",
            Poset.chain([1]),
            {1: [ColorSpec("e1", 0)]},
            {1: [ColorSpec("e1", 0)]},
            {},
        )


def test_initial_element_must_come_first():
    """X(i) starts with e_i."""
    with pytest.raises(HeredityDataError):
        HeredityData(
            "bad",
            Poset.chain([1]),
            {1: [ColorSpec("f", 0)]},
            {1: [ColorSpec("e1", 0)]},
            {},
        )


# =============================================================================
# AXIOMS
# =============================================================================


@pytest.mark.parametrize("name", ["trivial_algebra", "super_ut", "bc_algebra", "antichain_pair"])
def test_fixtures_pass_axioms(name, request):
    """Every shipped algebra is conforming heredity data."""
    A = request.getfixturevalue(name)
    report = verify_axioms(A)
    assert report.passed, report.failures
    assert is_conforming(A)
    assert A.verified


def test_reversed_order_fails(reversed_super_ut):
    """With 2 < 1 the arrow x = e1·x violates the idempotent orthogonality."""
    report = verify_axioms(reversed_super_ut)
    assert not report.passed
    assert "idempotents" in report.failed_axioms()
    assert not reversed_super_ut.verified


def test_corrupted_table_fails_axiom_c(fixtures_dir):
    """Dropping e2·e2 = e2 breaks the idempotent identities."""
    raw = json.loads((fixtures_dir / "superUT.json").read_text(encoding="utf-8"))
    for product in raw["products"]:
        if product["left"] == ["e2", "e2"] and product["right"] == ["e2", "e2"]:
            product["result"] = []
    A = to_heredity_data(AlgebraFile.model_validate(raw))
    report = verify_axioms(A)
    assert not report.passed
    assert "c" in report.failed_axioms()


# =============================================================================
# STANDARD MODULES OF A
# =============================================================================


def test_standard_module_of_top_label(super_ut):
    """Δ(2) has basis v_e2, v_x and e1 moves v_x to itself."""
    module = standard_module_A(super_ut, 2)
    assert module.dim == 2
    assert module.parities == (0, 1)
    assert module.act_on_basis(super_ut.e(1), 0).is_zero
    assert module.act_on_basis(super_ut.e(1), 1) == SparseVector.unit(1, 2)
    assert standard_module_A(super_ut, 1).dim == 1


def test_right_standard_module(bc_algebra):
    """Δ^op(2) has basis w_e2, w_y with w_y·e1 = w_y."""
    module = right_standard_module_A(bc_algebra, 2)
    assert module.dim == 2
    assert module.act_on_basis(bc_algebra.e(1), 1) == SparseVector.unit(1, 2)
    assert module.act_on_basis(bc_algebra.e(1), 0).is_zero


# =============================================================================
# ALGEBRA FILES
# =============================================================================


@pytest.mark.parametrize("name", ["trivial.json", "superUT.json", "oddpair.json"])
def test_fixture_round_trip(name, fixtures_dir):
    """Shipped fixtures re-serialize byte for byte."""
    text = (fixtures_dir / name).read_text(encoding="utf-8")
    assert dump_algebra(parse_algebra(text)) == text
    assert dump_algebra(load_algebra(fixtures_dir / name)) == text


def test_invalid_json_has_line_number():
    """JSON syntax errors carry their location."""
    with pytest.raises(AlgebraFileError) as info:
        parse_algebra('{\n  "name": \n}')
    assert info.value.location == "line 3"


def test_schema_errors_name_the_location(fixtures_dir):
    """Schema errors point at the offending component."""
    raw = json.loads((fixtures_dir / "superUT.json").read_text(encoding="utf-8"))
    raw["components"][1]["X"][0]["name"] = "x0"
    with pytest.raises(AlgebraFileError) as info:
        parse_algebra(json.dumps(raw))
    assert info.value.location == "components[1]"


def test_unknown_product_name(fixtures_dir):
    """Products may only mention basis elements that exist."""
    raw = json.loads((fixtures_dir / "trivial.json").read_text(encoding="utf-8"))
    raw["products"][0]["result"] = [[1, ["e1", "z"]]]
    with pytest.raises(AlgebraFileError, match=r"products\[0\]\.result\[0\]"):
        parse_algebra(json.dumps(raw))


def test_missing_file():
    """Unreadable files raise AlgebraFileError."""
    with pytest.raises(AlgebraFileError, match="cannot read"):
        load_algebra("/nonexistent/algebra.json")

"""
Test configuration and shared fixtures.

This module provides the heredity data and Schur algebras shared by the
gen-schur test suite.
"""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Dict, Tuple

import pytest

from gschur.combinat.partitions import Poset
from gschur.schemas.algebra import load_algebra, parse_algebra, to_heredity_data
from gschur.schur.algebra import SchurAlgebra
from gschur.superalg.data import ColorSpec, HeredityData

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# =============================================================================
# FIXTURES: Heredity data
# =============================================================================


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    """Directory of the shipped algebra files."""
    return FIXTURES


@pytest.fixture(scope="session")
def trivial_algebra() -> HeredityData:
    """A = k with I = {1}; T^A(n,d) is the classical Schur algebra."""
    return load_algebra(FIXTURES / "trivial.json")


@pytest.fixture(scope="session")
def super_ut() -> HeredityData:
    """Upper-triangular superalgebra on 1 < 2 with one odd arrow x."""
    return load_algebra(FIXTURES / "superUT.json")


@pytest.fixture(scope="session")
def reversed_super_ut() -> HeredityData:
    """superUT with the poset order reversed; fails the heredity axioms."""
    model = parse_algebra((FIXTURES / "superUT.json").read_text(encoding="utf-8"))
    flipped = model.model_copy(update={"name": "superUT-reversed", "poset": [(2, 1)]})
    return to_heredity_data(flipped)


@pytest.fixture(scope="session")
def bc_algebra() -> HeredityData:
    """Two odd arrows x, y with x·y ≠ 0, so B_c = {x*y} is non-empty."""
    return load_algebra(FIXTURES / "oddpair.json")


@pytest.fixture(scope="session")
def antichain_pair() -> HeredityData:
    """k × k on the antichain {1, 2}."""
    e = {label: (f"e{label}", f"e{label}") for label in (1, 2)}
    products = {
        (e[a], e[b]): ({e[a]: 1} if a == b else {}) for a in (1, 2) for b in (1, 2)
    }
    return HeredityData(
        "antichain",
        Poset.antichain([1, 2]),
        {label: [ColorSpec(f"e{label}", 0)] for label in (1, 2)},
        {label: [ColorSpec(f"e{label}", 0)] for label in (1, 2)},
        products,
    )


# =============================================================================
# FIXTURES: Schur algebras
# =============================================================================


@pytest.fixture(scope="session")
def schur() -> Callable[[HeredityData, int], SchurAlgebra]:
    """Factory returning one cached SchurAlgebra per (algebra, n)."""
    cache: Dict[Tuple[int, int], SchurAlgebra] = {}

    def build(A: HeredityData, n: int) -> SchurAlgebra:
        key = (id(A), n)
        if key not in cache:
            cache[key] = SchurAlgebra(A, n)
        return cache[key]

    return build

"""
Tests for P-sets - tests/test_psets.py
"""

import pytest

from gschur.combinat.psets import (
    all_psets,
    epsilon,
    omega_lambda,
    orbit_decomposition,
    plus_epsilon,
)
from gschur.core.errors import PreconditionError


def test_epsilon():
    """ε_P marks the positions of P."""
    assert epsilon((1, 3), 4) == (1, 0, 1, 0)
    assert plus_epsilon((2,), (1, 2), 3) == (3, 1, 0)


def test_all_psets_is_lexicographic():
    """Subsets are listed lexicographically."""
    assert all_psets(2, 3) == [(1, 2), (1, 3), (2, 3)]


def test_omega_lambda():
    """Ω_λ keeps the P with λ + ε_P a partition, {1..c} first."""
    assert omega_lambda((1,), 1, 2) == [(1,), (2,)]
    assert omega_lambda((2,), 1, 3) == [(1,), (2,)]
    assert omega_lambda((), 2, 3) == [(1, 2)]
    assert omega_lambda((2, 1), 1, 4) == [(1,), (2,), (3,)]


def test_orbit_decomposition():
    """Orbits of Σ_λ are keyed by their minimal element."""
    orbits = orbit_decomposition((1,), 1, 3)
    assert orbits == {(1,): [(1,)], (2,): [(2,), (3,)]}
    assert set(omega_lambda((1,), 1, 3)) == set(orbits)


def test_degree_bound():
    """|λ| + c must fit in n."""
    with pytest.raises(PreconditionError):
        omega_lambda((1,), 1, 1)

# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.cyclotomy.tables` module."""
import pytest

from cyclotomic_sequences.cyclotomy import (
    build_system,
    cyclotomic_numbers,
    order4_formula_table,
    order4_formula_values,
    order8_formula_table,
)
from cyclotomic_sequences.exceptions import AdmissibilityError, ExactnessError


def test_order4_formula_values():
    """Test the `order4_formula_values` function for both signs of ``b``."""
    assert order4_formula_values(13, -3, -1).entries == (
        (0, 1, 2, 0),
        (1, 1, 0, 1),
        (0, 1, 0, 1),
        (1, 0, 1, 1),
    )
    assert order4_formula_values(13, -3, 1).entries != order4_formula_values(13, -3, -1).entries


def test_order4_formula_values_inexact():
    """Test the `order4_formula_values` function raises for a pair that is no partition."""
    with pytest.raises(ExactnessError):
        order4_formula_values(13, 1, 1)


def test_order4_formula_table():
    """Test the `order4_formula_table` function resolves the sign of ``b`` for the primitive root."""
    resolved = order4_formula_table(13, generator=2)

    assert resolved.signs == {'a': -3, 'b': -1}
    assert resolved.table.entries == cyclotomic_numbers(build_system(13, 4, 2)).entries


@pytest.mark.parametrize('p', (5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101))
def test_order4_formula_table_all_generators(p):
    """Test that the closed forms reproduce brute force for every primitive root."""
    from cyclotomic_sequences.cyclotomy import primitive_roots

    for generator in primitive_roots(p):
        resolved = order4_formula_table(p, generator=generator)
        assert resolved.table.entries == cyclotomic_numbers(build_system(p, 4, generator)).entries


def test_order4_formula_table_inadmissible():
    """Test the `order4_formula_table` function for a prime that is not 1 modulo 4."""
    with pytest.raises(AdmissibilityError):
        order4_formula_table(7)


def test_order8_formula_table():
    """Test the `order8_formula_table` function for 17."""
    resolved = order8_formula_table(17, generator=3)

    assert resolved.signs == {'x': 1, 'y': 2, 'a': -3, 'b': 2}
    assert resolved.table.entries == cyclotomic_numbers(build_system(17, 8, 3)).entries
    assert resolved.table[0, 6] == 1
    assert resolved.table[0, 2] == 0


def test_order8_formula_table_inadmissible():
    """Test the `order8_formula_table` function for a prime that is not 1 modulo 16."""
    with pytest.raises(AdmissibilityError):
        order8_formula_table(41)

# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.lincomp.minimal` module."""
import pytest

from cyclotomic_sequences.constructions import build_order8, build_tang_lindner
from cyclotomic_sequences.lincomp import format_poly, minimal_polynomial


@pytest.mark.parametrize(('text', 'minpoly', 'complexity'), (
    ('00', '1', 0),
    ('11', '1+x', 1),
    ('10', '1+x^2', 2),
    ('110', '1+x+x^2', 2),
    ('1110100', '1+x+x^3', 3),
    ('1010001101', '1+x^10', 10),
    ('0123', '1+x+x^2+x^3', 3),
    ('3333', '1+x', 1),
))
def test_minimal_polynomial(generate_sequence, text, minpoly, complexity):
    """Test the `minimal_polynomial` function."""
    result = minimal_polynomial(generate_sequence(text))

    assert format_poly(result.minpoly) == minpoly
    assert result.linear_complexity == complexity == result.minpoly.degree


def test_complexity_result_as_dict(generate_sequence):
    """Test the `ComplexityResult.as_dict` method."""
    assert minimal_polynomial(generate_sequence('0123')).as_dict() == {
        'linear_complexity': 3,
        'minpoly': '1+x+x^2+x^3',
        'field': 'GF(4)',
        'method': 'gcd',
    }


def test_minimal_polynomial_constructions():
    """Test the linear complexity of the prime period constructions."""
    assert minimal_polynomial(build_tang_lindner(13, (1, 2, 3), 2)).linear_complexity == 12
    assert minimal_polynomial(build_order8(17, 3)).linear_complexity == 8


def test_minimal_polynomial_shift_invariant(generate_random_quaternary):
    """Test that the minimal polynomial does not depend on the starting point of the period."""
    from cyclotomic_sequences.seqcore import shift

    sequence = generate_random_quaternary(30, seed=9)

    assert minimal_polynomial(shift(sequence, 7)).minpoly == minimal_polynomial(sequence).minpoly

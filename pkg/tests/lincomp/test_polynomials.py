# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.lincomp.polynomials` module."""
import galois
import pytest

from cyclotomic_sequences.exceptions import ParameterError, UnsupportedAlphabetError
from cyclotomic_sequences.lincomp import (
    GF2,
    GF4,
    field_for,
    field_name,
    format_poly,
    gray_pair_polynomial,
    is_zero,
    lift,
    parse_poly,
    seq_polynomial,
    x_n_minus_one,
)
from cyclotomic_sequences.seqcore import gray_combine


def test_field_for():
    """Test the `field_for` and `field_name` functions."""
    assert field_for(2) is GF2
    assert field_for(4) is GF4
    assert field_name(GF4) == 'GF(4)'

    with pytest.raises(UnsupportedAlphabetError):
        field_for(3)


@pytest.mark.parametrize(('text', 'expected'), (
    ('1010001101', '1+x^2+x^6+x^7+x^9'),
    ('0123', 'x+Mx^2+mx^3'),
    ('2031002312', 'M+mx^2+x^3+Mx^6+mx^7+x^8+Mx^9'),
    ('00', '0'),
))
def test_seq_polynomial(generate_sequence, text, expected):
    """Test the `seq_polynomial` and `format_poly` functions."""
    assert format_poly(seq_polynomial(generate_sequence(text))) == expected


def test_gray_pair_polynomial(generate_random_binary):
    """Test that the Gray pair polynomial is the polynomial of the Gray combination."""
    first = generate_random_binary(21, seed=1)
    second = generate_random_binary(21, seed=2)

    assert gray_pair_polynomial(first, second) == seq_polynomial(gray_combine(first, second))

    with pytest.raises(ParameterError):
        gray_pair_polynomial(first, generate_random_binary(20))


def test_x_n_minus_one():
    """Test the `x_n_minus_one` function."""
    assert format_poly(x_n_minus_one(4, GF2)) == '1+x^4'
    assert x_n_minus_one(3, GF4).field is GF4


def test_lift():
    """Test the `lift` function."""
    lifted = lift(galois.Poly([1, 0, 1], field=GF2))

    assert lifted.field is GF4
    assert lifted == galois.Poly([1, 0, 1], field=GF4)


@pytest.mark.parametrize(('text', 'field'), (
    ('1+x^2', GF2),
    ('x+Mx^2+mx^3', GF4),
    ('1+x+x^3', GF2),
    ('0', GF2),
))
def test_parse_poly(text, field):
    """Test that `parse_poly` inverts `format_poly`."""
    poly = parse_poly(text)

    assert poly.field is field
    assert format_poly(poly) == text


def test_parse_poly_field():
    """Test the `parse_poly` function with an explicit field and with spaces."""
    assert parse_poly('1 + x', GF4) == galois.Poly([1, 1], field=GF4)
    assert is_zero(parse_poly('0'))
    assert not is_zero(parse_poly('x'))


@pytest.mark.parametrize(('text', 'field', 'message'), (
    ('1+y', None, r'cannot parse the term `y`'),
    ('', None, r'cannot parse the term'),
    ('1++x', None, r'cannot parse the term'),
    ('1+mx', GF2, r'the coefficient `m` does not belong to GF\(2\)'),
))
def test_parse_poly_invalid(text, field, message):
    """Test the `parse_poly` function for text it cannot parse."""
    with pytest.raises(ParameterError, match=message):
        parse_poly(text, field)

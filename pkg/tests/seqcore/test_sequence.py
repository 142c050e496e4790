# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.seqcore.sequence` module."""
import pytest

from cyclotomic_sequences.exceptions import ParameterError, UnsupportedAlphabetError
from cyclotomic_sequences.seqcore import PeriodicSeq, complement, shift


@pytest.mark.parametrize(('text', 'modulus', 'expected'), (
    ('0101', None, 2),
    ('0123', None, 4),
    ('0101', 4, 4),
    (' 110\n', None, 2),
))
def test_from_string(text, modulus, expected):
    """Test the `PeriodicSeq.from_string` constructor infers or takes the alphabet."""
    sequence = PeriodicSeq.from_string(text, modulus)

    assert sequence.modulus == expected
    assert sequence.to_string() == text.strip()
    assert str(sequence) == text.strip()


@pytest.mark.parametrize(('text', 'modulus', 'exception', 'message'), (
    ('012a', None, ParameterError, r'invalid characters'),
    ('', None, ParameterError, r'at least one symbol'),
    ('0123', 2, ParameterError, r'do not belong to Z_2'),
    ('0101', 3, UnsupportedAlphabetError, r'the alphabet size should be one of'),
))
def test_from_string_invalid(text, modulus, exception, message):
    """Test the `PeriodicSeq.from_string` constructor for invalid input."""
    with pytest.raises(exception, match=message):
        PeriodicSeq.from_string(text, modulus)


def test_periodic_indexing(generate_sequence):
    """Test that indexing reads the sequence cyclically."""
    sequence = generate_sequence('1030233110212')

    assert sequence.period == len(sequence) == 13
    assert sequence[13] == sequence[0] == 1
    assert sequence[-1] == 2
    assert sequence.array.tolist()[:4] == [1, 0, 3, 0]


def test_characteristic():
    """Test the `PeriodicSeq.characteristic` constructor."""
    sequence = PeriodicSeq.characteristic({0, 2, 6, 7, 19}, 10)

    assert sequence.to_string() == '1010001101'
    assert sequence.support() == frozenset({0, 2, 6, 7, 9})

    with pytest.raises(ParameterError):
        PeriodicSeq.characteristic({0}, 0)


def test_level_set(generate_sequence):
    """Test the `PeriodicSeq.level_set` method."""
    sequence = generate_sequence('1030233110212')

    assert sequence.level_set(0) == frozenset({1, 3, 9})
    assert sequence.level_set(2) == frozenset({4, 10, 12})

    with pytest.raises(UnsupportedAlphabetError):
        sequence.support()


def test_shift(generate_sequence):
    """Test the `shift` function."""
    sequence = generate_sequence('1010001101')

    assert shift(sequence, 1).to_string() == '0100011011'
    assert shift(sequence, -1).to_string() == '1101000110'
    assert shift(sequence, 10) == sequence


def test_complement(generate_sequence):
    """Test the `complement` function."""
    assert complement(generate_sequence('1010001101')).to_string() == '0101110010'

    with pytest.raises(UnsupportedAlphabetError):
        complement(generate_sequence('0123'))

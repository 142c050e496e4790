# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.constructions.tang_lindner` module."""
import pytest

from cyclotomic_sequences.constructions import (
    build_tang_lindner,
    expected_tang_lindner_counts,
    expected_tang_lindner_profile,
    is_covered_triple,
)
from cyclotomic_sequences.exceptions import AdmissibilityError, ParameterError, ValidationError
from cyclotomic_sequences.seqcore import autocorrelation_profile, balance_counts


def test_build_tang_lindner():
    """Test the `build_tang_lindner` function for 13 and the primitive root 2."""
    sequence = build_tang_lindner(13, (1, 2, 3), 2)

    assert sequence.to_string() == '1030233110212'
    assert balance_counts(sequence).counts == (3, 4, 3, 3) == expected_tang_lindner_counts(13)


def test_tang_lindner_profile_odd():
    """Test the autocorrelation distribution when ``(p - 1) / 4`` is odd."""
    profile = autocorrelation_profile(build_tang_lindner(13, (1, 2, 3), 2))

    assert profile == {13: 1, -1: 6, complex(-1, 2): 3, complex(-1, -2): 3}
    assert profile == expected_tang_lindner_profile(13)
    assert profile.rmax_sq == 5


@pytest.mark.parametrize(('p', 'indices'), ((17, (1, 2, 3)), (17, (1, 3, 0)), (29, (1, 2, 3)), (41, (1, 3, 0))))
def test_tang_lindner_profile(p, indices):
    """Test the autocorrelation distribution and balance for the covered triples."""
    sequence = build_tang_lindner(p, indices)

    assert autocorrelation_profile(sequence) == expected_tang_lindner_profile(p)
    assert balance_counts(sequence).counts == expected_tang_lindner_counts(p)


def test_is_covered_triple():
    """Test the `is_covered_triple` function."""
    assert is_covered_triple(13, (1, 2, 3))
    assert not is_covered_triple(13, (1, 3, 0))
    assert is_covered_triple(17, (1, 3, 0))
    assert not is_covered_triple(17, (0, 1, 2))


def test_build_tang_lindner_uncovered(aiida_caplog):
    """Test that an uncovered triple is built and logged as unverified."""
    sequence = build_tang_lindner(13, (0, 1, 2), 2)

    assert sequence.period == 13
    assert 'unverified distribution' in aiida_caplog.text


@pytest.mark.parametrize(('p', 'indices', 'exception'), (
    (7, (1, 2, 3), AdmissibilityError),
    (15, (1, 2, 3), ValidationError),
    (13, (1, 1, 3), ParameterError),
    (13, (1, 2), ParameterError),
))
def test_build_tang_lindner_invalid(p, indices, exception):
    """Test the `build_tang_lindner` function for invalid input."""
    with pytest.raises(exception):
        build_tang_lindner(p, indices)

# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.seqcore.correlation` module."""
import pytest

from cyclotomic_sequences.exceptions import ParameterError, UnsupportedAlphabetError
from cyclotomic_sequences.seqcore import (
    autocorrelation_profile,
    correlation,
    correlation_values,
    gaussian,
    gray_combine,
    gray_correlation,
    gray_correlation_values,
    has_optimal_autocorrelation,
    has_optimal_magnitude,
    norm,
    optimal_binary_values,
    rmax_sq,
)


def test_gaussian_norm():
    """Test the `gaussian` and `norm` functions."""
    value = gaussian(-1, 2)

    assert (value.x, value.y) == (-1, 2)
    assert norm(value) == 5
    assert gaussian(3) == gaussian(3, 0)


def test_correlation_quaternary(generate_sequence):
    """Test the `correlation` function for a quaternary sequence."""
    sequence = generate_sequence('0123')

    assert correlation(sequence, sequence, 0) == gaussian(4)
    assert correlation(sequence, sequence, 1) == gaussian(0, -4)
    assert correlation(sequence, sequence, 2) == gaussian(-4)
    assert correlation(sequence, sequence, 3) == gaussian(0, 4)
    assert correlation(sequence, sequence, 5) == correlation(sequence, sequence, 1)


def test_correlation_values(generate_sequence):
    """Test the `correlation_values` function agrees with `correlation` for every shift."""
    sequence = generate_sequence('1030233110212')
    values = correlation_values(sequence)

    assert values[0] == gaussian(13)
    assert values[1] == gaussian(-1, 2)
    assert values == [correlation(sequence, sequence, tau) for tau in range(13)]


def test_correlation_values_blocks(generate_random_quaternary):
    """Test the `correlation_values` function for a period spanning several blocks of shifts."""
    sequence = generate_random_quaternary(601, seed=7)
    values = correlation_values(sequence)

    for tau in (0, 1, 255, 256, 257, 600):
        assert values[tau] == correlation(sequence, sequence, tau)


@pytest.mark.parametrize('period', (7, 10, 16, 31))
@pytest.mark.parametrize('seed', range(3))
def test_correlation_values_conjugate_symmetry(generate_random_binary, generate_random_quaternary, period, seed):
    """Test that the autocorrelation at shift ``N - tau`` is the conjugate of the one at ``tau``."""
    for sequence in (generate_random_binary(period, seed=seed), generate_random_quaternary(period, seed=seed)):
        values = correlation_values(sequence)

        for tau in range(period):
            mirrored = values[(period - tau) % period]
            assert (mirrored.x, mirrored.y) == (values[tau].x, -values[tau].y)


def test_cross_correlation(generate_sequence):
    """Test the `correlation_values` function for two different sequences."""
    first = generate_sequence('0011')
    second = generate_sequence('0101')

    assert correlation_values(first, second) == [gaussian(0), gaussian(0), gaussian(0), gaussian(0)]
    other = generate_sequence('0010')
    assert correlation_values(first, other) == [gaussian(2), gaussian(-2), gaussian(-2), gaussian(2)]


def test_correlation_incompatible(generate_sequence):
    """Test that sequences of different period or alphabet cannot be correlated."""
    with pytest.raises(ParameterError, match=r'the periods 4 and 3 differ'):
        correlation(generate_sequence('0011'), generate_sequence('001'), 0)

    with pytest.raises(ParameterError, match=r'the alphabets Z_2 and Z_4 differ'):
        correlation_values(generate_sequence('0011'), generate_sequence('0123'))


def test_autocorrelation_profile_binary(generate_sequence):
    """Test the `autocorrelation_profile` function for an optimal binary sequence of period ten."""
    profile = autocorrelation_profile(generate_sequence('1010001101'))

    assert profile == {10: 1, 2: 2, -2: 7}
    assert profile.period == 10
    assert profile.is_real
    assert profile.rmax_sq == 4
    assert profile.out_of_phase() == {(2, 0): 2, (-2, 0): 7}
    assert profile.total == gaussian(0)


def test_autocorrelation_profile_quaternary(generate_sequence):
    """Test the `autocorrelation_profile` function for a quaternary sequence."""
    profile = autocorrelation_profile(generate_sequence('0123'))

    assert profile == {4: 1, -4j: 1, -4: 1, 4j: 1}
    assert not profile.is_real
    assert profile.rmax_sq == 16
    assert profile.as_records() == [
        {'re': -4, 'im': 0, 'count': 1},
        {'re': 0, 'im': -4, 'count': 1},
        {'re': 0, 'im': 4, 'count': 1},
        {'re': 4, 'im': 0, 'count': 1},
    ]
    assert profile != {4: 4}


def test_profile_total(generate_random_binary):
    """Test that the sum of the autocorrelation over a period is the square of the imbalance."""
    sequence = generate_random_binary(57, seed=11, weight=20)
    profile = autocorrelation_profile(sequence)

    assert profile.total == gaussian((57 - 2 * 20)**2)


def test_gray_correlation(generate_sequence):
    """Test the `gray_correlation` function reproduces the quaternary autocorrelation."""
    first = generate_sequence('0011')
    second = generate_sequence('0110')
    combined = gray_combine(first, second)

    assert combined.to_string() == '0123'

    for tau in range(4):
        assert gray_correlation(first, second, tau) == correlation(combined, combined, tau)


def test_gray_correlation_values(generate_random_binary):
    """Test the `gray_correlation_values` function against the direct computation."""
    first = generate_random_binary(46, seed=1)
    second = generate_random_binary(46, seed=2)

    assert gray_correlation_values(first, second) == correlation_values(gray_combine(first, second))

    with pytest.raises(UnsupportedAlphabetError):
        gray_correlation_values(gray_combine(first, second), second)


def test_rmax_sq(generate_sequence):
    """Test the `rmax_sq` function."""
    assert rmax_sq(generate_sequence('1030233110212')) == 5
    assert rmax_sq(generate_sequence('0132')) == 4
    assert rmax_sq(generate_sequence('1')) == 0


@pytest.mark.parametrize(('period', 'expected'), ((8, (-4, 0)), (9, (-3, 1)), (10, (-2, 2)), (11, (-1,))))
def test_optimal_binary_values(period, expected):
    """Test the `optimal_binary_values` function."""
    assert optimal_binary_values(period) == expected


def test_has_optimal_autocorrelation(generate_sequence):
    """Test the `has_optimal_autocorrelation` function."""
    assert has_optimal_autocorrelation(generate_sequence('1010001101'))
    assert has_optimal_autocorrelation(generate_sequence('1110100'))
    assert not has_optimal_autocorrelation(generate_sequence('1100000'))

    with pytest.raises(UnsupportedAlphabetError):
        has_optimal_autocorrelation(generate_sequence('0123'))


def test_has_optimal_magnitude(generate_sequence):
    """Test the `has_optimal_magnitude` function."""
    assert has_optimal_magnitude(generate_sequence('0132'))
    assert not has_optimal_magnitude(generate_sequence('0123'))
    assert not has_optimal_magnitude(generate_sequence('0000', 4))
    assert not has_optimal_magnitude(generate_sequence('1030233110212'))

    with pytest.raises(UnsupportedAlphabetError):
        has_optimal_magnitude(generate_sequence('0101'))

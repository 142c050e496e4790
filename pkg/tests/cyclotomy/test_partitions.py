# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.cyclotomy.partitions` module."""
import pytest

from cyclotomic_sequences.cyclotomy import QuadraticForm, order8_admissibility, solve_partition
from cyclotomic_sequences.exceptions import NotRepresentableError, ValidationError


@pytest.mark.parametrize(('p', 'form', 'first', 'second'), (
    (5, QuadraticForm.A4B, 1, 1),
    (13, QuadraticForm.A4B, -3, 1),
    (17, QuadraticForm.A4B, 1, 2),
    (29, QuadraticForm.A4B, 5, 1),
    (37, QuadraticForm.A4B, 1, 3),
    (17, QuadraticForm.A2B, -3, 2),
    (97, QuadraticForm.A2B, 5, 6),
    (17, QuadraticForm.X16, 1, 2),
    (97, QuadraticForm.X16, 9, 2),
))
def test_solve_partition(p, form, first, second):
    """Test the `solve_partition` function."""
    partition = solve_partition(p, form)

    assert (partition.first, partition.second) == (first, second)
    assert partition.first % 4 == 1
    assert partition.seconds == (second, -second)
    assert partition.value() == p


def test_solve_partition_not_representable():
    """Test the `solve_partition` function for primes without a representation."""
    with pytest.raises(NotRepresentableError, match=r'7 has no representation of the form a2\+4b2'):
        solve_partition(7, QuadraticForm.A4B)

    with pytest.raises(NotRepresentableError):
        solve_partition(113, QuadraticForm.X16)

    with pytest.raises(ValidationError):
        solve_partition(9, QuadraticForm.A4B)


@pytest.mark.parametrize(('p', 'x', 'a'), ((17, 1, -3), (97, 9, 5)))
def test_order8_admissibility(p, x, a):
    """Test the `order8_admissibility` function for admissible primes."""
    result = order8_admissibility(p)

    assert result
    assert (result.x, result.a) == (x, a)
    assert result.x - result.a == 4


@pytest.mark.parametrize(('p', 'reason'), (
    (15, r'15 is not an odd prime'),
    (41, r'41 is not congruent to 1 modulo 16'),
    (113, r'113 has no representation'),
))
def test_order8_admissibility_rejected(p, reason):
    """Test the `order8_admissibility` function for primes that are not admissible."""
    result = order8_admissibility(p)

    assert not result
    assert reason in result.reason

# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.constructions.shen` module."""
import pytest

from cyclotomic_sequences.constructions import (
    PairingVariant,
    ShenShape,
    build_dhm,
    build_shen,
    chung_quaternary,
    has_two_level_autocorrelation,
    pairing_level_sets,
    shen_shape,
    verify_shen_equivalence,
)
from cyclotomic_sequences.exceptions import AdmissibilityError
from cyclotomic_sequences.seqcore import BalanceClass, balance_counts, shift


def test_pairing_level_sets():
    """Test the `pairing_level_sets` function for the support of the binary sequence of period ten."""
    assert pairing_level_sets(frozenset({0, 2, 6, 7, 9}), 5) == (
        frozenset({1, 4, 5}),
        frozenset({3, 8}),
        frozenset({0, 6, 9}),
        frozenset({2, 7}),
    )


def test_build_shen():
    """Test the `build_shen` function coincides with the shift-and-complement pairing."""
    sequence = build_shen(5, (0, 1, 2), 2)

    assert sequence.to_string() == '2031002312'
    assert sequence == chung_quaternary(build_dhm(5, (0, 1, 2), 2), PairingVariant.SHIFT_COMPLEMENT)
    assert balance_counts(sequence).classification is BalanceClass.BALANCED
    assert has_two_level_autocorrelation(sequence)


def test_shen_shape(generate_system):
    """Test the `shen_shape` function on the half-period shift."""
    system = generate_system(5, 4, 2)
    sequence = build_shen(5, (0, 1, 2), 2)

    assert shen_shape(sequence, system) is None
    assert shen_shape(shift(sequence, 5), system) == ShenShape(even=(0, 3, 2, 1), odd=(2, 3, 0, 1))


def test_shen_shape_mismatch(generate_system, generate_sequence):
    """Test the `shen_shape` function for sequences without the shape."""
    system = generate_system(5, 4, 2)

    assert shen_shape(generate_sequence('1010001101'), system) is None
    assert shen_shape(generate_sequence('0000020000'), system) is None
    assert shen_shape(generate_sequence('02'), system) is None


def test_has_two_level_autocorrelation(generate_sequence):
    """Test the `has_two_level_autocorrelation` function."""
    assert has_two_level_autocorrelation(generate_sequence('3120113203'))
    assert not has_two_level_autocorrelation(generate_sequence('0123'))


@pytest.mark.parametrize('p', (5, 13, 29, 37))
def test_verify_shen_equivalence(p):
    """Test that every active triple passes the equivalence checks."""
    report = verify_shen_equivalence(p)

    assert report.passed
    assert report.checks
    assert report.as_dict()['passed'] is True


def test_verify_shen_equivalence_report():
    """Test the content of the equivalence report for 5."""
    report = verify_shen_equivalence(5, 2)
    result = report.as_dict()

    assert (report.p, report.generator, report.b_sign) == (5, 2, -1)
    assert len(report.checks) == 8
    assert [check['triple_list'] for check in result['checks']] == ['b'] * 4 + ['a'] * 4
    assert result['checks'][0]['triple'] == [0, 1, 2]
    assert result['checks'][0]['orientation'] == 'listed'


def test_verify_shen_equivalence_inadmissible():
    """Test the `verify_shen_equivalence` function for a prime without an active list."""
    with pytest.raises(AdmissibilityError):
        verify_shen_equivalence(17)


@pytest.fixture
def patch_shift_only(monkeypatch):
    """Return a function that replaces the shift-only pairing used by the equivalence check.

    The replacement is the shift-and-complement pairing with the symbols at ``positions`` incremented.
    """
    from cyclotomic_sequences.constructions import shen as shen_module
    from cyclotomic_sequences.seqcore import PeriodicSeq

    def _patch_shift_only(positions):

        def pairing(source, variant=PairingVariant.SHIFT_COMPLEMENT):
            paired = chung_quaternary(source, PairingVariant.SHIFT_COMPLEMENT)

            if variant is PairingVariant.SHIFT_COMPLEMENT:
                return paired

            symbols = list(paired.symbols)
            for position in positions:
                symbols[position] = (symbols[position] + 1) % 4
            return PeriodicSeq(symbols=tuple(symbols), modulus=4)

        monkeypatch.setattr(shen_module, 'chung_quaternary', pairing)

    return _patch_shift_only


def test_shift_only_differs_same_level_sets(patch_shift_only):
    """Test that a shift-only pairing reproducing the level sets fails the equivalence check."""
    patch_shift_only(())
    report = verify_shen_equivalence(5, 2)

    assert not any(check.shift_only_differs for check in report.checks)
    assert not report.passed


def test_shift_only_differs_single_position(patch_shift_only):
    """Test that a shift-only pairing differing at a single position already breaks the level sets."""
    patch_shift_only((1,))
    report = verify_shen_equivalence(5, 2)

    assert all(check.shift_only_differs for check in report.checks)
    assert report.passed

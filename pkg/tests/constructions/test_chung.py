# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.constructions.chung` module."""
import pytest

from cyclotomic_sequences.constructions import (
    PairingVariant,
    chung_quaternary,
    pairing_partner,
    pairing_symbol_counts,
    predict_pairing_balance,
)
from cyclotomic_sequences.exceptions import InapplicableError, ParameterError, UnsupportedAlphabetError
from cyclotomic_sequences.seqcore import BalanceClass, autocorrelation_profile, balance_counts


@pytest.mark.parametrize(('variant', 'partner', 'expected'), (
    (PairingVariant.SHIFT_COMPLEMENT, '1001001011', '2031002312'),
    (PairingVariant.SHIFT_ONLY, '0110110100', '3120113203'),
))
def test_chung_quaternary(generate_sequence, variant, partner, expected):
    """Test the `chung_quaternary` and `pairing_partner` functions for an optimal binary sequence of period ten."""
    source = generate_sequence('1010001101')

    assert pairing_partner(source, variant).to_string() == partner
    assert chung_quaternary(source, variant).to_string() == expected


@pytest.mark.parametrize('variant', PairingVariant)
def test_chung_profile(generate_random_binary, variant):
    """Test that the paired sequence has the autocorrelation of the binary sequence."""
    source = generate_random_binary(38, seed=5)

    assert autocorrelation_profile(chung_quaternary(source, variant)) == autocorrelation_profile(source)


@pytest.mark.parametrize(('variant', 'expected'), (
    (PairingVariant.SHIFT_COMPLEMENT, (3, 2, 3, 2)),
    (PairingVariant.SHIFT_ONLY, (2, 3, 2, 3)),
))
def test_pairing_symbol_counts(generate_sequence, variant, expected):
    """Test the `pairing_symbol_counts` function agrees with counting the paired sequence."""
    source = generate_sequence('1010001101')

    assert pairing_symbol_counts(source, variant) == expected
    assert balance_counts(chung_quaternary(source, variant)).counts == expected


@pytest.mark.parametrize('variant', PairingVariant)
def test_pairing_symbol_counts_random(generate_random_binary, variant):
    """Test the `pairing_symbol_counts` function for random sequences."""
    for seed in range(5):
        source = generate_random_binary(30, seed=seed)
        assert pairing_symbol_counts(source, variant) == balance_counts(chung_quaternary(source, variant)).counts


@pytest.mark.parametrize(('text', 'expected'), (
    ('1010001101', BalanceClass.BALANCED),
    ('111000100110', BalanceClass.ALMOST_BALANCED),
))
def test_predict_pairing_balance(generate_sequence, text, expected):
    """Test the `predict_pairing_balance` function agrees with the balance of the paired sequence."""
    source = generate_sequence(text)

    assert predict_pairing_balance(source) is expected

    for variant in PairingVariant:
        assert balance_counts(chung_quaternary(source, variant)).classification is expected


@pytest.mark.parametrize(('text', 'message'), (
    ('1110000000', r'needs a balanced or almost balanced sequence'),
    ('11001100', r'the half-period autocorrelation 8 is not an optimal value'),
    ('11100000', r'no prediction for almost balanced sequences'),
))
def test_predict_pairing_balance_inapplicable(generate_sequence, text, message):
    """Test the `predict_pairing_balance` function outside of the cases it covers."""
    with pytest.raises(InapplicableError, match=message):
        predict_pairing_balance(generate_sequence(text))


def test_pairing_invalid(generate_sequence):
    """Test the pairing construction for sources it does not take."""
    with pytest.raises(ParameterError, match=r'needs an even period'):
        chung_quaternary(generate_sequence('101'), PairingVariant.SHIFT_ONLY)

    with pytest.raises(UnsupportedAlphabetError):
        chung_quaternary(generate_sequence('0123'), PairingVariant.SHIFT_ONLY)

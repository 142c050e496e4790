# -*- coding: utf-8 -*-
"""Quaternary sequences of even period obtained by pairing a binary sequence with its own half-period shift.

The partner of ``s0`` is either ``L^(N/2)(s0)`` or the shift of its complement ``L^(N/2)(~s0)``. In both cases the Gray
combination has exactly the autocorrelation of ``s0``.
"""
from __future__ import annotations

import enum
from typing import Tuple

from cyclotomic_sequences.exceptions import InapplicableError, ParameterError, UnsupportedAlphabetError
from cyclotomic_sequences.seqcore import (
    BalanceClass,
    PeriodicSeq,
    balance_counts,
    complement,
    correlation,
    gaussian,
    gray_combine,
    optimal_binary_values,
    shift,
)

__all__ = (
    'PairingVariant',
    'pairing_partner',
    'chung_quaternary',
    'predict_pairing_balance',
    'pairing_symbol_counts',
)


class PairingVariant(enum.Enum):
    """How the partner of the binary sequence is obtained from it."""

    SHIFT_ONLY = 'so'
    SHIFT_COMPLEMENT = 'sc'


def _validate_source(s0: PeriodicSeq):
    if s0.modulus != 2:
        raise UnsupportedAlphabetError('the pairing construction takes a binary sequence')

    if s0.period % 2:
        raise ParameterError(f'the pairing construction needs an even period, got {s0.period}')


def _unshifted_partner(s0: PeriodicSeq, variant: PairingVariant) -> PeriodicSeq:
    return complement(s0) if variant is PairingVariant.SHIFT_COMPLEMENT else s0


def pairing_partner(s0: PeriodicSeq, variant: PairingVariant) -> PeriodicSeq:
    """Return ``s1``, the half-period shift of ``s0`` or of its complement."""
    _validate_source(s0)
    return shift(_unshifted_partner(s0, variant), s0.period // 2)


def chung_quaternary(s0: PeriodicSeq, variant: PairingVariant) -> PeriodicSeq:
    """Return ``u(t) = gray_inverse(s0(t), s1(t))`` with ``s1`` the partner selected by ``variant``.

    :raises ParameterError: if the period of ``s0`` is odd.
    :raises UnsupportedAlphabetError: if ``s0`` is not binary.
    """
    return gray_combine(s0, pairing_partner(s0, variant))


def pairing_symbol_counts(s0: PeriodicSeq, variant: PairingVariant) -> Tuple[int, int, int, int]:
    """Return ``(N_0, N_1, N_2, N_3)`` of the paired sequence from the supports alone.

    With ``D`` the support of ``s0``, ``B`` the support of the partner before shifting and ``X - N/2`` the translate
    of a set, the counts are ``|~D & (~B - N/2)|``, ``|~D & (B - N/2)|``, ``|D & (B - N/2)|`` and ``|D & (~B - N/2)|``.
    """
    _validate_source(s0)

    period = s0.period
    half = period // 2
    everything = frozenset(range(period))

    support = s0.support()
    partner = _unshifted_partner(s0, variant).support()
    translated = frozenset((t - half) % period for t in partner)
    translated_complement = everything - translated
    outside = everything - support

    return (
        len(outside & translated_complement),
        len(outside & translated),
        len(support & translated),
        len(support & translated_complement),
    )


def predict_pairing_balance(s0: PeriodicSeq, variant: PairingVariant = PairingVariant.SHIFT_COMPLEMENT) -> BalanceClass:
    """Return the balance class the paired sequence is predicted to have.

    A balanced ``s0`` gives a balanced sequence for ``N = 0, 2, 6 (mod 8)`` and an almost balanced one for
    ``N = 4 (mod 8)``. An almost balanced ``s0`` gives an almost balanced sequence for ``N = 2, 4, 6 (mod 8)``.

    The counts of the paired sequence are fixed by the weight of ``s0`` and by ``R(N/2)``, so the prediction needs the
    half-period autocorrelation to take one of the optimal values of :func:`optimal_binary_values`. The prediction is
    the same for both variants.

    :raises InapplicableError: if ``s0`` is unbalanced, if ``R(N/2)`` is not optimal or if ``s0`` is almost balanced
        with ``N = 0 (mod 8)``.
    """
    _validate_source(s0)

    period = s0.period
    classification = balance_counts(s0).classification
    residue = period % 8

    if classification is BalanceClass.UNBALANCED:
        raise InapplicableError('the balance prediction needs a balanced or almost balanced sequence')

    half_period = correlation(s0, s0, period // 2)

    if half_period not in {gaussian(value) for value in optimal_binary_values(period)}:
        raise InapplicableError(f'the half-period autocorrelation {half_period.x} is not an optimal value')

    if classification is BalanceClass.BALANCED:
        return BalanceClass.ALMOST_BALANCED if residue == 4 else BalanceClass.BALANCED

    if residue == 0:
        raise InapplicableError('no prediction for almost balanced sequences with N = 0 (mod 8)')

    return BalanceClass.ALMOST_BALANCED

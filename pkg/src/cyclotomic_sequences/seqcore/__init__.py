# -*- coding: utf-8 -*-
"""Periodic sequences over ``Z_2`` and ``Z_4``: Gray map, interleaving, exact correlation and balance."""
from .balance import BalanceClass, BalanceReport, balance_counts, classify_spread
from .correlation import (
    CorrelationProfile,
    autocorrelation_profile,
    correlation,
    correlation_values,
    gaussian,
    gray_correlation,
    gray_correlation_values,
    has_optimal_autocorrelation,
    has_optimal_magnitude,
    norm,
    optimal_binary_values,
    rmax_sq,
)
from .gray import GRAY_MAP, gray, gray_combine, gray_inverse, gray_split
from .interleave import crt_interleave, crt_pair, crt_split
from .sequence import ALPHABETS, PeriodicSeq, complement, shift

__all__ = (
    'ALPHABETS',
    'GRAY_MAP',
    'BalanceClass',
    'BalanceReport',
    'CorrelationProfile',
    'PeriodicSeq',
    'autocorrelation_profile',
    'balance_counts',
    'classify_spread',
    'complement',
    'correlation',
    'correlation_values',
    'crt_interleave',
    'crt_pair',
    'crt_split',
    'gaussian',
    'gray',
    'gray_combine',
    'gray_correlation',
    'gray_correlation_values',
    'gray_inverse',
    'gray_split',
    'has_optimal_autocorrelation',
    'has_optimal_magnitude',
    'norm',
    'optimal_binary_values',
    'rmax_sq',
    'shift',
)

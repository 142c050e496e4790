# -*- coding: utf-8 -*-
"""Symbol counts and the balance classification of periodic sequences."""
from __future__ import annotations

import dataclasses
import enum
from typing import Tuple

import numpy

from .sequence import PeriodicSeq

__all__ = ('BalanceClass', 'BalanceReport', 'balance_counts', 'classify_spread')


class BalanceClass(enum.Enum):
    """Classification by the spread ``max_k N_k - min_k N_k`` of the symbol counts."""

    BALANCED = 'balanced'
    ALMOST_BALANCED = 'almost_balanced'
    UNBALANCED = 'unbalanced'


def classify_spread(spread: int) -> BalanceClass:
    if spread <= 1:
        return BalanceClass.BALANCED

    if spread == 2:
        return BalanceClass.ALMOST_BALANCED

    return BalanceClass.UNBALANCED


@dataclasses.dataclass(frozen=True)
class BalanceReport:
    """The counts ``N_k`` of every symbol ``k`` in one period, and the resulting class."""

    counts: Tuple[int, ...]
    classification: BalanceClass

    @property
    def period(self) -> int:
        return sum(self.counts)

    @property
    def spread(self) -> int:
        return max(self.counts) - min(self.counts)

    def as_dict(self) -> dict:
        return {'counts': list(self.counts), 'classification': self.classification.value}


def balance_counts(sequence: PeriodicSeq) -> BalanceReport:
    """Count every symbol of ``Z_m`` over one period and classify the result."""
    counts = tuple(int(count) for count in numpy.bincount(sequence.array, minlength=sequence.modulus))
    return BalanceReport(counts=counts, classification=classify_spread(max(counts) - min(counts)))

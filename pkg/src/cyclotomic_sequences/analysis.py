# -*- coding: utf-8 -*-
"""The analysis record of a single sequence, shared by the ``gen``, ``analyze`` and ``scan`` commands."""
from __future__ import annotations

import dataclasses
from typing import List, Optional, Tuple

from cyclotomic_sequences.lincomp import ComplexityResult, minimal_polynomial
from cyclotomic_sequences.seqcore import (
    BalanceReport,
    CorrelationProfile,
    PeriodicSeq,
    autocorrelation_profile,
    balance_counts,
)

__all__ = ('SequenceAnalysis', 'analyze_sequence')


@dataclasses.dataclass(frozen=True)
class SequenceAnalysis:
    """Balance, autocorrelation and linear complexity of one sequence.

    ``spec`` holds the normalized spec string when the sequence was built from one, ``flags`` any warnings attached to
    the construction, e.g. ``unverified distribution``.
    """

    sequence: PeriodicSeq
    balance: BalanceReport
    profile: CorrelationProfile
    complexity: ComplexityResult
    spec: Optional[str] = None
    flags: Tuple[str, ...] = ()

    @property
    def rmax_sq(self) -> int:
        return self.profile.rmax_sq

    def as_dict(self) -> dict:
        """Return the JSON-serializable record."""
        result = {
            'sequence': self.sequence.to_string(),
            'alphabet': self.sequence.modulus,
            'period': self.sequence.period,
            'balance': self.balance.as_dict(),
            'profile': self.profile.as_records(),
            'rmax_sq': self.rmax_sq,
            'complexity': self.complexity.as_dict(),
        }

        if self.spec is not None:
            result['spec'] = self.spec

        if self.flags:
            result['flags'] = list(self.flags)

        return result

    def summary_lines(self) -> List[str]:
        """Return the human readable rendering, one line per quantity."""
        counts = ', '.join(f'N_{symbol}={count}' for symbol, count in enumerate(self.balance.counts))
        profile = ', '.join(_format_value(record) for record in self.profile.as_records())
        complexity = self.complexity.as_dict()

        lines = [
            f'sequence: {self.sequence.to_string()}',
            f'period: {self.sequence.period} over Z_{self.sequence.modulus}',
            f'balance: {self.balance.classification.value} ({counts})',
            f'profile: {profile}',
            f'rmax_sq: {self.rmax_sq}',
            f'linear complexity over {complexity["field"]}: {complexity["linear_complexity"]}',
        ]

        if self.spec is not None:
            lines.insert(0, f'spec: {self.spec}')

        lines.extend(f'warning: {flag}' for flag in self.flags)

        return lines


def _format_value(record: dict) -> str:
    re, im, count = record['re'], record['im'], record['count']

    if im == 0:
        value = f'{re}'
    elif re == 0:
        value = f'{im}i'
    else:
        value = f'{re}{im:+d}i'

    return f'{value}:{count}'


def analyze_sequence(
    sequence: PeriodicSeq,
    spec: Optional[str] = None,
    flags: Tuple[str, ...] = (),
) -> SequenceAnalysis:
    """Return the analysis of ``sequence``; the complexity is computed over the field matching its alphabet."""
    return SequenceAnalysis(
        sequence=sequence,
        balance=balance_counts(sequence),
        profile=autocorrelation_profile(sequence),
        complexity=minimal_polynomial(sequence),
        spec=spec,
        flags=tuple(flags),
    )

# -*- coding: utf-8 -*-
"""Exact periodic correlation of binary and quaternary sequences.

Values are Gaussian integers of :data:`sympy.ZZ_I`. A term ``w^(s1(t) - s2(t + tau))`` only depends on the difference
modulo ``m``, so every correlation is obtained from the counts of the differences: ``R = c_0 - c_2 + (c_1 - c_3) i``
for quaternary and ``R = c_0 - c_1`` for binary sequences.
"""
from __future__ import annotations

import collections
import dataclasses
from typing import Dict, List, Mapping, Optional, Tuple

import numpy
from sympy.polys.domains import ZZ_I

from cyclotomic_sequences.exceptions import ExactnessError, ParameterError, UnsupportedAlphabetError

from .balance import BalanceClass, balance_counts
from .sequence import PeriodicSeq

__all__ = (
    'CorrelationProfile',
    'gaussian',
    'norm',
    'correlation',
    'correlation_values',
    'autocorrelation_profile',
    'gray_correlation',
    'gray_correlation_values',
    'rmax_sq',
    'optimal_binary_values',
    'has_optimal_autocorrelation',
    'has_optimal_magnitude',
)

SHIFT_BLOCK = 256


def gaussian(re: int, im: int = 0):
    """Return the Gaussian integer ``re + im i``."""
    return ZZ_I(int(re), int(im))


def norm(value) -> int:
    """Return the squared magnitude of a Gaussian integer."""
    return int(value.x)**2 + int(value.y)**2


def _check_compatible(s1: PeriodicSeq, s2: PeriodicSeq):
    if s1.modulus != s2.modulus:
        raise ParameterError(f'the alphabets Z_{s1.modulus} and Z_{s2.modulus} differ')

    if s1.period != s2.period:
        raise ParameterError(f'the periods {s1.period} and {s2.period} differ')


def _from_counts(counts: numpy.ndarray, modulus: int):
    if modulus == 2:
        return gaussian(counts[0] - counts[1])

    return gaussian(counts[0] - counts[2], counts[1] - counts[3])


def correlation(s1: PeriodicSeq, s2: PeriodicSeq, tau: int):
    """Return ``R(tau) = sum_t w^(s1(t) - s2(t + tau))`` over one period, with ``w = i`` or ``w = -1``.

    :raises ParameterError: if the sequences have different periods or alphabets.
    """
    _check_compatible(s1, s2)
    differences = (s1.array - numpy.roll(s2.array, -(tau % s2.period))) % s1.modulus
    return _from_counts(numpy.bincount(differences, minlength=s1.modulus), s1.modulus)


def correlation_values(s1: PeriodicSeq, s2: Optional[PeriodicSeq] = None) -> List:
    """Return ``[R(0), ..., R(N - 1)]``; the autocorrelation if ``s2`` is omitted.

    The shifts are processed in blocks of :data:`SHIFT_BLOCK` rows of a difference matrix.
    """
    if s2 is None:
        s2 = s1

    _check_compatible(s1, s2)

    period = s1.period
    modulus = s1.modulus
    offsets = numpy.arange(period)
    first = s1.array
    second = s2.array
    values = []

    for start in range(0, period, SHIFT_BLOCK):
        taus = offsets[start:start + SHIFT_BLOCK]
        differences = (first[None, :] - second[(taus[:, None] + offsets[None, :]) % period]) % modulus
        counts = numpy.stack([numpy.count_nonzero(differences == k, axis=1) for k in range(modulus)], axis=1)
        values.extend(_from_counts(row, modulus) for row in counts)

    return values


@dataclasses.dataclass(frozen=True, eq=False)
class CorrelationProfile:
    """The multiset of autocorrelation values over all shifts of one period.

    ``counts`` maps ``(re, im)`` to the number of shifts with that value. A profile compares equal to another profile
    with the same counts, or to a plain mapping from numbers (``int`` or ``complex``) to counts.
    """

    period: int
    counts: Tuple[Tuple[Tuple[int, int], int], ...]

    @classmethod
    def from_values(cls, values: List) -> CorrelationProfile:
        tally = collections.Counter((int(value.x), int(value.y)) for value in values)
        return cls(period=len(values), counts=tuple(sorted(tally.items())))

    @classmethod
    def from_distribution(cls, distribution: Mapping) -> CorrelationProfile:
        """Return the profile of a mapping from numbers (``int`` or ``complex``) to counts."""
        tally = collections.Counter()

        for key, count in distribution.items():
            value = complex(key)
            tally[(int(value.real), int(value.imag))] += count

        return cls(period=sum(tally.values()), counts=tuple(sorted(tally.items())))

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self.counts)

    def as_records(self) -> List[Dict[str, int]]:
        """Return the JSON rendering: a list of ``{re, im, count}`` sorted by value."""
        return [{'re': re, 'im': im, 'count': count} for (re, im), count in self.counts]

    def out_of_phase(self) -> Dict[Tuple[int, int], int]:
        """Return the counts with the in-phase value ``R(0) = N`` removed once."""
        counts = self.as_dict()
        in_phase = (self.period, 0)
        counts[in_phase] -= 1

        if not counts[in_phase]:
            del counts[in_phase]

        return counts

    @property
    def rmax_sq(self) -> int:
        """Return the largest squared magnitude among the out-of-phase values, zero if there are none."""
        return max((re * re + im * im for re, im in self.out_of_phase()), default=0)

    @property
    def is_real(self) -> bool:
        return all(im == 0 for (_, im), _ in self.counts)

    @property
    def total(self):
        """Return the sum of ``R(tau)`` over all shifts."""
        re = sum(value[0] * count for value, count in self.counts)
        im = sum(value[1] * count for value, count in self.counts)
        return gaussian(re, im)

    def __eq__(self, other) -> bool:
        if isinstance(other, CorrelationProfile):
            return self.counts == other.counts

        if isinstance(other, Mapping):
            return self.counts == CorrelationProfile.from_distribution(other).counts

        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.counts)


def autocorrelation_profile(sequence: PeriodicSeq) -> CorrelationProfile:
    """Return the distribution of the autocorrelation values over ``tau = 0, ..., N - 1``."""
    return CorrelationProfile.from_values(correlation_values(sequence))


def gray_correlation(s1: PeriodicSeq, s2: PeriodicSeq, tau: int):
    """Return the autocorrelation of the Gray combination of ``s1`` and ``s2`` from binary correlations only.

    Evaluates ``(R_s1 + R_s2) / 2 + i (R_s1,s2 - R_s2,s1) / 2`` at ``tau``. Both halves are taken in doubled arithmetic.

    :raises ExactnessError: if the doubled value is not divisible by two.
    """
    if s1.modulus != 2 or s2.modulus != 2:
        raise UnsupportedAlphabetError('the Gray correlation identity needs two binary sequences')

    _check_compatible(s1, s2)

    doubled_re = int(correlation(s1, s1, tau).x) + int(correlation(s2, s2, tau).x)
    doubled_im = int(correlation(s1, s2, tau).x) - int(correlation(s2, s1, tau).x)

    return _halve(doubled_re, doubled_im)


def gray_correlation_values(s1: PeriodicSeq, s2: PeriodicSeq) -> List:
    """Return :func:`gray_correlation` for every shift ``tau = 0, ..., N - 1``."""
    if s1.modulus != 2 or s2.modulus != 2:
        raise UnsupportedAlphabetError('the Gray correlation identity needs two binary sequences')

    _check_compatible(s1, s2)

    columns = zip(
        correlation_values(s1), correlation_values(s2), correlation_values(s1, s2), correlation_values(s2, s1)
    )

    return [_halve(int(r1.x) + int(r2.x), int(r12.x) - int(r21.x)) for r1, r2, r12, r21 in columns]


def _halve(doubled_re: int, doubled_im: int):
    if doubled_re % 2 or doubled_im % 2:
        raise ExactnessError(f'the doubled correlation {doubled_re} + {doubled_im}i is not even')

    return gaussian(doubled_re // 2, doubled_im // 2)


def rmax_sq(sequence: PeriodicSeq) -> int:
    """Return ``max |R(tau)|^2`` over the out-of-phase shifts, zero for period one."""
    return max((norm(value) for value in correlation_values(sequence)[1:]), default=0)


def optimal_binary_values(period: int) -> Tuple[int, ...]:
    """Return the out-of-phase values of a binary sequence with optimal autocorrelation for the given period."""
    return {0: (-4, 0), 1: (-3, 1), 2: (-2, 2), 3: (-1,)}[period % 4]


def has_optimal_autocorrelation(sequence: PeriodicSeq) -> bool:
    """Return whether every out-of-phase value of a binary sequence lies in :func:`optimal_binary_values`."""
    if sequence.modulus != 2:
        raise UnsupportedAlphabetError('optimal binary autocorrelation is only defined for binary sequences')

    allowed = {gaussian(value) for value in optimal_binary_values(sequence.period)}
    return all(value in allowed for value in correlation_values(sequence)[1:])


def has_optimal_magnitude(sequence: PeriodicSeq) -> bool:
    """Return whether a quaternary sequence of even period is balanced with ``|R(tau)|^2 <= 4`` for all ``tau != 0``."""
    if sequence.modulus != 4:
        raise UnsupportedAlphabetError('the optimal magnitude criterion applies to quaternary sequences')

    if sequence.period % 2:
        return False

    if balance_counts(sequence).classification is not BalanceClass.BALANCED:
        return False

    return rmax_sq(sequence) <= 4

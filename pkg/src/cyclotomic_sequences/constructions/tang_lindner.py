# -*- coding: utf-8 -*-
"""Quaternary sequences of prime period from two unions of order four cyclotomic classes, combined by the Gray map."""
from __future__ import annotations

from typing import Dict, Optional, Sequence, Tuple

from aiida.common.log import AIIDA_LOGGER

from cyclotomic_sequences.cyclotomy import build_system
from cyclotomic_sequences.exceptions import AdmissibilityError
from cyclotomic_sequences.seqcore import PeriodicSeq, gray_combine
from cyclotomic_sequences.utils.validation import validate_prime, validate_triple

__all__ = (
    'COVERED_TRIPLES',
    'build_tang_lindner',
    'is_covered_triple',
    'expected_tang_lindner_profile',
    'expected_tang_lindner_counts',
)

LOGGER = AIIDA_LOGGER.getChild('cyclotomic_sequences.tang_lindner')

#: Triples with a known autocorrelation distribution, keyed on the parity of ``f = (p - 1) / 4``.
COVERED_TRIPLES: Dict[int, Tuple[Tuple[int, int, int], ...]] = {
    0: ((1, 2, 3), (1, 3, 0)),
    1: ((1, 2, 3),),
}


def is_covered_triple(p: int, indices: Sequence[int]) -> bool:
    """Return whether the distribution of the ``(i, j, l)`` sequence of period ``p`` is known."""
    return tuple(indices) in COVERED_TRIPLES[((p - 1) // 4) % 2]


def build_tang_lindner(p: int, indices: Sequence[int], generator: Optional[int] = None) -> PeriodicSeq:
    """Return ``u(t) = gray_inverse(s_C0(t), s_C1(t))`` with ``C_0 = D_i + D_j`` and ``C_1 = D_j + D_l + {0}``.

    Triples outside :data:`COVERED_TRIPLES` are built as well but logged as having an unverified distribution.

    :param p: prime with ``p = 1 (mod 4)``.
    :param indices: the distinct class indices ``(i, j, l)``.
    :param generator: primitive root defining the classes, the smallest one if not specified.
    :raises AdmissibilityError: if ``p`` is not congruent to 1 modulo 4.
    :raises ParameterError: if the indices are repeated or out of range.
    """
    validate_prime(p)
    i, j, l = validate_triple(indices)

    if p % 4 != 1:
        raise AdmissibilityError(f'the order four construction needs p = 1 (mod 4), got {p}')

    if not is_covered_triple(p, (i, j, l)):
        LOGGER.warning(f'unverified distribution: the triple {(i, j, l)} is not covered for p={p}')

    system = build_system(p, 4, generator)
    first = PeriodicSeq.characteristic(system.union(i, j), p)
    second = PeriodicSeq.characteristic(system.union(j, l) | {0}, p)

    return gray_combine(first, second)


def expected_tang_lindner_profile(p: int) -> Dict[complex, int]:
    """Return the autocorrelation distribution of the covered triples, which depends on the parity of ``f``."""
    quarter = (p - 1) // 4

    if quarter % 2 == 0:
        return {p: 1, -1: (p - 1) // 2, 1: quarter, -3: quarter}

    return {p: 1, -1: (p - 1) // 2, complex(-1, 2): quarter, complex(-1, -2): quarter}


def expected_tang_lindner_counts(p: int) -> Tuple[int, int, int, int]:
    """Return the symbol counts of the covered triples: the symbol one occurs once more than the others."""
    quarter = (p - 1) // 4
    return (quarter, quarter + 1, quarter, quarter)

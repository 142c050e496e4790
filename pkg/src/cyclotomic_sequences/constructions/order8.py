# -*- coding: utf-8 -*-
"""Balanced quaternary sequences of prime period from the cyclotomic classes of order eight."""
from __future__ import annotations

from typing import Dict, Optional, Tuple

import numpy

from cyclotomic_sequences.cyclotomy import build_system, order8_admissibility
from cyclotomic_sequences.exceptions import AdmissibilityError
from cyclotomic_sequences.seqcore import PeriodicSeq

__all__ = ('ORDER8_LEVELS', 'build_order8', 'expected_order8_profile', 'expected_order8_counts')

#: The classes of order eight making up each level set ``C_k = {t : u(t) = k}``; zero is attached to ``C_0``.
ORDER8_LEVELS: Dict[int, Tuple[int, int]] = {0: (2, 6), 1: (1, 3), 2: (0, 4), 3: (5, 7)}

_CLASS_TO_SYMBOL = numpy.zeros(8, dtype=numpy.int64)

for _symbol, _indices in ORDER8_LEVELS.items():
    _CLASS_TO_SYMBOL[list(_indices)] = _symbol


def build_order8(p: int, generator: Optional[int] = None) -> PeriodicSeq:
    """Return the quaternary sequence of period ``p`` with ``u(t) = k`` for ``t`` in ``C_k``.

    :param p: a prime admissible for the order-eight construction, see
        :func:`~cyclotomic_sequences.cyclotomy.order8_admissibility`.
    :param generator: primitive root defining the classes, the smallest one if not specified.
    :raises AdmissibilityError: if ``p`` is not admissible; the message names the failed condition.
    """
    decision = order8_admissibility(p)

    if not decision:
        raise AdmissibilityError(f'{p} is not admissible for the order eight construction: {decision.reason}')

    system = build_system(p, 8, generator)
    values = numpy.zeros(p, dtype=numpy.int64)
    values[1:] = _CLASS_TO_SYMBOL[system.index[1:]]

    return PeriodicSeq.from_array(values, modulus=4)


def expected_order8_profile(p: int) -> Dict[int, int]:
    """Return the autocorrelation distribution every order-eight sequence of period ``p`` has.

    The values sum to ``|sum_t i^u(t)|^2 = 1`` over a period, which fixes the counts of ``-1`` and ``3`` to
    ``(p - 1) / 4``.
    """
    quarter = (p - 1) // 4
    return {p: 1, -1: quarter, -3: (p - 1) // 2, 3: quarter}


def expected_order8_counts(p: int) -> Tuple[int, int, int, int]:
    """Return the symbol counts ``(N_0, N_1, N_2, N_3)`` of an order-eight sequence of period ``p``."""
    return ((p + 3) // 4, (p - 1) // 4, (p - 1) // 4, (p - 1) // 4)

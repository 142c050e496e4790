# -*- coding: utf-8 -*-
"""The Gray map between ``Z_4`` and pairs of bits."""
from __future__ import annotations

from typing import Dict, Tuple

import numpy

from cyclotomic_sequences.exceptions import ParameterError, UnsupportedAlphabetError

from .sequence import PeriodicSeq

__all__ = ('GRAY_MAP', 'gray', 'gray_inverse', 'gray_combine', 'gray_split')

GRAY_MAP: Dict[int, Tuple[int, int]] = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}

# Indexed by ``[b1, b2]``.
_GRAY_INVERSE = numpy.array([[0, 1], [3, 2]], dtype=numpy.int64)


def gray(symbol: int) -> Tuple[int, int]:
    """Return the bit pair of a quaternary symbol."""
    try:
        return GRAY_MAP[symbol]
    except KeyError as exception:
        raise ParameterError(f'{symbol!r} is not a symbol of Z_4') from exception


def gray_inverse(b1: int, b2: int) -> int:
    """Return the quaternary symbol of the bit pair ``(b1, b2)``."""
    if b1 not in (0, 1) or b2 not in (0, 1):
        raise ParameterError(f'({b1!r}, {b2!r}) is not a pair of bits')

    return int(_GRAY_INVERSE[b1, b2])


def gray_combine(s1: PeriodicSeq, s2: PeriodicSeq) -> PeriodicSeq:
    """Merge two binary sequences of equal period into ``u(t) = gray_inverse(s1(t), s2(t))``."""
    if s1.modulus != 2 or s2.modulus != 2:
        raise UnsupportedAlphabetError('the Gray map combines two binary sequences')

    if s1.period != s2.period:
        raise ParameterError(f'the periods {s1.period} and {s2.period} differ')

    return PeriodicSeq.from_array(_GRAY_INVERSE[s1.array, s2.array], modulus=4)


def gray_split(sequence: PeriodicSeq) -> Tuple[PeriodicSeq, PeriodicSeq]:
    """Split a quaternary sequence into the two binary sequences of its Gray images."""
    if sequence.modulus != 4:
        raise UnsupportedAlphabetError('only quaternary sequences have a Gray image')

    values = sequence.array
    first = (values >= 2).astype(numpy.int64)
    second = ((values == 1) | (values == 2)).astype(numpy.int64)

    return PeriodicSeq.from_array(first, 2), PeriodicSeq.from_array(second, 2)

# -*- coding: utf-8 -*-
"""The isomorphism ``Z_2 x Z_p -> Z_2p`` used to interleave supports of period ``2p``."""
from __future__ import annotations

from typing import FrozenSet, Iterable, Tuple

from cyclotomic_sequences.exceptions import ParameterError

__all__ = ('crt_pair', 'crt_split', 'crt_interleave')


def crt_pair(u: int, v: int, p: int) -> int:
    """Return the unique ``t`` in ``Z_2p`` with ``t = u (mod 2)`` and ``t = v (mod p)``.

    :param p: an odd modulus.
    """
    if p % 2 == 0:
        raise ParameterError(f'the modulus should be odd, got {p}')

    v = v % p
    return v if v % 2 == u % 2 else v + p


def crt_split(t: int, p: int) -> Tuple[int, int]:
    """Return the pair ``(t mod 2, t mod p)``."""
    return t % 2, t % p


def crt_interleave(pairs: Iterable[Tuple[int, int]], p: int) -> FrozenSet[int]:
    """Return the image of a set of pairs of ``Z_2 x Z_p`` in ``Z_2p``."""
    return frozenset(crt_pair(u, v, p) for u, v in pairs)

# -*- coding: utf-8 -*-
"""Binary sequences of period ``2p`` with optimal autocorrelation, interleaved from cyclotomic classes of order four."""
from __future__ import annotations

import enum
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from cyclotomic_sequences.cyclotomy import QuadraticForm, build_system, solve_partition
from cyclotomic_sequences.exceptions import AdmissibilityError, ParameterError
from cyclotomic_sequences.seqcore import PeriodicSeq, crt_interleave
from cyclotomic_sequences.utils.validation import validate_prime, validate_triple

__all__ = (
    'A_TRIPLES',
    'B_TRIPLES',
    'Orientation',
    'dhm_triple_lists',
    'dhm_pairs',
    'dhm_support',
    'build_dhm',
    'mirror_triple',
)

#: Triples for primes ``p = a^2 + 4b^2`` with ``|a| = 1``.
A_TRIPLES: Tuple[Tuple[int, int, int], ...] = ((0, 1, 3), (0, 2, 3), (1, 2, 0), (1, 3, 0))

#: Triples for primes ``p = a^2 + 4b^2`` with ``|b| = 1``.
B_TRIPLES: Tuple[Tuple[int, int, int], ...] = ((0, 1, 2), (0, 3, 2), (1, 0, 3), (1, 2, 3))


class Orientation(enum.Enum):
    """Whether a triple is used as listed or with every index negated modulo four.

    Replacing the primitive root ``g`` by ``g^k`` with ``k = 3 (mod 4)`` maps ``D_i`` onto ``D_-i``, so the listed
    orientation of an ``a`` triple only applies to half of the primitive roots.
    """

    LISTED = 'listed'
    MIRRORED = 'mirrored'


def mirror_triple(indices: Sequence[int]) -> Tuple[int, int, int]:
    """Return the triple with every index negated modulo four."""
    return tuple((-index) % 4 for index in indices)


def dhm_triple_lists(p: int) -> Dict[str, Tuple[Tuple[int, int, int], ...]]:
    """Return the triple lists active for ``p``, keyed by ``'b'`` and ``'a'`` with the ``b`` list first.

    :raises AdmissibilityError: if ``p`` is not congruent to 5 modulo 8, or if neither ``|a| = 1`` nor ``|b| = 1``.
    """
    validate_prime(p)

    if p % 8 != 5:
        raise AdmissibilityError(f'the interleaved construction needs p = 5 (mod 8), got {p}')

    partition = solve_partition(p, QuadraticForm.A4B)
    lists = {}

    if partition.second == 1:
        lists['b'] = B_TRIPLES

    if abs(partition.first) == 1:
        lists['a'] = A_TRIPLES

    if not lists:
        raise AdmissibilityError(
            f'the interleaved construction needs |a| = 1 or |b| = 1 in p = a2+4b2, got a={partition.first}, '
            f'b={partition.second} for p={p}'
        )

    return lists


def _active_triple(p: int, indices: Sequence[int]) -> Tuple[int, int, int]:
    triple = validate_triple(indices)
    lists = dhm_triple_lists(p)

    if not any(triple in triples for triples in lists.values()):
        raise ParameterError(f'the triple {triple} is not in the active lists {lists} for p={p}')

    return triple


def dhm_pairs(
    p: int,
    indices: Sequence[int],
    generator: Optional[int] = None,
    orientation: Orientation = Orientation.LISTED,
) -> FrozenSet[Tuple[int, int]]:
    """Return ``{0} x (D_i + D_j)  +  {1} x (D_j + D_l)  +  {(0, 0)}`` as a set of pairs of ``Z_2 x Z_p``.

    :raises AdmissibilityError: if ``p`` admits no active triple list.
    :raises ParameterError: if the triple is not in an active list.
    """
    i, j, l = _active_triple(p, indices)

    if orientation is Orientation.MIRRORED:
        i, j, l = mirror_triple((i, j, l))

    system = build_system(p, 4, generator)
    pairs = {(0, v) for v in system.union(i, j)}
    pairs.update((1, v) for v in system.union(j, l))
    pairs.add((0, 0))

    return frozenset(pairs)


def dhm_support(
    p: int,
    indices: Sequence[int],
    generator: Optional[int] = None,
    orientation: Orientation = Orientation.LISTED,
) -> FrozenSet[int]:
    """Return the image in ``Z_2p`` of :func:`dhm_pairs`."""
    return crt_interleave(dhm_pairs(p, indices, generator, orientation), p)


def build_dhm(
    p: int,
    indices: Sequence[int],
    generator: Optional[int] = None,
    orientation: Orientation = Orientation.LISTED,
) -> PeriodicSeq:
    """Return the characteristic sequence of period ``2p`` of :func:`dhm_support`.

    :param p: prime with ``p = 5 (mod 8)`` and ``p = a^2 + 4b^2`` with ``|a| = 1`` or ``|b| = 1``.
    :param indices: a triple of one of the lists returned by :func:`dhm_triple_lists`.
    :param generator: primitive root defining the classes, the smallest one if not specified.
    :param orientation: use the triple as listed or mirrored.
    """
    return PeriodicSeq.characteristic(dhm_support(p, indices, generator, orientation), 2 * p)

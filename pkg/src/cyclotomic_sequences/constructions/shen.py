# -*- coding: utf-8 -*-
"""Balanced quaternary sequences of period ``2p`` with two-level autocorrelation, and their equivalence to pairing.

Given the support ``S`` of the interleaved binary sequence of :mod:`.dhm`, the level sets are

    H_0 = ~S & (S - p),  H_1 = ~S & (~S - p),  H_2 = S & (~S - p),  H_3 = S & (S - p)

and ``u(t) = k`` for ``t`` in ``H_k``. These are the level sets of the shift-and-complement pairing of the binary
sequence. Half a period later every ``H_k`` restricted to either residue class modulo two is a single cyclotomic class
of order four, with ``0`` in ``H_0`` and ``p`` in ``H_2``.
"""
from __future__ import annotations

import dataclasses
from typing import FrozenSet, Optional, Sequence, Tuple

from aiida.common.log import AIIDA_LOGGER

from cyclotomic_sequences.cyclotomy import CyclotomicSystem, build_system, order4_formula_table
from cyclotomic_sequences.exceptions import PartitionError
from cyclotomic_sequences.seqcore import (
    BalanceClass,
    PeriodicSeq,
    balance_counts,
    correlation_values,
    crt_pair,
    gaussian,
    shift,
)

from .chung import PairingVariant, chung_quaternary
from .dhm import Orientation, build_dhm, dhm_support, dhm_triple_lists

__all__ = (
    'ShenShape',
    'ShenCheck',
    'ShenEquivalenceReport',
    'pairing_level_sets',
    'build_shen',
    'shen_shape',
    'has_two_level_autocorrelation',
    'resolve_orientation',
    'verify_shen_equivalence',
)

LOGGER = AIIDA_LOGGER.getChild('cyclotomic_sequences.shen')


def pairing_level_sets(support: FrozenSet[int], p: int) -> Tuple[FrozenSet[int], ...]:
    """Return ``(H_0, H_1, H_2, H_3)`` for the support ``S`` of a binary sequence of period ``2p``."""
    period = 2 * p
    inside = frozenset(support)
    outside = frozenset(range(period)) - inside
    inside_back = frozenset((t - p) % period for t in inside)
    outside_back = frozenset((t - p) % period for t in outside)

    return (outside & inside_back, outside & outside_back, inside & outside_back, inside & inside_back)


def _is_partition(sets: Sequence[FrozenSet[int]], period: int) -> bool:
    return sum(len(subset) for subset in sets) == period and frozenset().union(*sets) == frozenset(range(period))


def _has_level_sets(sequence: PeriodicSeq, sets: Sequence[FrozenSet[int]]) -> bool:
    return all(subset == sequence.level_set(symbol) for symbol, subset in enumerate(sets))


def build_shen(
    p: int,
    indices: Sequence[int],
    generator: Optional[int] = None,
    orientation: Orientation = Orientation.LISTED,
) -> PeriodicSeq:
    """Return the quaternary sequence of period ``2p`` with ``u(t) = k`` for ``t`` in ``H_k``.

    Takes the same arguments as :func:`~cyclotomic_sequences.constructions.dhm.build_dhm`.

    :raises PartitionError: if the sets ``H_k`` do not partition ``Z_2p``.
    """
    sets = pairing_level_sets(dhm_support(p, indices, generator, orientation), p)

    if not _is_partition(sets, 2 * p):
        raise PartitionError(f'the level sets do not partition Z_{2 * p}')

    values = [0] * (2 * p)

    for symbol, subset in enumerate(sets):
        for t in subset:
            values[t] = symbol

    return PeriodicSeq.from_array(values, modulus=4)


@dataclasses.dataclass(frozen=True)
class ShenShape:
    """The class indices ``i_k`` and ``j_k`` with ``H_k = psi({0} x D_i_k) + psi({1} x D_j_k)``, up to ``0`` and ``p``.

    ``even`` holds the indices ``i_k`` and ``odd`` the indices ``j_k``.
    """

    even: Tuple[int, int, int, int]
    odd: Tuple[int, int, int, int]


def shen_shape(sequence: PeriodicSeq, system: CyclotomicSystem) -> Optional[ShenShape]:
    """Return the class indices of the level sets of ``sequence``, or ``None`` if it does not have the shape.

    The shape requires ``u(0) = 0``, ``u(p) = 2`` and every level set restricted to either residue class modulo two
    to be exactly one cyclotomic class of order four.
    """
    p = system.p

    if system.e != 4 or sequence.modulus != 4 or sequence.period != 2 * p:
        return None

    if sequence[0] != 0 or sequence[p] != 2:
        return None

    halves = []

    for parity in (0, 1):
        indices = []

        for symbol in range(4):
            residues = frozenset(v for v in range(1, p) if sequence[crt_pair(parity, v, p)] == symbol)

            if not residues:
                return None

            index = system.class_index(min(residues))

            if residues != system.classes[index]:
                return None

            indices.append(index)

        if len(set(indices)) != 4:
            return None

        halves.append(tuple(indices))

    return ShenShape(even=halves[0], odd=halves[1])


def has_two_level_autocorrelation(sequence: PeriodicSeq) -> bool:
    """Return whether every out-of-phase autocorrelation value is ``2`` or ``-2``."""
    allowed = {gaussian(2), gaussian(-2)}
    return all(value in allowed for value in correlation_values(sequence)[1:])


def resolve_orientation(p: int, indices: Sequence[int], generator: Optional[int] = None) -> Optional[Orientation]:
    """Return the orientation in which the triple gives two-level autocorrelation, ``None`` if neither does."""
    for orientation in Orientation:
        if has_two_level_autocorrelation(build_dhm(p, indices, generator, orientation)):
            return orientation

    return None


@dataclasses.dataclass(frozen=True)
class ShenCheck:
    """The outcome of the equivalence checks for one triple."""

    triple_list: str
    triple: Tuple[int, int, int]
    orientation: Orientation
    level_sets: bool
    partition: bool
    shen_shape: bool
    balanced: bool
    optimal: bool
    shift_only_differs: bool

    @property
    def passed(self) -> bool:
        return all((
            self.level_sets,
            self.partition,
            self.shen_shape,
            self.balanced,
            self.optimal,
            self.shift_only_differs,
        ))

    def as_dict(self) -> dict:
        result = dataclasses.asdict(self)
        result['triple'] = list(self.triple)
        result['orientation'] = self.orientation.value
        result['passed'] = self.passed
        return result


@dataclasses.dataclass(frozen=True)
class ShenEquivalenceReport:
    """The checks of every active triple for one prime and primitive root."""

    p: int
    generator: int
    b_sign: int
    checks: Tuple[ShenCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def as_dict(self) -> dict:
        return {
            'p': self.p,
            'generator': self.generator,
            'b_sign': self.b_sign,
            'checks': [check.as_dict() for check in self.checks],
            'passed': self.passed,
        }


def _check_triple(triple_list: str, triple, system: CyclotomicSystem) -> ShenCheck:
    p = system.p
    generator = system.generator
    orientation = Orientation.LISTED

    if triple_list == 'a':
        orientation = resolve_orientation(p, triple, generator) or Orientation.LISTED

    source = build_dhm(p, triple, generator, orientation)
    sets = pairing_level_sets(source.support(), p)
    partition = _is_partition(sets, 2 * p)
    paired = chung_quaternary(source, PairingVariant.SHIFT_COMPLEMENT)
    unmodified = chung_quaternary(source, PairingVariant.SHIFT_ONLY)

    level_sets = _has_level_sets(paired, sets)

    if partition:
        sequence = build_shen(p, triple, generator, orientation)
    else:
        sequence = paired

    check = ShenCheck(
        triple_list=triple_list,
        triple=tuple(triple),
        orientation=orientation,
        level_sets=level_sets,
        partition=partition,
        shen_shape=shen_shape(shift(sequence, p), system) is not None,
        balanced=balance_counts(sequence).classification is BalanceClass.BALANCED,
        optimal=has_two_level_autocorrelation(sequence),
        shift_only_differs=not _has_level_sets(unmodified, sets),
    )

    if not check.passed:
        LOGGER.warning(f'equivalence check failed for p={p}, g={generator}, triple={triple}: {check.as_dict()}')

    return check


def verify_shen_equivalence(p: int, generator: Optional[int] = None) -> ShenEquivalenceReport:
    """Check every active triple of ``p`` for the equivalence of the level-set construction with pairing.

    Failures are recorded in the report rather than raised.

    :raises AdmissibilityError: if ``p`` admits no active triple list.
    """
    lists = dhm_triple_lists(p)
    system = build_system(p, 4, generator)
    b_sign = 1 if order4_formula_table(p, generator=system.generator).signs['b'] > 0 else -1

    checks = tuple(
        _check_triple(triple_list, triple, system) for triple_list, triples in lists.items() for triple in triples
    )

    return ShenEquivalenceReport(p=p, generator=system.generator, b_sign=b_sign, checks=checks)

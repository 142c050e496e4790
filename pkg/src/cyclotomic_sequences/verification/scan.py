# -*- coding: utf-8 -*-
"""Scans of a construction family over a range of primes, written as CSV."""
from __future__ import annotations

import csv
import dataclasses
from typing import IO, Iterable, Iterator, List, Optional, Sequence, Tuple

from aiida.common.log import AIIDA_LOGGER, LOG_LEVEL_REPORT
import sympy

from cyclotomic_sequences.analysis import analyze_sequence
from cyclotomic_sequences.constructions import (
    COVERED_TRIPLES,
    Family,
    Orientation,
    PairingVariant,
    build_dhm,
    build_order8,
    build_shen,
    build_tang_lindner,
    chung_quaternary,
    dhm_triple_lists,
    resolve_orientation,
)
from cyclotomic_sequences.cyclotomy import find_primitive_root, order8_admissibility, primitive_roots
from cyclotomic_sequences.exceptions import AdmissibilityError, ParameterError
from cyclotomic_sequences.seqcore import PeriodicSeq

__all__ = ('SCAN_COLUMNS', 'FAMILY_ALIASES', 'ScanRow', 'resolve_family', 'scan_family', 'write_scan_csv')

LOGGER = AIIDA_LOGGER.getChild('cyclotomic_sequences.scan')

SCAN_COLUMNS = ('family', 'p', 'period', 'generator', 'indices', 'rmax_sq', 'balance', 'lincomp_f4')

FAMILY_ALIASES = {'tang-lindner': Family.TANG_LINDNER}


@dataclasses.dataclass(frozen=True)
class ScanRow:
    """One constructed sequence of a scan."""

    family: Family
    p: int
    period: int
    generator: int
    indices: Optional[Tuple[int, int, int]]
    rmax_sq: int
    balance: str
    lincomp_f4: int

    def as_dict(self) -> dict:
        """Return the row keyed by :data:`SCAN_COLUMNS`."""
        return {
            'family': self.family.value,
            'p': self.p,
            'period': self.period,
            'generator': self.generator,
            'indices': ''.join(str(index) for index in self.indices) if self.indices else '',
            'rmax_sq': self.rmax_sq,
            'balance': self.balance,
            'lincomp_f4': self.lincomp_f4,
        }


def resolve_family(name: str) -> Family:
    """Return the family named ``name``, which is a family value or an alias of :data:`FAMILY_ALIASES`.

    :raises ParameterError: if ``name`` names no family.
    """
    if name in FAMILY_ALIASES:
        return FAMILY_ALIASES[name]

    try:
        return Family(name)
    except ValueError as exception:
        choices = ', '.join([family.value for family in Family] + list(FAMILY_ALIASES))
        raise ParameterError(f'unknown family `{name}`, choose from {choices}') from exception


def _generators(p: int, all_generators: bool) -> Sequence[int]:
    return primitive_roots(p) if all_generators else (find_primitive_root(p),)


def _interleaved_triples(p: int) -> List[Tuple[str, Tuple[int, int, int]]]:
    try:
        lists = dhm_triple_lists(p)
    except AdmissibilityError:
        return []

    return [(triple_list, triple) for triple_list, triples in lists.items() for triple in triples]


def _sequences(family: Family, p: int, generator: int) -> Iterator[Tuple[Optional[Tuple[int, int, int]], PeriodicSeq]]:
    """Yield the ``(indices, sequence)`` pairs of ``family`` for ``p`` and ``generator``."""
    if family is Family.ORDER8:
        yield None, build_order8(p, generator)
        return

    if family is Family.TANG_LINDNER:
        for triple in COVERED_TRIPLES[((p - 1) // 4) % 2]:
            yield triple, build_tang_lindner(p, triple, generator)
        return

    for triple_list, triple in _interleaved_triples(p):
        orientation = Orientation.LISTED

        if triple_list == 'a':
            orientation = resolve_orientation(p, triple, generator) or Orientation.LISTED

        if family is Family.DHM:
            yield triple, build_dhm(p, triple, generator, orientation)
        elif family is Family.SHEN:
            yield triple, build_shen(p, triple, generator, orientation)
        else:
            source = build_dhm(p, triple, generator, orientation)
            yield triple, chung_quaternary(source, PairingVariant.SHIFT_COMPLEMENT)


def _admissible(family: Family, p: int) -> bool:
    if family is Family.ORDER8:
        return bool(order8_admissibility(p))

    if family is Family.TANG_LINDNER:
        return p % 4 == 1

    return bool(_interleaved_triples(p))


def scan_family(family: Family, p_min: int, p_max: int, all_generators: bool = False) -> Iterator[ScanRow]:
    """Yield one row per admissible ``(p, generator, indices)`` of ``family`` with ``p_min <= p <= p_max``.

    The interleaved families use the triples of every active list; the ``chung`` family pairs those binary sequences
    with the shift-and-complement variant.

    An empty range, with ``p_min > p_max``, yields no rows.

    :param all_generators: use every primitive root instead of the smallest one.
    """
    LOGGER.log(LOG_LEVEL_REPORT, f'scanning the `{family.value}` family for primes in [{p_min}, {p_max}]')

    for p in sympy.primerange(max(p_min, 3), p_max + 1):
        if not _admissible(family, p):
            continue

        for generator in _generators(p, all_generators):
            for indices, sequence in _sequences(family, p, generator):
                analysis = analyze_sequence(sequence)
                row = ScanRow(
                    family=family,
                    p=p,
                    period=sequence.period,
                    generator=generator,
                    indices=indices,
                    rmax_sq=analysis.rmax_sq,
                    balance=analysis.balance.classification.value,
                    lincomp_f4=analysis.complexity.linear_complexity,
                )
                LOGGER.debug(f'scanned {row.as_dict()}')
                yield row


def write_scan_csv(rows: Iterable[ScanRow], handle: IO[str]) -> int:
    """Write ``rows`` with a header in the column order of :data:`SCAN_COLUMNS` and return the number of rows."""
    writer = csv.DictWriter(handle, fieldnames=SCAN_COLUMNS, lineterminator='\n')
    writer.writeheader()
    count = 0

    for row in rows:
        writer.writerow(row.as_dict())
        count += 1

    return count

# -*- coding: utf-8 -*-
"""Closed-form cyclotomic numbers of orders four and eight, resolved against brute-force counting.

The closed forms only determine the tables up to the signs of the second components of the quadratic partitions,
which depend on the primitive root. Every table returned here is therefore matched against the exhaustive count of the
corresponding :class:`~cyclotomic_sequences.cyclotomy.classes.CyclotomicSystem`, which stays authoritative.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Dict, Optional, Tuple

from aiida.common.log import AIIDA_LOGGER

from cyclotomic_sequences.exceptions import AdmissibilityError, ConventionError, ExactnessError, ParameterError

from .classes import CycNumTable, build_system, cyclotomic_numbers
from .partitions import QuadraticForm, QuadraticPartition, solve_partition

__all__ = (
    'ResolvedTable', 'order4_formula_values', 'order4_formula_table', 'order8_formula_values', 'order8_formula_table'
)

LOGGER = AIIDA_LOGGER.getChild('cyclotomic_sequences.tables')

# For each pair (h, k) of order eight, the canonical pair whose value it shares.
ORDER8_RELATIONS: Tuple[Tuple[Tuple[int, int], ...], ...] = (
    ((0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7)),
    ((0, 1), (0, 7), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 2)),
    ((0, 2), (1, 2), (0, 6), (1, 6), (2, 4), (2, 5), (2, 4), (1, 3)),
    ((0, 3), (1, 3), (1, 6), (0, 5), (1, 5), (2, 5), (2, 5), (1, 4)),
    ((0, 4), (1, 4), (2, 4), (1, 5), (0, 4), (1, 4), (2, 4), (1, 5)),
    ((0, 5), (1, 5), (2, 5), (2, 5), (1, 4), (0, 3), (1, 3), (1, 6)),
    ((0, 6), (1, 6), (2, 4), (2, 5), (2, 4), (1, 3), (0, 2), (1, 2)),
    ((0, 7), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 2), (0, 1)),
)


@dataclasses.dataclass(frozen=True)
class ResolvedTable:
    """A closed-form table together with the signs that made it agree with brute force."""

    table: CycNumTable
    signs: Dict[str, int]


def _exact(numerator: int, denominator: int) -> int:
    if numerator % denominator:
        raise ExactnessError(f'{numerator} is not divisible by {denominator}')
    return numerator // denominator


def order4_formula_values(p: int, a: int, b: int) -> CycNumTable:
    """Return the order-four table given by the closed forms for ``p = a^2 + 4b^2`` with ``a = 1 (mod 4)``.

    The layout depends on the parity of ``f = (p - 1) / 4``. No consistency with a primitive root is implied; see
    :func:`order4_formula_table`.

    :raises ExactnessError: if a closed form does not evaluate to an integer, i.e. ``a`` or ``b`` are not a partition.
    """
    f = (p - 1) // 4

    if f % 2:
        A = _exact(p - 7 + 2 * a, 16)
        B = _exact(p + 1 + 2 * a - 8 * b, 16)
        C = _exact(p + 1 - 6 * a, 16)
        D = _exact(p + 1 + 2 * a + 8 * b, 16)
        E = _exact(p - 3 - 2 * a, 16)
        layout = {
            (0, 0): A, (2, 2): A, (2, 0): A,
            (0, 1): B, (1, 3): B, (3, 2): B,
            (1, 2): D, (0, 3): D, (3, 1): D,
            (0, 2): C,
        }
    else:
        A = _exact(p - 11 - 6 * a, 16)
        B = _exact(p - 3 + 2 * a + 8 * b, 16)
        C = _exact(p - 3 + 2 * a, 16)
        D = _exact(p - 3 + 2 * a - 8 * b, 16)
        E = _exact(p + 1 - 2 * a, 16)
        layout = {
            (0, 0): A,
            (0, 1): B, (1, 0): B, (3, 3): B,
            (0, 2): C, (2, 0): C, (2, 2): C,
            (0, 3): D, (3, 0): D, (1, 1): D,
        }

    entries = tuple(tuple(layout.get((i, j), E) for j in range(4)) for i in range(4))
    return CycNumTable(p=p, e=4, entries=entries)


def order4_formula_table(
    p: int, partition: Optional[QuadraticPartition] = None, generator: Optional[int] = None
) -> ResolvedTable:
    """Return the closed-form order-four table whose sign of ``b`` matches brute force for ``generator``.

    :param p: prime with ``p = 1 (mod 4)``.
    :param partition: the normalized ``A4B`` partition of ``p``, solved if not specified.
    :param generator: primitive root defining the classes, the smallest one if not specified.
    :raises AdmissibilityError: if ``p`` is not congruent to 1 modulo 4.
    :raises ConventionError: if neither sign of ``b`` reproduces the brute-force table.
    """
    if p % 4 != 1:
        raise AdmissibilityError(f'order four cyclotomic numbers need p = 1 (mod 4), got {p}')

    if partition is None:
        partition = solve_partition(p, QuadraticForm.A4B)
    elif partition.form is not QuadraticForm.A4B or partition.p != p:
        raise ParameterError(f'expected the a2+4b2 partition of {p}, got {partition}')

    brute = cyclotomic_numbers(build_system(p, 4, generator))

    for b in partition.seconds:
        candidate = order4_formula_values(p, partition.first, b)
        if candidate.entries == brute.entries:
            return ResolvedTable(table=candidate, signs={'a': partition.first, 'b': b})

    raise ConventionError(f'no sign of b reproduces the order four cyclotomic numbers of p={p}')


def order8_formula_values(p: int, x: int, y: int, a: int, b: int) -> CycNumTable:
    """Return the order-eight table for ``p = x^2 + 4y^2 = a^2 + 2b^2``, ``p = 1 (mod 16)``.

    :raises ExactnessError: if a value is not an integer.
    """
    canonical = {
        (0, 0): p - 23 + 6 * x,
        (0, 1): p - 7 + 2 * x + 4 * a,
        (0, 2): p - 7 - 2 * x - 8 * a - 16 * y,
        (0, 4): p - 7 - 10 * x,
        (0, 6): p - 7 - 2 * x - 8 * a + 16 * y,
        (1, 2): p + 1 - 6 * x + 4 * a,
        (1, 3): p + 1 + 2 * x - 4 * a - 16 * b,
        (1, 4): p + 1 + 2 * x - 4 * a + 16 * y,
        (1, 5): p + 1 + 2 * x - 4 * a - 16 * y,
        (1, 6): p + 1 + 2 * x - 4 * a + 16 * b,
        (2, 4): p + 1 + 6 * x + 8 * a,
        (2, 5): p + 1 - 6 * x + 4 * a,
    }
    for pair in ((0, 3), (0, 5), (0, 7)):
        canonical[pair] = canonical[(0, 1)]

    entries = tuple(tuple(_exact(canonical[pair], 64) for pair in row) for row in ORDER8_RELATIONS)
    return CycNumTable(p=p, e=8, entries=entries)


def order8_formula_table(p: int, generator: Optional[int] = None) -> ResolvedTable:
    """Return the closed-form order-eight table whose signs of ``y`` and ``b`` match brute force.

    This table is cross-check data only: the brute-force count stays authoritative.

    :param p: prime with ``p = 1 (mod 16)``.
    :param generator: primitive root defining the classes, the smallest one if not specified.
    :raises AdmissibilityError: if ``p`` is not congruent to 1 modulo 16.
    :raises ConventionError: if no sign combination reproduces the brute-force table.
    """
    if p % 16 != 1:
        raise AdmissibilityError(f'the order eight table needs p = 1 (mod 16), got {p}')

    x4y = solve_partition(p, QuadraticForm.X4Y)
    a2b = solve_partition(p, QuadraticForm.A2B)
    brute = cyclotomic_numbers(build_system(p, 8, generator))

    for y, b in itertools.product(x4y.seconds, a2b.seconds):
        try:
            candidate = order8_formula_values(p, x4y.first, y, a2b.first, b)
        except ExactnessError:
            continue

        if candidate.entries == brute.entries:
            return ResolvedTable(table=candidate, signs={'x': x4y.first, 'y': y, 'a': a2b.first, 'b': b})

    LOGGER.warning(f'order eight closed forms disagree with brute force for p={p}')
    raise ConventionError(f'no signs of (y, b) reproduce the order eight cyclotomic numbers of p={p}')
